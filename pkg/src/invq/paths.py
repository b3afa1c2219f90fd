"""Weakly increasing inversion sequences, lattice paths, and the q = -1 involution.

A weakly increasing inversion sequence corresponds to a lattice path from
(0, 0) to (n, n) staying weakly below the diagonal: read off
E N^(e_1 - e_0) E N^(e_2 - e_1) ... E N^(n - e_{n-1}).  Words are strings
over the alphabet {E, N}; mapping E to an up-step and N to a down-step
turns them into Dyck paths, whose peak/valley/return statistics mirror the
sequence statistics.

The module also hosts the sign-reversing involution behind the q = -1
evaluation of the inversion-count marginal: a backward scan that either
certifies an entry as inert or swaps one adjacent pair and stops.  Its
fixed points are counted by the involution numbers.
"""

from __future__ import annotations

import math
from collections import Counter
from typing import Iterator, NamedTuple

from .invseq import InvSeq, sequence_stats, validate

LatticePath = str


class DyckStats(NamedTuple):
    peaks: int
    valleys: int
    returns: int
    first_peak_height: int
    last_peak_height: int


# ------------------------------------------------------------- enumeration

def weakly_increasing_sequences(n: int) -> Iterator[InvSeq]:
    """The Catalan-many weakly increasing members of I_n, lexicographically."""
    if n < 1:
        raise ValueError("length must be >= 1")

    def rec(prefix: list[int]) -> Iterator[InvSeq]:
        i = len(prefix)
        if i == n:
            yield tuple(prefix)
            return
        for v in range(prefix[-1] if prefix else 0, i + 1):
            prefix.append(v)
            yield from rec(prefix)
            prefix.pop()

    yield from rec([])


def lattice_paths(n: int) -> Iterator[LatticePath]:
    """All E/N words of semilength n weakly below the diagonal (E-first DFS)."""
    if n < 1:
        raise ValueError("semilength must be >= 1")

    def rec(word: list[str], easts: int, norths: int) -> Iterator[LatticePath]:
        if easts == n and norths == n:
            yield "".join(word)
            return
        if easts < n:
            word.append("E")
            yield from rec(word, easts + 1, norths)
            word.pop()
        if norths < easts:
            word.append("N")
            yield from rec(word, easts, norths + 1)
            word.pop()

    yield from rec([], 0, 0)


def validate_path(word: str) -> str:
    """Check the subdiagonal path conditions and return the word."""
    if not word or len(word) % 2:
        raise ValueError("word length must be a positive even number")
    easts = norths = 0
    for ch in word:
        if ch == "E":
            easts += 1
        elif ch == "N":
            norths += 1
        else:
            raise ValueError(f"letters must be E or N, got {ch!r}")
        if norths > easts:
            raise ValueError("path crosses the diagonal")
    if easts != norths:
        raise ValueError("path must end on the diagonal")
    return word


# --------------------------------------------------------------- bijection

def path_from_sequence(e: InvSeq) -> LatticePath:
    """E N^(e_1-e_0) E N^(e_2-e_1) ... E N^(n-e_{n-1}) for weakly increasing e.

    >>> path_from_sequence((0, 1, 1, 2))
    'ENEENENN'
    """
    e = validate(e)
    n = len(e)
    if any(e[i] > e[i + 1] for i in range(n - 1)):
        raise ValueError("sequence must be weakly increasing")
    pieces = []
    for i in range(n):
        pieces.append("E")
        nxt = e[i + 1] if i + 1 < n else n
        pieces.append("N" * (nxt - e[i]))
    return "".join(pieces)


def sequence_from_path(word: LatticePath) -> InvSeq:
    """Inverse reading: e_i is the height (N-count) before the (i+1)-st E.

    >>> sequence_from_path('EENENNEN')
    (0, 0, 1, 3)
    """
    validate_path(word)
    e = []
    norths = 0
    for ch in word:
        if ch == "E":
            e.append(norths)
        else:
            norths += 1
    return tuple(e)


def to_dyck_word(word: LatticePath) -> str:
    """E -> U (up), N -> D (down); subdiagonal words become Dyck words."""
    validate_path(word)
    return word.replace("E", "U").replace("N", "D")


def reverse_swap(word: LatticePath) -> LatticePath:
    """Reverse the word and exchange E with N; an involution on paths.

    >>> reverse_swap('ENEENENN')
    'EENENNEN'
    """
    validate_path(word)
    swapped = {"E": "N", "N": "E"}
    return "".join(swapped[ch] for ch in reversed(word))


def dyck_stats(word: LatticePath) -> DyckStats:
    """Peak, valley and return statistics of the Dyck view of the word.

    A peak is an EN factor, a valley an NE factor, a return an N-step
    landing on the diagonal.  Peak heights are measured at the top.
    """
    validate_path(word)
    height = 0
    peaks = valleys = returns = 0
    first_peak = last_peak = 0
    for i, ch in enumerate(word):
        if ch == "E":
            height += 1
            if i and word[i - 1] == "N":
                valleys += 1
        else:
            if word[i - 1] == "E":
                peaks += 1
                last_peak = height
                if peaks == 1:
                    first_peak = height
            height -= 1
            if height == 0:
                returns += 1
    return DyckStats(peaks, valleys, returns, first_peak, last_peak)


# ---------------------------------------------------- q = -1 sign involution

def sign_reversing_involution(e: InvSeq) -> InvSeq:
    """Backward scan; swap the first non-inert adjacent pair, if any.

    From i = n-1 downward: an entry with e_i = i is inert (step to i-1);
    a repeat e_i = e_{i-1} freezes the pair (jump to i-2); otherwise swap
    e_{i-1} and e_i and stop.  Sequences surviving the whole scan are the
    fixed points.  A swap changes the inversion count by exactly one, so
    the map cancels non-fixed sequences in pairs under q = -1.

    >>> sign_reversing_involution((0, 0, 0, 1))
    (0, 0, 1, 0)
    """
    e = validate(e)
    w = list(e)
    i = len(w) - 1
    while i >= 1:
        if w[i] == i:
            i -= 1
            continue
        if w[i] == w[i - 1]:
            i -= 2
            continue
        # e_0 = 0 makes both rules apply at i = 1, so no swap reaches slot 0
        assert i >= 2, "swap would touch the forced leading zero"
        w[i - 1], w[i] = w[i], w[i - 1]
        return tuple(w)
    return e


def involution_fixed_points(n: int) -> list[InvSeq]:
    """Fixed points of the scan over I_n (lexicographic)."""
    from .invseq import inversion_sequences

    return [e for e in inversion_sequences(n)
            if sign_reversing_involution(e) == e]


def involution_number(n: int) -> int:
    """Number of involutions in the symmetric group S_n:
    a(n) = a(n-1) + (n-1) a(n-2), a(0) = a(1) = 1."""
    if n < 0:
        raise ValueError("needs n >= 0")
    prev, cur = 1, 1
    for m in range(2, n + 1):
        prev, cur = cur, cur + (m - 1) * prev
    return cur if n else 1


# ----------------------------------------------------- counting / triangles

def catalan(n: int) -> int:
    """n-th Catalan number C(2n, n) / (n + 1)."""
    if n < 0:
        raise ValueError("needs n >= 0")
    return math.comb(2 * n, n) // (n + 1)


def narayana(n: int, k: int) -> int:
    """Dyck paths of semilength n with exactly k valleys."""
    if n < 1 or k < 0 or k > n - 1:
        return 0
    return math.comb(n, k + 1) * math.comb(n, k) // n


def narayana_row(n: int) -> list[int]:
    return [narayana(n, k) for k in range(n)]


def returns_triangle_row(n: int) -> list[int]:
    """Dyck paths of semilength n by number of returns, k = 1..n.

    Built from T(n, k) = T(n-1, k-1) + T(n, k+1) with T(1, 1) = 1,
    filling each row from k = n downward.
    """
    if n < 1:
        raise ValueError("needs n >= 1")
    row = [1]  # row for n = 1, index k-1
    for m in range(2, n + 1):
        prev = row
        row = [0] * m
        row[m - 1] = prev[m - 2]
        for k in range(m - 1, 0, -1):
            row[k - 1] = (prev[k - 2] if k >= 2 else 0) + row[k]
    return row


def _distribution(values) -> Counter:
    return Counter(values)


def returns_distribution(n: int) -> Counter:
    """Return counts over all paths of semilength n, by enumeration."""
    return _distribution(dyck_stats(w).returns for w in lattice_paths(n))


def first_peak_distribution(n: int) -> Counter:
    return _distribution(dyck_stats(w).first_peak_height
                         for w in lattice_paths(n))


def valley_distribution(n: int) -> Counter:
    return _distribution(dyck_stats(w).valleys for w in lattice_paths(n))


def peak_sum_distribution(n: int) -> Counter:
    """Distribution of first plus last peak height (a single peak counts
    twice), over all paths of semilength n."""
    out: Counter = Counter()
    for w in lattice_paths(n):
        s = dyck_stats(w)
        out[s.first_peak_height + s.last_peak_height] += 1
    return out


def peak_sum_row(n: int) -> list[int]:
    """peak_sum_distribution flattened to counts for sums 2, 3, ..., 2n."""
    dist = peak_sum_distribution(n)
    return [dist.get(s, 0) for s in range(2, 2 * n + 1)]


def peak_height_poly(n: int):
    """sum over paths of x^(first peak height) * z^(last peak height).

    Computed over weakly increasing sequences: noz gives the first peak
    height and uel + 1 the last, so this is z * (q = 0 slice of the joint
    polynomial at y = p = 1).  Symmetric in x and z via reverse_swap.
    """
    from .polyring import MultiPoly

    acc: dict[tuple[int, int, int, int, int], int] = {}
    for e in weakly_increasing_sequences(n):
        s = sequence_stats(e)
        key = (s.noz, 0, s.uel + 1, 0, 0)
        acc[key] = acc.get(key, 0) + 1
    return MultiPoly._raw(acc)
