"""Inversion sequences and the joint distribution of their five statistics.

An inversion sequence of length n is e = (e_0, ..., e_{n-1}) with e_0 = 0
and 0 <= e_i <= i; there are exactly n! of them.  The tracked statistics:

  inv    strict descent pairs i < j with e_i > e_j
  sum    sum of the entries
  noz    number of zero entries
  dist   number of distinct entries
  tel    n - dist (repeated-value slack)
  uel    n - max(e) - 1 (untouched values above the maximum)
  maxent largest entry

The joint generating polynomial over all of I_n assigns
x^noz y^tel z^uel p^sum q^inv to each sequence.
"""

from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple

from .polyring import ExpVec, MultiPoly, QLaurent
from .qcalc import q_binomial

InvSeq = tuple[int, ...]

#: enumeration guard; 12! is the largest sweep that stays desk-scale
MAX_ENUM_LENGTH = 12

#: guard for whole-I_n polynomial accumulation
MAX_BRUTE_LENGTH = 10


class SeqStats(NamedTuple):
    inv: int
    sum: int
    noz: int
    dist: int
    tel: int
    uel: int
    maxent: int


def validate(e: Iterable[int]) -> InvSeq:
    """Check the defining bounds and return e as a tuple."""
    e = tuple(e)
    if not e:
        raise ValueError("inversion sequence must be nonempty")
    for i, v in enumerate(e):
        if not isinstance(v, int) or v < 0 or v > i:
            raise ValueError(f"entry e_{i}={v!r} violates 0 <= e_i <= i")
    return e


def inversion_sequences(n: int, *, last_entry: int | None = None,
                        allow_large: bool = False) -> Iterator[InvSeq]:
    """Yield all of I_n in lexicographic order.

    `last_entry` restricts to sequences with the given final entry, which
    partitions I_n into n independent slices (handy for splitting sweeps).
    Lengths above MAX_ENUM_LENGTH need allow_large=True.
    """
    if n < 1:
        raise ValueError("length must be >= 1")
    if n > MAX_ENUM_LENGTH and not allow_large:
        raise ValueError(f"length {n} above enumeration bound {MAX_ENUM_LENGTH}; "
                         "pass allow_large=True to override")
    if last_entry is not None and not 0 <= last_entry < n:
        raise ValueError("last entry out of range")

    e = [0] * n
    if last_entry is not None:
        e[n - 1] = last_entry
    top = n - 2 if last_entry is not None else n - 1
    while True:
        yield tuple(e)
        i = top
        while i > 0 and e[i] == i:
            e[i] = 0
            i -= 1
        if i <= 0:
            return
        e[i] += 1


def sequence_stats(e: Iterable[int]) -> SeqStats:
    """All five statistics (plus dist and maxent) in one pass.

    >>> sequence_stats((0, 0, 0, 2, 4, 0, 5))
    SeqStats(inv=2, sum=11, noz=4, dist=4, tel=3, uel=1, maxent=5)
    """
    e = tuple(e)
    n = len(e)
    inv = 0
    for i in range(n - 1):
        ei = e[i]
        for j in range(i + 1, n):
            if ei > e[j]:
                inv += 1
    total = sum(e)
    noz = e.count(0)
    dist = len(set(e))
    mx = max(e)
    return SeqStats(inv, total, noz, dist, n - dist, n - mx - 1, mx)


def occurrence_counts(e: Iterable[int]) -> tuple[int, ...]:
    """Frequency vector (|e|_0, ..., |e|_{n-1}); |e|_j counts entries equal j."""
    e = tuple(e)
    counts = [0] * len(e)
    for v in e:
        counts[v] += 1
    return tuple(counts)


def format_sequence(e: Iterable[int]) -> str:
    """Digit-joined for length <= 10 (e.g. '0010'), comma-joined beyond."""
    e = tuple(e)
    if len(e) <= 10:
        return "".join(str(v) for v in e)
    return ",".join(str(v) for v in e)


def brute_joint_poly(n: int) -> MultiPoly:
    """Sum of x^noz y^tel z^uel p^sum q^inv over all of I_n, by enumeration."""
    if n < 1 or n > MAX_BRUTE_LENGTH:
        raise ValueError(f"length must be in 1..{MAX_BRUTE_LENGTH}")
    acc: dict[ExpVec, int] = {}
    for e in inversion_sequences(n):
        s = sequence_stats(e)
        key = (s.noz, s.tel, s.uel, s.sum, s.inv)
        acc[key] = acc.get(key, 0) + 1
    return MultiPoly._raw(acc)


def _validate_counts(counts: Iterable[int]) -> tuple[int, ...]:
    v = tuple(counts)
    n = len(v)
    if n < 1:
        raise ValueError("frequency vector must be nonempty")
    if any(c < 0 for c in v):
        raise ValueError("negative multiplicity")
    if sum(v) != n:
        raise ValueError("multiplicities must sum to the length")
    for j, c in enumerate(v):
        if c > n - j:
            raise ValueError(f"value {j} fits at most {n - j} slots, got {c}")
    return v


def fixed_freq_poly(counts: Iterable[int]) -> QLaurent:
    """Inversion generating polynomial of the sequences with a fixed
    frequency vector, as a product of Gaussian binomials.

    Scanning values from high to low, value j has m_j = n - j - (number of
    entries above j) admissible slots and contributes qbinom(m_j, |e|_j).
    A slot deficit makes some factor vanish, so vectors realized by no
    sequence give 0 rather than an error.
    """
    v = _validate_counts(counts)
    n = len(v)
    result = QLaurent.one()
    above = 0  # entries with value > j
    for j in range(n - 1, -1, -1):
        m = n - j - above
        if v[j] > m:
            return QLaurent.zero()
        result = result * q_binomial(m, v[j])
        above += v[j]
    return result


def brute_fixed_freq(counts: Iterable[int]) -> QLaurent:
    """Same polynomial by filtering the full enumeration (oracle path)."""
    v = _validate_counts(counts)
    n = len(v)
    if n > 9:
        raise ValueError("brute-force bound is length 9")
    acc: dict[int, int] = {}
    for e in inversion_sequences(n):
        if occurrence_counts(e) == v:
            i = sequence_stats(e).inv
            acc[i] = acc.get(i, 0) + 1
    return QLaurent(acc)


def frequency_vectors(n: int) -> Iterator[tuple[int, ...]]:
    """All vectors v with sum(v) = n and v_j <= n - j (value bounds only)."""
    if n < 1:
        raise ValueError("length must be >= 1")

    def rec(j: int, remaining: int, prefix: list[int]) -> Iterator[tuple[int, ...]]:
        if j == n:
            if remaining == 0:
                yield tuple(prefix)
            return
        for c in range(min(remaining, n - j) + 1):
            prefix.append(c)
            yield from rec(j + 1, remaining - c, prefix)
            prefix.pop()

    yield from rec(0, n, [])
