"""Three q-Stirling families and their inversion-sequence model.

stirling2_q is the family with recurrence
    S(n, k) = q^(n-k) S(n-1, k-1) + [k]_q S(n-1, k);
it equals the generating polynomial of the augmented inversion count over
the sequences in I_n with exactly k zeros and pairwise distinct nonzero
entries.  The Milne and Leroux-Medicis variants are related to it by a
q -> 1/q substitution together with an explicit q-power prefactor.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator

from .invseq import InvSeq, inversion_sequences, validate
from .polyring import QLaurent
from .qcalc import q_int


@lru_cache(maxsize=None)
def stirling2_q(n: int, k: int) -> QLaurent:
    """q-Stirling number of the second kind (inversion flavor)."""
    if n < 0:
        raise ValueError("needs n >= 0")
    if n == 0:
        return QLaurent.one() if k == 0 else QLaurent.zero()
    if k < 1 or k > n:
        return QLaurent.zero()
    return (stirling2_q(n - 1, k - 1).times_q_power(n - k)
            + q_int(k) * stirling2_q(n - 1, k))


@lru_cache(maxsize=None)
def stirling2_q_milne(n: int, k: int) -> QLaurent:
    """Milne's variant: S(n+1, j) = [j] S(n, j) + q^(j-1) S(n, j-1),
    anchored at S(1, 1) = 1."""
    if n < 1:
        raise ValueError("needs n >= 1")
    if k < 1 or k > n:
        return QLaurent.zero()
    if n == 1:
        return QLaurent.one()
    return (q_int(k) * stirling2_q_milne(n - 1, k)
            + stirling2_q_milne(n - 1, k - 1).times_q_power(k - 1))


@lru_cache(maxsize=None)
def stirling2_q_star(n: int, k: int) -> QLaurent:
    """Leroux-Medicis variant: S(n+1, k) = [k] S(n, k) + S(n, k-1)."""
    if n < 0:
        raise ValueError("needs n >= 0")
    if n == 0:
        return QLaurent.one() if k == 0 else QLaurent.zero()
    if k < 1 or k > n:
        return QLaurent.zero()
    return q_int(k) * stirling2_q_star(n - 1, k) + stirling2_q_star(n - 1, k - 1)


def stirling2(n: int, k: int) -> int:
    """Classical Stirling set number (the q = 1 collapse of all three)."""
    return stirling2_q(n, k).evaluate(1)


# ------------------------------------------------- inversion-sequence model

def is_distinct_nonzero(e: InvSeq) -> bool:
    """True when every nonzero entry of e occurs exactly once."""
    nonzero = [v for v in e if v]
    return len(nonzero) == len(set(nonzero))


def excluded_values(e: InvSeq) -> tuple[int, ...]:
    """Ascending list of the values in 1..n-1 not used by e."""
    e = validate(e)
    if not is_distinct_nonzero(e):
        raise ValueError("nonzero entries must be pairwise distinct")
    used = {v for v in e if v}
    return tuple(v for v in range(1, len(e)) if v not in used)


def augmented_word(e: InvSeq) -> tuple[int, ...]:
    """e with its excluded values appended in ascending order."""
    return tuple(e) + excluded_values(e)


def augmented_inversions(e: InvSeq) -> int:
    """Inversion count of the augmented word.

    >>> augmented_inversions((0, 1, 0, 0, 3, 4, 0, 0))
    10
    """
    w = augmented_word(e)
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w))
               if w[i] > w[j])


def zero_marked_sequences(n: int, k: int) -> Iterator[InvSeq]:
    """Members of I_n with exactly k zeros and distinct nonzero entries."""
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    for e in inversion_sequences(n):
        if e.count(0) == k and is_distinct_nonzero(e):
            yield e


def stirling2_q_by_enumeration(n: int, k: int) -> QLaurent:
    """Augmented-inversion generating polynomial over zero_marked_sequences.

    Brute-force oracle for stirling2_q; bounded at n <= 9.
    """
    if n > 9:
        raise ValueError("brute-force bound is n <= 9")
    acc: dict[int, int] = {}
    for e in zero_marked_sequences(n, k):
        i = augmented_inversions(e)
        acc[i] = acc.get(i, 0) + 1
    return QLaurent(acc)


# ------------------------------------------------------- family conversions

def milne_from_standard(n: int, j: int) -> QLaurent:
    """Milne's variant recovered from stirling2_q by inverting q and
    multiplying by q^((j-1)(2n-j)/2); lands back in the polynomial ring."""
    exp = (j - 1) * (2 * n - j)
    if exp % 2:
        raise AssertionError("prefactor exponent is always even")
    out = stirling2_q(n, j).substitute_q_inverse().times_q_power(exp // 2)
    if not out.is_polynomial():
        raise AssertionError("conversion left the polynomial ring")
    return out


def star_from_standard(n: int, k: int) -> QLaurent:
    """Leroux-Medicis variant recovered from stirling2_q via q -> 1/q and
    the prefactor q^((k-1)(n-k))."""
    out = (stirling2_q(n, k).substitute_q_inverse()
           .times_q_power((k - 1) * (n - k)))
    if not out.is_polynomial():
        raise AssertionError("conversion left the polynomial ring")
    return out
