"""Permutation statistics and the classical identity checks tying the
q-Stirling families to the joint Euler-Mahonian polynomial.

Everything here is exact: series appear only as explicitly truncated
polynomials, and every check compares term maps after the documented
truncation degree.
"""

from __future__ import annotations

from itertools import permutations as _permutations
from typing import Iterator

from .polyring import ExpVec, MultiPoly, QLaurent
from .qcalc import q_factorial, q_int, q_pochhammer_x
from .qstirling import stirling2_q, stirling2_q_milne

MAX_PERM_LENGTH = 9


def permutations(n: int) -> Iterator[tuple[int, ...]]:
    """S_n in lexicographic one-line notation."""
    if n < 1:
        raise ValueError("needs n >= 1")
    if n > MAX_PERM_LENGTH:
        raise ValueError(f"enumeration bound is n <= {MAX_PERM_LENGTH}")
    return _permutations(range(1, n + 1))


def descent_count(sigma: tuple[int, ...]) -> int:
    return sum(1 for i in range(len(sigma) - 1) if sigma[i] > sigma[i + 1])


def major_index(sigma: tuple[int, ...]) -> int:
    """Sum of descent positions, positions counted from 1."""
    return sum(i + 1 for i in range(len(sigma) - 1) if sigma[i] > sigma[i + 1])


def euler_mahonian_poly(n: int) -> MultiPoly:
    """sum over S_n of x^descents q^major, by enumeration."""
    acc: dict[ExpVec, int] = {}
    for sigma in permutations(n):
        key = (descent_count(sigma), 0, 0, 0, major_index(sigma))
        acc[key] = acc.get(key, 0) + 1
    return MultiPoly._raw(acc)


def eulerian_row(n: int) -> list[int]:
    """Descent distribution of S_n (the q = 1 collapse), k = 0..n-1."""
    by_x = euler_mahonian_poly(n).eval_partial({"q": 1}).coefficients_in("x")
    return [by_x[k].constant_value() if k in by_x else 0 for k in range(n)]


def max_displacement_counts(n: int) -> list[int]:
    """Permutations of n by max(sigma_i - i), value k = 0..n-1."""
    counts = [0] * n
    for sigma in permutations(n):
        counts[max(v - i for i, v in enumerate(sigma, start=1))] += 1
    return counts


def _q_falling_product(k: int, j: int) -> QLaurent:
    # [k]_q [k-1]_q ... [k-j+1]_q; zero as soon as the index hits 0
    if j > k:
        return QLaurent.zero()
    result = QLaurent.one()
    for i in range(k, k - j, -1):
        result = result * q_int(i)
    return result


# ----------------------------------------------------------------- checks

def check_stirling_euler(n: int) -> bool:
    """sum_j stirling2_q(n, j) x^j (x; q)_{n-j} [j]_q!  ==  x * EulerMahonian_n."""
    if not 1 <= n <= 8:
        raise ValueError("supported for 1 <= n <= 8")
    lhs = MultiPoly.zero()
    for j in range(1, n + 1):
        factor = (stirling2_q(n, j) * q_factorial(j)).to_multipoly()
        lhs = lhs + (factor
                     * MultiPoly.monomial(1, ex=j)
                     * q_pochhammer_x(n - j))
    rhs = MultiPoly.variable("x") * euler_mahonian_poly(n)
    return lhs == rhs


def check_garsia(n: int) -> bool:
    """Milne flavor: sum_j milne(n, j) x^j (x q^(j+1); q)_{n-j} [j]_q!
    equals x * EulerMahonian_n."""
    if not 1 <= n <= 8:
        raise ValueError("supported for 1 <= n <= 8")
    lhs = MultiPoly.zero()
    for j in range(1, n + 1):
        factor = (stirling2_q_milne(n, j) * q_factorial(j)).to_multipoly()
        lhs = lhs + (factor
                     * MultiPoly.monomial(1, ex=j)
                     * q_pochhammer_x(n - j, first_power=j + 1))
    rhs = MultiPoly.variable("x") * euler_mahonian_poly(n)
    return lhs == rhs


def check_qpower(n: int, kmax: int) -> bool:
    """q-power expansion: for every k <= kmax,
    [k]_q^n == sum_j stirling2_q(n, j) [k]_q ... [k-j+1]_q q^((n-j)(k-j))."""
    if n < 1 or kmax < 1:
        raise ValueError("needs n >= 1 and kmax >= 1")
    for k in range(1, kmax + 1):
        lhs = q_int(k) ** n
        rhs = QLaurent.zero()
        for j in range(1, n + 1):
            term = _q_falling_product(k, j)
            if term.is_zero():
                continue
            rhs = rhs + (stirling2_q(n, j) * term).times_q_power(
                (n - j) * (k - j))
        if lhs != rhs:
            return False
    return True


def _geometric_inverse_pochhammer(n: int, trunc: int) -> MultiPoly:
    # prod_{i=0}^{n} sum_m x^m q^(i m), truncated to x-degree <= trunc
    result = MultiPoly.one()
    for i in range(n + 1):
        geom = MultiPoly._raw({(m, 0, 0, 0, i * m): 1 for m in range(trunc + 1)})
        result = (result * geom).truncate("x", trunc)
    return result


def check_carlitz(n: int, trunc: int, euler_poly: MultiPoly | None = None) -> bool:
    """Carlitz expansion: (x; q)_{n+1} * sum_{l=0}^{trunc} x^l [l+1]_q^n
    agrees with the Euler-Mahonian polynomial up to x-degree trunc - n - 1.

    `euler_poly` overrides the enumerated polynomial, so corrupting it is
    an easy negative control of the comparison itself.
    """
    if trunc < n + 2:
        raise ValueError("truncation must be at least n + 2")
    series = MultiPoly.zero()
    for ell in range(trunc + 1):
        series = series + ((q_int(ell + 1) ** n).to_multipoly()
                           * MultiPoly.monomial(1, ex=ell))
    lhs = (q_pochhammer_x(n + 1) * series).truncate("x", trunc - n - 1)
    if euler_poly is None:
        euler_poly = euler_mahonian_poly(n)
    return lhs == euler_poly.truncate("x", trunc - n - 1)


def check_eu_ma_operator(n: int, trunc: int) -> bool:
    """(x D_q)^n of the truncated geometric series, i.e.
    sum_l [l]_q^n x^l, agrees with x * EulerMahonian_n / (x; q)_{n+1}
    (inverse expanded geometrically) up to x-degree trunc - n."""
    if trunc < n + 2:
        raise ValueError("truncation must be at least n + 2")
    lhs = MultiPoly.zero()
    for ell in range(trunc + 1):
        lhs = lhs + ((q_int(ell) ** n).to_multipoly()
                     * MultiPoly.monomial(1, ex=ell))
    rhs = (MultiPoly.variable("x")
           * euler_mahonian_poly(n)
           * _geometric_inverse_pochhammer(n, trunc)).truncate("x", trunc)
    keep = trunc - n
    return lhs.truncate("x", keep) == rhs.truncate("x", keep)
