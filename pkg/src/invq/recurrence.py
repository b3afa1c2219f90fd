"""Length-extension recurrence for the joint statistic polynomials.

Appending a new entry to an inversion sequence of length n either repeats
the fresh maximal value (the boundary term below) or lands on one of the
existing admissible values; the latter case is captured exactly by the
operator t_q together with the scaled shift x -> x/p, p-degree n.  The
recurrence stays inside the polynomial ring at every step.
"""

from __future__ import annotations

import threading

from .polyring import MultiPoly
from .qcalc import t_q

_X = MultiPoly.variable("x")
_Y = MultiPoly.variable("y")
_Z = MultiPoly.variable("z")

_table: list[MultiPoly] = [_X]  # joint polynomial for length 1 is x
_lock = threading.Lock()


def next_joint_poly(current: MultiPoly, n: int) -> MultiPoly:
    """One extension step: the length-(n+1) polynomial from the length-n one."""
    if n < 1:
        raise ValueError("length must be >= 1")
    boundary = (_Z - 1) * MultiPoly.monomial(1, ex=n + 1, ey=n, ez=n - 1)
    return boundary + ((_Y - 1) * current + t_q(current)).scaled_shift(n)


def joint_poly(n: int) -> MultiPoly:
    """Joint distribution polynomial of length n, memoized.

    The memo table is guarded by a lock, so concurrent callers are safe;
    entries themselves are immutable.
    """
    if n < 1:
        raise ValueError("length must be >= 1")
    with _lock:
        while len(_table) < n:
            m = len(_table)
            _table.append(next_joint_poly(_table[-1], m))
        return _table[n - 1]


def inv_poly(n: int):
    """Inversion-count marginal: everything but q bound to 1."""
    return joint_poly(n).eval_partial(
        {"x": 1, "y": 1, "z": 1, "p": 1}).as_qlaurent()


def product_formula(n: int) -> MultiPoly:
    """Closed product for the (x, p) marginal:
    x * (x + p) * (x + p + p^2) * ... * (x + p + ... + p^(n-1)).
    """
    if n < 1:
        raise ValueError("length must be >= 1")
    x = _X
    p = MultiPoly.variable("p")
    result = MultiPoly.one()
    geom = MultiPoly.zero()  # p + p^2 + ... + p^j, grown as j advances
    for j in range(n):
        result = result * (x + geom)
        geom = geom + p ** (j + 1)
    return result


def p_factorial(n: int) -> MultiPoly:
    """[n]_p! = prod_{k=1}^{n} (1 + p + ... + p^(k-1)), the x=1 slice of
    the product formula."""
    if n < 0:
        raise ValueError("needs n >= 0")
    result = MultiPoly.one()
    for k in range(1, n + 1):
        result = result * MultiPoly._raw(
            {(0, 0, 0, i, 0): 1 for i in range(k)})
    return result


def uel_distribution(n: int) -> list[int]:
    """Counts of sequences in I_n by their uel value, from the z-marginal.

    Entry j is the coefficient of z^j in the joint polynomial with
    x = y = p = q = 1.
    """
    marg = joint_poly(n).eval_partial({"x": 1, "y": 1, "p": 1, "q": 1})
    by_z = marg.coefficients_in("z")
    return [by_z[j].constant_value() if j in by_z else 0 for j in range(n)]
