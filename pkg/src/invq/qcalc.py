"""q-integers, q-binomials, and the q-derivative operators acting in x.

Gaussian binomials are built by the additive Pascal recurrence, so no
polynomial division ever happens; the Taylor-style operator t_q likewise
uses the binomial form of D_q^k / [k]_q! directly.
"""

from __future__ import annotations

from functools import lru_cache

from .polyring import ExpVec, MultiPoly, QLaurent


def q_int(k: int) -> QLaurent:
    """[k]_q = 1 + q + ... + q^(k-1); [0]_q = 0.

    >>> str(q_int(3))
    'q^2 + q + 1'
    """
    if k < 0:
        raise ValueError("q-integer needs k >= 0")
    return QLaurent._raw({i: 1 for i in range(k)})


@lru_cache(maxsize=None)
def q_factorial(k: int) -> QLaurent:
    """[k]_q! = [1]_q [2]_q ... [k]_q, with [0]_q! = 1."""
    if k < 0:
        raise ValueError("q-factorial needs k >= 0")
    if k == 0:
        return QLaurent.one()
    return q_factorial(k - 1) * q_int(k)


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int) -> QLaurent:
    """Gaussian binomial coefficient as a q-polynomial.

    Defined by the Pascal recurrence
    qbinom(n, k) = qbinom(n-1, k-1) + q^k * qbinom(n-1, k),
    which keeps everything division-free.  Out-of-range k gives 0.
    """
    if n < 0:
        raise ValueError("q-binomial needs n >= 0")
    if k < 0 or k > n:
        return QLaurent.zero()
    if k == 0 or k == n:
        return QLaurent.one()
    return q_binomial(n - 1, k - 1) + q_binomial(n - 1, k).times_q_power(k)


def q_pochhammer_x(n: int, first_power: int = 0) -> MultiPoly:
    """(x q^first_power; q)_n = prod_{i=0}^{n-1} (1 - x q^(first_power+i))."""
    if n < 0:
        raise ValueError("q-Pochhammer needs n >= 0")
    result = MultiPoly.one()
    x = MultiPoly.variable("x")
    for i in range(n):
        result = result * (1 - x * MultiPoly.monomial(1, eq=first_power + i))
    return result


def d_q(f: MultiPoly) -> MultiPoly:
    """q-derivative in x: termwise x^a -> [a]_q x^(a-1).

    Constants in x vanish.  Coefficients in y, z, p, q ride along.
    """
    out: dict[ExpVec, int] = {}
    for (ax, ay, az, ap, aq), coeff in f.items():
        if ax == 0:
            continue
        for i in range(ax):  # multiply by [ax]_q
            key = (ax - 1, ay, az, ap, aq + i)
            c = out.get(key, 0) + coeff
            if c:
                out[key] = c
            elif key in out:
                del out[key]
    return MultiPoly._raw(out)


def t_q(f: MultiPoly) -> MultiPoly:
    """Termwise x^a -> sum_k qbinom(a, k) x^k.

    This is the finite sum of D_q^k / [k]_q! over k, with the division by
    [k]_q! absorbed into the Gaussian binomial, so it stays in the ring.
    The x-degree never grows.
    """
    out: dict[ExpVec, int] = {}
    for (ax, ay, az, ap, aq), coeff in f.items():
        for k in range(ax + 1):
            for qe, qc in q_binomial(ax, k).items():
                key = (k, ay, az, ap, aq + qe)
                c = out.get(key, 0) + coeff * qc
                if c:
                    out[key] = c
                elif key in out:
                    del out[key]
    return MultiPoly._raw(out)
