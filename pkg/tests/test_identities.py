"""Euler-Mahonian statistics and the q-Stirling identity checks."""

import math

import pytest

from invq.identities import (
    check_carlitz,
    check_eu_ma_operator,
    check_garsia,
    check_qpower,
    check_stirling_euler,
    descent_count,
    euler_mahonian_poly,
    eulerian_row,
    major_index,
    max_displacement_counts,
    permutations,
    _q_falling_product,
)
from invq.polyring import MultiPoly
from invq.qcalc import q_factorial, q_int


# --------------------------------------------------------------- statistics

def test_descents_and_major_index():
    assert descent_count((3, 1, 2)) == 1
    assert major_index((3, 1, 2)) == 1
    assert descent_count((2, 4, 1, 3)) == 1
    assert major_index((2, 4, 1, 3)) == 2
    assert major_index((4, 3, 2, 1)) == 6
    assert descent_count((1, 2, 3)) == 0


def test_permutation_enumeration():
    assert sum(1 for _ in permutations(5)) == 120
    assert next(iter(permutations(3))) == (1, 2, 3)
    with pytest.raises(ValueError):
        permutations(0)
    with pytest.raises(ValueError):
        permutations(10)


def test_euler_mahonian_small():
    # n = 2: identity has no descents, (2,1) has des = maj = 1
    assert euler_mahonian_poly(2) == (
        MultiPoly.one() + MultiPoly.monomial(1, ex=1, eq=1))
    # maj is Mahonian: summing out x leaves [n]_q!
    for n in range(1, 7):
        collapsed = euler_mahonian_poly(n).eval_partial({"x": 1}).as_qlaurent()
        assert collapsed == q_factorial(n)


def test_eulerian_rows():
    assert eulerian_row(1) == [1]
    assert eulerian_row(4) == [1, 11, 11, 1]
    assert eulerian_row(5) == [1, 26, 66, 26, 1]
    for n in range(1, 8):
        assert sum(eulerian_row(n)) == math.factorial(n)


def test_max_displacement_rows():
    assert max_displacement_counts(1) == [1]
    assert max_displacement_counts(4) == [1, 7, 10, 6]
    for n in range(1, 8):
        assert sum(max_displacement_counts(n)) == math.factorial(n)


def test_q_falling_product():
    assert _q_falling_product(3, 0).evaluate(1) == 1
    assert _q_falling_product(3, 2) == q_int(3) * q_int(2)
    assert _q_falling_product(2, 3).is_zero()
    assert _q_falling_product(3, 3) == q_factorial(3)


# ------------------------------------------------------------------- checks

@pytest.mark.parametrize("n", range(1, 8))
def test_stirling_euler_identity(n):
    assert check_stirling_euler(n)


@pytest.mark.parametrize("n", range(1, 8))
def test_garsia_identity(n):
    assert check_garsia(n)


def test_qpower_identity():
    for n in range(1, 8):
        assert check_qpower(n, kmax=6)


@pytest.mark.parametrize("n", range(1, 6))
def test_carlitz_identity(n):
    assert check_carlitz(n, trunc=n + 8)


@pytest.mark.parametrize("n", range(1, 6))
def test_operator_series_identity(n):
    assert check_eu_ma_operator(n, trunc=n + 8)


def test_truncation_margin_is_flexible():
    assert check_carlitz(3, trunc=5)
    assert check_carlitz(3, trunc=12)
    with pytest.raises(ValueError):
        check_carlitz(3, trunc=4)
    with pytest.raises(ValueError):
        check_eu_ma_operator(3, trunc=4)


def test_carlitz_negative_control():
    # a corrupted Euler-Mahonian polynomial must be caught, proving the
    # comparison is not vacuous
    broken = euler_mahonian_poly(3) + MultiPoly.monomial(1, ex=1, eq=1)
    assert not check_carlitz(3, trunc=11, euler_poly=broken)
    assert check_carlitz(3, trunc=11, euler_poly=euler_mahonian_poly(3))


def test_check_bounds():
    with pytest.raises(ValueError):
        check_stirling_euler(0)
    with pytest.raises(ValueError):
        check_stirling_euler(9)
    with pytest.raises(ValueError):
        check_garsia(0)
    with pytest.raises(ValueError):
        check_qpower(0, 3)
