"""Normal ordering of (g D_q)^n f and the word-coefficient extraction."""

import math

import pytest

from invq.polyring import MultiPoly, QLaurent
from invq.qoperator import (
    Factor,
    G_IS_X,
    SymExpr,
    apply_gdq,
    comtet_coeff_explicit,
    comtet_coeff_from_expansion,
    comtet_coeff_recurrence,
    dq_expr,
    expansion_from_sequences,
    f_factor,
    g_factor,
    operator_expansion,
    substitute_g,
    times_g,
)
from invq.qstirling import stirling2_q

G = g_factor()
ONE = QLaurent.one()


def w(*factors):
    return tuple(factors)


# ------------------------------------------------------------ hand expansions

def test_expansion_n0_and_n1():
    assert operator_expansion(0) == SymExpr.from_word(w(f_factor()))
    assert operator_expansion(1) == SymExpr.from_word(w(G, f_factor(deriv=1)))
    assert str(operator_expansion(1)) == "g f_1"


def test_expansion_n2():
    expected = SymExpr({
        w(G, G, f_factor(deriv=2)): ONE,
        w(G, g_factor(deriv=1), f_factor(deriv=1, shift=1)): ONE,
    })
    assert operator_expansion(2) == expected
    assert str(operator_expansion(2)) == "g g f_2 + g g_1 f_1^(1)"


def test_expansion_n3():
    q1 = QLaurent({0: 1, 1: 1})
    expected = SymExpr({
        w(G, G, G, f_factor(deriv=3)): ONE,
        w(G, G, g_factor(deriv=1), f_factor(deriv=2, shift=1)): q1,
        w(G, G, g_factor(deriv=2), f_factor(deriv=1, shift=2)): ONE,
        w(G, g_factor(deriv=1), g_factor(shift=1),
          f_factor(deriv=2, shift=1)): ONE,
        w(G, g_factor(deriv=1), g_factor(deriv=1, shift=1),
          f_factor(deriv=1, shift=2)): ONE,
    })
    assert operator_expansion(3) == expected


def test_expansion_n3_display():
    assert str(operator_expansion(3)) == (
        "g g g f_3 + (q + 1) g g g_1 f_2^(1) + g g g_2 f_1^(2)"
        " + g g_1 g_0^(1) f_2^(1) + g g_1 g_1^(1) f_1^(2)")


def test_product_rule_scaling():
    # differentiating a shifted factor picks up q^shift
    start = SymExpr.from_word(w(f_factor(shift=2)))
    assert dq_expr(start) == SymExpr.from_word(
        w(f_factor(deriv=1, shift=2)), QLaurent.q_power(2))
    # factors right of the derivative gain one argument scale
    two = dq_expr(SymExpr.from_word(w(g_factor(), f_factor())))
    assert two == SymExpr({
        w(g_factor(deriv=1), f_factor(shift=1)): ONE,
        w(g_factor(), f_factor(deriv=1)): ONE,
    })


# -------------------------------------------------------------- both routes

@pytest.mark.parametrize("n", range(1, 7))
def test_routes_agree_word_for_word(n):
    assert operator_expansion(n) == expansion_from_sequences(n)


@pytest.mark.parametrize("n", range(1, 7))
def test_word_shape(n):
    for word, coeff in operator_expansion(n).items():
        assert len(word) == n + 1
        assert word[0] == g_factor()
        assert word[-1].kind == "f"
        assert all(f.kind == "g" for f in word[:-1])
        assert word[1].shift == 0
        # argument scales accumulate the derivative orders left of them
        for i in range(1, n):
            assert word[i + 1].shift == word[i].shift + word[i].deriv
        assert sum(f.deriv for f in word) == n
        assert coeff.is_polynomial()


def test_total_coefficient_mass():
    # coefficients at q = 1 count inversion sequences: n! in total
    for n in range(1, 7):
        total = sum(c.evaluate(1) for _, c in operator_expansion(n).items())
        assert total == math.factorial(n)


# -------------------------------------------------------- coefficient words

def test_coefficient_example_display():
    assert str(comtet_coeff_explicit(3, 2)) == "(q + 1) g g g_1 + g g_1 g_0^(1)"
    assert str(comtet_coeff_explicit(1, 1)) == "g"
    assert str(comtet_coeff_explicit(2, 2)) == "g g"
    assert str(comtet_coeff_explicit(2, 1)) == "g g_1"


@pytest.mark.parametrize("n", range(1, 7))
def test_coefficient_three_ways(n):
    full = operator_expansion(n)
    for k in range(1, n + 1):
        extracted = comtet_coeff_from_expansion(full, k)
        assert extracted == comtet_coeff_explicit(n, k)
        assert extracted == comtet_coeff_recurrence(n, k)


def test_extraction_covers_everything():
    full = operator_expansion(5)
    words = sum(comtet_coeff_from_expansion(full, k).word_count()
                for k in range(1, 6))
    assert words == full.word_count()


# ----------------------------------------------------------- specialization

@pytest.mark.parametrize("n", range(1, 8))
def test_geometric_rule_gives_q_stirling(n):
    for k in range(1, n + 1):
        value = substitute_g(comtet_coeff_explicit(n, k), G_IS_X)
        expected = MultiPoly.monomial(1, ex=k) * stirling2_q(n, k).to_multipoly()
        assert value == expected


def test_geometric_rule_values():
    assert G_IS_X(0, 0) == MultiPoly.variable("x")
    assert G_IS_X(0, 3) == MultiPoly.monomial(1, ex=1, eq=3)
    assert G_IS_X(1, 5) == MultiPoly.one()
    assert G_IS_X(2, 0) == MultiPoly.zero()


# ------------------------------------------------------------------- errors

def test_error_paths():
    with pytest.raises(ValueError):
        operator_expansion(-1)
    with pytest.raises(ValueError):
        apply_gdq(SymExpr.from_word(w(G)))
    with pytest.raises(ValueError):
        comtet_coeff_from_expansion(SymExpr.from_word(w(G)), 1)
    with pytest.raises(ValueError):
        comtet_coeff_explicit(3, 0)
    with pytest.raises(ValueError):
        comtet_coeff_recurrence(3, 4)
    with pytest.raises(ValueError):
        substitute_g(SymExpr.from_word(w(f_factor())), G_IS_X)
    with pytest.raises(ValueError):
        expansion_from_sequences(0)


def test_symexpr_behaves():
    a = SymExpr.from_word(w(G), 2)
    b = SymExpr.from_word(w(G), -2)
    assert (a + b).is_zero()
    assert a.scale(0).is_zero()
    assert str(SymExpr.zero()) == "0"
    assert str(a) == "(2) g"
    assert SymExpr({w(G): 0}) == SymExpr.zero()
