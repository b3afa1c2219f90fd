"""Enumeration, statistics, and the fixed-frequency product formula."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from invq.invseq import (
    SeqStats,
    brute_fixed_freq,
    brute_joint_poly,
    fixed_freq_poly,
    format_sequence,
    frequency_vectors,
    inversion_sequences,
    occurrence_counts,
    sequence_stats,
    validate,
)
from invq.polyring import QLaurent
from invq.qcalc import q_binomial


def random_sequences(max_n=8):
    return st.integers(min_value=1, max_value=max_n).flatmap(
        lambda n: st.tuples(*(st.integers(min_value=0, max_value=i)
                              for i in range(n))))


# ------------------------------------------------------------- enumeration

@pytest.mark.parametrize("n", range(1, 8))
def test_counts_are_factorial(n):
    assert sum(1 for _ in inversion_sequences(n)) == math.factorial(n)


def test_enumeration_order_n3():
    assert list(inversion_sequences(3)) == [
        (0, 0, 0), (0, 0, 1), (0, 0, 2),
        (0, 1, 0), (0, 1, 1), (0, 1, 2),
    ]


def test_last_entry_partitions():
    full = list(inversion_sequences(5))
    parts = [list(inversion_sequences(5, last_entry=v)) for v in range(5)]
    assert sorted(sum(parts, [])) == sorted(full)
    for v, part in enumerate(parts):
        assert all(e[-1] == v for e in part)


def test_enumeration_bounds():
    with pytest.raises(ValueError):
        list(inversion_sequences(0))
    with pytest.raises(ValueError):
        list(inversion_sequences(13))
    # explicit opt-in raises the cap
    gen = inversion_sequences(13, allow_large=True)
    assert next(gen) == tuple([0] * 13)
    with pytest.raises(ValueError):
        list(inversion_sequences(5, last_entry=5))


def test_validate():
    assert validate([0, 1, 0]) == (0, 1, 0)
    with pytest.raises(ValueError):
        validate([1])
    with pytest.raises(ValueError):
        validate([0, 2])
    with pytest.raises(ValueError):
        validate([])


# -------------------------------------------------------------- statistics

def test_stats_worked_example():
    assert sequence_stats((0, 0, 0, 2, 4, 0, 5)) == SeqStats(
        inv=2, sum=11, noz=4, dist=4, tel=3, uel=1, maxent=5)


def test_stats_small_cases():
    assert sequence_stats((0,)) == SeqStats(0, 0, 1, 1, 0, 0, 0)
    assert sequence_stats((0, 1, 2)) == SeqStats(0, 3, 1, 3, 0, 0, 2)
    assert sequence_stats((0, 0, 0)) == SeqStats(0, 0, 3, 1, 2, 2, 0)
    # one inversion: the 1 before the final 0
    assert sequence_stats((0, 1, 0)) == SeqStats(1, 1, 2, 2, 1, 1, 1)


@settings(max_examples=100, deadline=None)
@given(random_sequences())
def test_stats_invariants(e):
    n = len(e)
    s = sequence_stats(e)
    assert s.tel == n - s.dist
    assert s.uel == n - s.maxent - 1
    assert 1 <= s.noz <= n
    assert 1 <= s.dist <= n
    # zeros plus one slot per distinct nonzero value never exceeds the length
    assert s.noz + s.dist - 1 <= n
    assert occurrence_counts(e)[0] == s.noz
    assert sum(occurrence_counts(e)) == n


def test_occurrence_counts():
    assert occurrence_counts((0, 0, 2, 2, 4)) == (2, 0, 2, 0, 1)


def test_format_sequence():
    assert format_sequence((0, 1, 0, 3)) == "0103"
    assert format_sequence(tuple(range(11))) == "0,1,2,3,4,5,6,7,8,9,10"


# --------------------------------------------------- joint polynomial brute

def test_brute_joint_matches_golden(golden_polys):
    for n in (1, 2, 3):
        assert brute_joint_poly(n) == golden_polys[n]


# ------------------------------------------------------- fixed frequencies

def test_fixed_freq_worked_examples():
    # all zeros: the single sequence 0000 has no inversions
    assert fixed_freq_poly((4, 0, 0, 0)) == QLaurent.one()
    # n=3, v=(2,1,0): sequences 001 and 010
    assert fixed_freq_poly((2, 1, 0)) == QLaurent({0: 1, 1: 1})
    assert fixed_freq_poly((2, 1, 0)) == q_binomial(2, 1)
    # n=4, v=(2,1,1,0): product qbinom(2,1)*qbinom(2,1)
    assert fixed_freq_poly((2, 1, 1, 0)) == q_binomial(2, 1) * q_binomial(2, 1)


def test_fixed_freq_unrealizable_is_zero():
    # per-value slot capacities are satisfied, but no zeros means the
    # forced e_0 = 0 can never happen; the product formula must vanish
    assert fixed_freq_poly((0, 0, 3, 1, 1)) == QLaurent.zero()
    assert brute_fixed_freq((0, 0, 3, 1, 1)) == QLaurent.zero()


def test_fixed_freq_input_validation():
    with pytest.raises(ValueError):
        fixed_freq_poly(())
    with pytest.raises(ValueError):
        fixed_freq_poly((0, 2))  # value 1 has one slot, not two
    with pytest.raises(ValueError):
        fixed_freq_poly((2, -1, 1))
    with pytest.raises(ValueError):
        fixed_freq_poly((2, 2))  # counts must sum to the length


@pytest.mark.parametrize("n", range(1, 7))
def test_fixed_freq_sweep_matches_brute(n):
    for v in frequency_vectors(n):
        assert fixed_freq_poly(v) == brute_fixed_freq(v), v


def test_frequency_vectors_cover_all_sequences():
    vectors = set(frequency_vectors(5))
    seen = {occurrence_counts(e) for e in inversion_sequences(5)}
    assert seen <= vectors
    # every enumerated vector is valid input
    for v in vectors:
        fixed_freq_poly(v)


def test_class_sizes_sum_to_factorial():
    for n in range(1, 7):
        total = sum(fixed_freq_poly(v).evaluate(1) for v in frequency_vectors(n))
        assert total == math.factorial(n)
