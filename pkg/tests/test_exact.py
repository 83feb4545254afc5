"""Tests for the exact arithmetic layer: Bernoulli numbers, binomials,
even zeta values, periodized Bernoulli polynomials and PiValue."""

from __future__ import annotations

import math
import random
from fractions import Fraction

import pytest
from gmpy2 import mpq
from hypothesis import given, settings
from hypothesis import strategies as st

from wittenz.exact import (
    PiValue,
    bernoulli,
    binomial,
    format_rational,
    parse_rational,
    periodized_bernoulli,
    rational_from_json,
    rational_to_json,
    zeta_even,
)


# --------------------------------------------------------------------------
# Bernoulli numbers
# --------------------------------------------------------------------------

def test_bernoulli_small_values():
    assert bernoulli(0) == 1
    assert bernoulli(1) == mpq(-1, 2)
    assert bernoulli(2) == mpq(1, 6)
    assert bernoulli(4) == mpq(-1, 30)
    assert bernoulli(6) == mpq(1, 42)
    assert bernoulli(12) == mpq(-691, 2730)


def test_bernoulli_odd_indices_vanish():
    for n in range(3, 122, 2):
        assert bernoulli(n) == 0


def test_bernoulli_defining_recurrence():
    # sum_{k=0}^{n} C(n+1, k) B_k = 0 for every n >= 1.
    for n in range(1, 121):
        total = sum(mpq(math.comb(n + 1, k)) * bernoulli(k) for k in range(n + 1))
        assert total == 0, n


def test_bernoulli_large_index_cached():
    b180 = bernoulli(180)
    assert b180 == bernoulli(180)
    assert b180.denominator > 1


def test_bernoulli_negative_index_rejected():
    with pytest.raises(ValueError):
        bernoulli(-1)


# --------------------------------------------------------------------------
# binomial conventions
# --------------------------------------------------------------------------

def test_binomial_classical_values():
    assert binomial(5, 2) == 10
    assert binomial(0, 0) == 1
    assert binomial(7, 0) == 1
    assert binomial(7, 7) == 1


def test_binomial_boundary_conventions():
    assert binomial(3, -1) == 0
    assert binomial(-1, -1) == 0
    assert binomial(-1, 0) == 0
    assert binomial(-3, 2) == 0
    assert binomial(2, 5) == 0


@given(st.integers(1, 60), st.integers(0, 60))
def test_binomial_pascal_rule(t, k):
    assert binomial(t, k) == binomial(t - 1, k - 1) + binomial(t - 1, k)


# --------------------------------------------------------------------------
# even zeta values
# --------------------------------------------------------------------------

def test_zeta_even_classical_values():
    assert zeta_even(2) == PiValue(mpq(1, 6), 2)
    assert zeta_even(4) == PiValue(mpq(1, 90), 4)
    assert zeta_even(6) == PiValue(mpq(1, 945), 6)
    assert zeta_even(8) == PiValue(mpq(1, 9450), 8)


def test_zeta_even_coefficient_positive_up_to_100():
    for w in range(2, 101, 2):
        assert zeta_even(w).coefficient > 0, w


def test_zeta_even_rejects_odd_or_small():
    with pytest.raises(ValueError):
        zeta_even(3)
    with pytest.raises(ValueError):
        zeta_even(0)


# --------------------------------------------------------------------------
# periodized Bernoulli polynomials
# --------------------------------------------------------------------------

def test_periodized_bernoulli_basics():
    assert periodized_bernoulli(0, mpq(7, 3)) == 1
    assert periodized_bernoulli(1, 0) == 0
    assert periodized_bernoulli(1, 5) == 0
    assert periodized_bernoulli(1, mpq(1, 4)) == mpq(-1, 4)
    # B_2(x) = x^2 - x + 1/6.
    assert periodized_bernoulli(2, mpq(1, 2)) == mpq(-1, 12)
    assert periodized_bernoulli(2, mpq(7, 2)) == mpq(-1, 12)
    assert periodized_bernoulli(2, 0) == mpq(1, 6)


def test_periodized_bernoulli_at_integers_matches_numbers():
    for j in [0, 2, 3, 4, 5, 6, 8, 10]:
        assert periodized_bernoulli(j, 0) == bernoulli(j)
        assert periodized_bernoulli(j, -3) == bernoulli(j)


def test_periodized_bernoulli_half_value_identity():
    # B_j(1/2) = (2**(1-j) - 1) B_j.
    for j in range(0, 16):
        expected = (mpq(2) ** (1 - j) - 1) * bernoulli(j) if j else mpq(1)
        assert periodized_bernoulli(j, mpq(1, 2)) == expected


@given(
    st.integers(0, 12),
    st.fractions(
        min_value=Fraction(-50), max_value=Fraction(50), max_denominator=40
    ),
)
@settings(max_examples=200)
def test_periodized_bernoulli_is_one_periodic(j, x):
    assert periodized_bernoulli(j, x) == periodized_bernoulli(j, x + 1)


# --------------------------------------------------------------------------
# rational parsing / formatting
# --------------------------------------------------------------------------

def test_format_and_parse_simple():
    assert format_rational(mpq(4, 6)) == "2/3"
    assert format_rational(mpq(-5)) == "-5"
    assert parse_rational("2/3") == mpq(2, 3)
    assert parse_rational("-7") == mpq(-7)
    with pytest.raises(ValueError):
        parse_rational("1/0")


def test_rational_round_trip_200_digits():
    rng = random.Random(20260825)
    for _ in range(50):
        num = rng.randrange(10**199, 10**200) * rng.choice([1, -1])
        den = rng.randrange(10**199, 10**200)
        q = mpq(num, den)
        assert parse_rational(format_rational(q)) == q
        assert rational_from_json(rational_to_json(q)) == q


@given(st.integers(), st.integers(min_value=1))
@settings(max_examples=200)
def test_rational_round_trip_property(num, den):
    q = mpq(num, den)
    assert parse_rational(format_rational(q)) == q


# --------------------------------------------------------------------------
# PiValue
# --------------------------------------------------------------------------

def test_pivalue_addition_and_scaling():
    a = PiValue(mpq(1, 3), 4)
    b = PiValue(mpq(1, 6), 4)
    assert a + b == PiValue(mpq(1, 2), 4)
    assert a - b == PiValue(mpq(1, 6), 4)
    assert a.scaled(mpq(3, 2)) == PiValue(mpq(1, 2), 4)
    assert 3 * a == PiValue(1, 4)


def test_pivalue_multiplication_adds_powers():
    prod = zeta_even(2) * zeta_even(4)
    assert prod == PiValue(mpq(1, 540), 6)


def test_pivalue_mismatched_powers_reject_addition():
    with pytest.raises(ValueError):
        PiValue(1, 2) + PiValue(1, 4)
    # Zero terms act as a neutral element regardless of recorded power.
    assert PiValue(0, 0) + PiValue(mpq(1, 6), 2) == zeta_even(2)


def test_pivalue_rejects_odd_power():
    with pytest.raises(ValueError):
        PiValue(1, 3)


def test_pivalue_json_round_trip():
    v = PiValue(mpq(-355, 113), 10)
    assert PiValue.from_json(v.to_json()) == v
    assert v.to_json() == {
        "coefficient": {"num": "-355", "den": "113"},
        "pi_power": 10,
    }


def test_pivalue_numeric_matches_mpmath():
    import mpmath

    v = zeta_even(6)
    with mpmath.workdps(40):
        expected = mpmath.zeta(6)
        assert mpmath.almosteq(v.numeric(40), expected)
