"""Tests for the factored coefficient presentation.

The one hard correctness property is that every factored form multiplies
back to the exact coefficient; everything else (primality, factorial
extraction, rendering) is presentation and is pinned against the
reference-table style.
"""

from __future__ import annotations

import dataclasses

import pytest
from gmpy2 import fac, mpq
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import isprime

from wittenz.exact import PiValue
from wittenz.factoring import (
    DEFAULT_EFFORT,
    FactoredValue,
    _largest_dividing_factorial,
    factor_coefficient,
    factor_integer,
)

# Two well-known large primes; their product defeats any bounded-effort
# factorization while staying cheap to multiply.
_BIG_PRIME_A = 2**61 - 1
_BIG_PRIME_B = 2**64 - 59
_HARD_SEMIPRIME = _BIG_PRIME_A * _BIG_PRIME_B


# --------------------------------------------------------------------------
# factor_integer
# --------------------------------------------------------------------------

def test_factor_integer_small_pins():
    assert factor_integer(14400) == ({2: 6, 3: 2, 5: 2}, {})
    assert factor_integer(1) == ({}, {})
    assert factor_integer(97) == ({97: 1}, {})
    assert factor_integer(2**10 * 3**5 * 101) == ({2: 10, 3: 5, 101: 1}, {})


def test_factor_integer_rejects_bad_input():
    with pytest.raises(ValueError):
        factor_integer(0)
    with pytest.raises(ValueError):
        factor_integer(-6)
    with pytest.raises(ValueError):
        factor_integer(12, effort=1)


def test_factor_integer_low_effort_leaves_composite():
    primes, composites = factor_integer(4 * _HARD_SEMIPRIME, effort=3)
    assert primes == {2: 2}
    assert composites == {_HARD_SEMIPRIME: 1}
    assert not isprime(_HARD_SEMIPRIME)


def test_factor_integer_default_effort_cracks_medium_semiprime():
    # ~19 digits total; rho splits this in well under the default effort.
    n = 1_000_003 * 1_000_033
    assert factor_integer(n) == ({1_000_003: 1, 1_000_033: 1}, {})


@settings(max_examples=150, deadline=None)
@given(st.integers(min_value=1, max_value=10**12))
def test_factor_integer_reconstructs_input(n):
    primes, composites = factor_integer(n)
    product = 1
    for base, exp in primes.items():
        assert isprime(base)
        product *= base**exp
    for base, exp in composites.items():
        product *= base**exp
    assert product == n


# --------------------------------------------------------------------------
# factorial extraction
# --------------------------------------------------------------------------

def test_largest_dividing_factorial():
    assert _largest_dividing_factorial(int(fac(17))) == 17
    assert _largest_dividing_factorial(8400) == 5  # 8400 = 5! * 70
    assert _largest_dividing_factorial(2835) is None  # odd
    assert _largest_dividing_factorial(2) == 2
    assert _largest_dividing_factorial(1) is None


def test_greedy_factorial_extraction_without_hint():
    factored = factor_coefficient(PiValue(mpq(1, 8400), 8))
    assert factored.factorial == 5
    assert factored.denominator == {2: 1, 5: 1, 7: 1}
    assert factored.to_text() == "(1) / (2 * 5 * 7 * 5!) * pi^8"
    assert factored.to_latex() == "\\frac{1}{2\\cdot 5\\cdot 7\\cdot 5!}\\pi^8"


def test_factorial_free_denominator_gets_no_factorial():
    factored = factor_coefficient(PiValue(mpq(4, 2835), 6))
    assert factored.factorial is None
    assert factored.to_latex() == "\\frac{2^2}{3^4\\cdot 5\\cdot 7}\\pi^6"


def test_factorial_hint_rebalances_the_fraction():
    # 18! does not divide this denominator; the hint forces the exact
    # rebalanced presentation N / (D * 18!) anyway.
    value = PiValue(mpq(1, 650970015609375), 20)
    factored = factor_coefficient(value, factorial_hint=18)
    assert factored.factorial == 18
    assert (
        factored.to_latex()
        == "\\frac{2^{16}\\cdot 13}{3^2\\cdot 5^3\\cdot 7\\cdot 11\\cdot 18!}\\pi^{20}"
    )
    assert factored.to_rational() == value.coefficient


def test_reference_style_factored_form_weight_18():
    value = PiValue(mpq(19, 8403115488768000), 18)
    factored = factor_coefficient(value, factorial_hint=17)
    assert factored.to_latex() == "\\frac{2^3\\cdot 19}{3^3\\cdot 7\\cdot 17!}\\pi^{18}"
    assert factored.numerator == {2: 3, 19: 1}
    assert factored.denominator == {3: 3, 7: 1}
    assert factored.fully_factored


def test_factorial_hint_out_of_range():
    value = PiValue(mpq(1, 8400), 8)
    with pytest.raises(ValueError):
        factor_coefficient(value, factorial_hint=1)
    with pytest.raises(ValueError):
        factor_coefficient(value, factorial_hint=501)


# --------------------------------------------------------------------------
# FactoredValue invariants and rendering
# --------------------------------------------------------------------------

def test_zero_value_renders_as_zero():
    factored = factor_coefficient(PiValue(mpq(0), 6))
    assert factored.sign == 0
    assert factored.to_rational() == 0
    assert factored.to_text() == "0"
    assert factored.to_latex() == "0"


def test_negative_value_gets_minus_prefix():
    factored = factor_coefficient(PiValue(mpq(-3, 7), 2))
    assert factored.sign == -1
    assert factored.to_text() == "-(3) / (7) * pi^2"
    assert factored.to_latex() == "-\\frac{3}{7}\\pi^2"


def test_unfactored_composite_is_flagged_in_text():
    value = PiValue(mpq(1, _HARD_SEMIPRIME), 4)
    factored = factor_coefficient(value, effort=3)
    assert not factored.fully_factored
    assert factored.denominator_unfactored == {_HARD_SEMIPRIME: 1}
    assert "(composite, unfactored)" in factored.to_text()
    assert factored.to_rational() == value.coefficient


def test_tampered_factored_value_is_rejected():
    factored = factor_coefficient(PiValue(mpq(1, 8400), 8))
    with pytest.raises(AssertionError):
        dataclasses.replace(factored, sign=-factored.sign)
    with pytest.raises(AssertionError):
        dataclasses.replace(factored, factorial=6)
    with pytest.raises(AssertionError):
        dataclasses.replace(factored, numerator={2: 1})


def test_factored_value_json_schema():
    factored = factor_coefficient(PiValue(mpq(19, 8403115488768000), 18),
                                  factorial_hint=17)
    data = factored.to_json()
    assert set(data) == {
        "sign", "numerator", "numerator_unfactored",
        "denominator", "denominator_unfactored", "factorial", "pi_power",
    }
    assert data["numerator"] == {"2": 3, "19": 1}
    assert data["factorial"] == 17
    assert data["pi_power"] == 18


def test_factoring_is_deterministic():
    value = PiValue(mpq(1_000_003 * 1_000_033, 8400), 8)
    assert factor_coefficient(value) == factor_coefficient(value)


def test_latex_exponent_bracing_rules():
    factored = factor_coefficient(PiValue(mpq(2**16 * 3**2, 1), 20))
    # single-digit exponents unbraced, >= 10 braced; exponent 1 bare
    assert factored.to_latex() == "2^{16}\\cdot 3^2\\pi^{20}"
    plain = factor_coefficient(PiValue(mpq(7, 1), 2))
    assert plain.to_latex() == "7\\pi^2"


@settings(max_examples=120, deadline=None)
@given(
    num=st.integers(min_value=-10**6, max_value=10**6).filter(lambda v: v != 0),
    den=st.integers(min_value=1, max_value=10**6),
    hint=st.one_of(st.none(), st.integers(min_value=2, max_value=30)),
    weight=st.sampled_from([0, 2, 6, 20]),
)
def test_factored_form_always_multiplies_back(num, den, hint, weight):
    value = PiValue(mpq(num, den), weight)
    factored = factor_coefficient(value, effort=DEFAULT_EFFORT, factorial_hint=hint)
    assert factored.to_rational() == value.coefficient
    assert factored.pi_power == weight
    assert factored.fully_factored
    if hint is not None:
        assert factored.factorial == hint
