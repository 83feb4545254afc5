"""Tests for the truncated-series oracle: brute-force agreement at small
bounds, determinism, convergence behavior, and verification semantics."""

from __future__ import annotations

import itertools

import mpmath
import pytest
from gmpy2 import mpq, mpz

from wittenz.api import table_value_via_tree
from wittenz.catalog import ALGEBRA_NAMES, get_algebra
from wittenz.exact import PiValue
from wittenz.oracle import (
    SeriesDescriptor,
    VerificationReport,
    _is_mirror_symmetric,
    series_descriptor,
    sum_series,
    verify,
)
from wittenz.zmatrix import PreconditionError


def _brute_force(spec, n: int, bound: int) -> mpq:
    """Direct exact sum over the orthant box, same normalization as
    ``sum_series`` (the M^n factor exactly when the tables carry it)."""
    total = mpq(0)
    for point in itertools.product(range(1, bound + 1), repeat=spec.ell):
        term = mpq(1)
        for col in spec.columns:
            value = sum(c * x for c, x in zip(col, point))
            term /= mpq(value) ** n
        total += term
    if spec.table_includes_m_power:
        total *= mpz(spec.M) ** n
    return total


# --------------------------------------------------------------------------
# agreement with brute force
# --------------------------------------------------------------------------

@pytest.mark.parametrize(
    "name, bound",
    [("sl3", 12), ("so5", 9), ("g2", 6), ("so7", 4), ("sp6", 4), ("sl5", 3)],
)
def test_sum_series_matches_brute_force(name, bound):
    spec = get_algebra(name)
    for n in (2, 4):
        expected = _brute_force(spec, n, bound)
        got = sum_series(spec, n, bound, 35)
        with mpmath.workdps(45):
            reference = mpmath.mpf(expected.numerator) / mpmath.mpf(
                expected.denominator
            )
            assert abs(got - reference) <= abs(reference) * mpmath.mpf(10) ** -30


def test_g2_single_point_value_is_exactly_one():
    # At bound 1 the only lattice point is (1,1), where the six forms take
    # the values 1,1,2,3,4,5; with the M^n normalization the sum is
    # (120^n) / (120^n) = 1 exactly.
    assert sum_series(get_algebra("g2"), 2, 1, 30) == 1
    assert sum_series(get_algebra("g2"), 4, 1, 30) == 1


def test_sum_series_is_deterministic():
    spec = get_algebra("so5")
    runs = {repr(sum_series(spec, 2, 75, 40)) for _ in range(3)}
    assert len(runs) == 1


def test_sum_series_preconditions():
    spec = get_algebra("so5")
    with pytest.raises(PreconditionError):
        sum_series(spec, 2, 0, 30)
    with pytest.raises(PreconditionError):
        sum_series(spec, 2, 10, 20)  # precision below the supported floor
    with pytest.raises(PreconditionError):
        sum_series(spec, 3, 10, 30)  # odd exponent
    with pytest.raises(PreconditionError):
        sum_series(spec, 0, 10, 30)


# --------------------------------------------------------------------------
# convergence toward the exact values
# --------------------------------------------------------------------------

def _digits_against_exact(spec, n, bound, precision=40):
    exact = table_value_via_tree(spec, n // 2)
    report = verify(spec, n, exact, bound, precision)
    return report.matching_digits


def test_so5_matching_digits_increase_with_bound():
    spec = get_algebra("so5")
    ladder = [_digits_against_exact(spec, 2, b) for b in (25, 50, 100, 200)]
    assert ladder == sorted(ladder)
    assert ladder[-1] >= 8
    assert ladder[0] >= 3


def test_sl3_mirror_fold_still_converges():
    # sl3 uses the mirror-symmetry fold; its digits must still track the
    # exact value.
    assert _digits_against_exact(get_algebra("sl3"), 2, 400) >= 7


# --------------------------------------------------------------------------
# verification reports
# --------------------------------------------------------------------------

def test_verify_counts_digits_and_passes_sanity():
    spec = get_algebra("so5")
    exact = table_value_via_tree(spec, 1)
    report = verify(spec, 2, exact, 200, 30)
    assert isinstance(report, VerificationReport)
    assert report.matching_digits >= 8
    assert not report.inconclusive
    assert report.algebra == "so5"
    assert report.n == 2


def test_verify_detects_perturbed_exact_value():
    # A relative perturbation of 1e-6 caps agreement at ~6 digits: the
    # negative control that the oracle is actually independent.
    spec = get_algebra("so5")
    exact = table_value_via_tree(spec, 1)
    perturbed = exact.scaled(mpq(1000001, 1000000))
    report = verify(spec, 2, perturbed, 200, 30)
    assert report.matching_digits <= 6


def test_verify_low_precision_is_inconclusive():
    spec = get_algebra("so5")
    exact = table_value_via_tree(spec, 1)
    report = verify(spec, 2, exact, 50, 5)
    assert report.inconclusive
    assert report.matching_digits <= 5


def test_verify_requires_consistent_weight():
    spec = get_algebra("so5")
    wrong_weight = PiValue(mpq(1, 8400), 10)
    with pytest.raises(PreconditionError):
        verify(spec, 2, wrong_weight, 50, 30)
    with pytest.raises(PreconditionError):
        verify(spec, 2, table_value_via_tree(spec, 1), 50, 0)


def test_verification_report_json_schema():
    spec = get_algebra("so5")
    report = verify(spec, 2, table_value_via_tree(spec, 1), 100, 30)
    data = report.to_json()
    assert set(data) == {
        "algebra", "n", "bound", "precision", "matching_digits",
        "inconclusive", "exact", "numeric",
    }
    assert data["algebra"] == "so5"
    assert data["exact"] == table_value_via_tree(spec, 1).to_json()
    assert isinstance(data["numeric"], str)


# --------------------------------------------------------------------------
# series descriptors and the mirror fold
# --------------------------------------------------------------------------

def test_series_descriptor_reflects_catalog_columns():
    spec = get_algebra("so7")
    descriptor = series_descriptor(spec)
    assert descriptor.ell == 3
    assert tuple(vec for vec, _ in descriptor.factors) == spec.columns
    assert all(mult == 1 for _, mult in descriptor.factors)


def test_series_descriptor_validation():
    with pytest.raises(ValueError):
        SeriesDescriptor(2, (((1, 0, 0), 1),))  # wrong vector length
    with pytest.raises(ValueError):
        SeriesDescriptor(2, (((0, 0), 1),))  # zero vector
    with pytest.raises(ValueError):
        SeriesDescriptor(2, (((1, 0), 0),))  # nonpositive multiplier
    with pytest.raises(ValueError):
        SeriesDescriptor(2, (((1, -1), 1),))  # negative coefficient


def test_mirror_symmetry_detection_per_algebra():
    # Variable reversal permutes the column multiset only for the two
    # special linear algebras.
    expected = {
        "sl3": True, "so5": False, "g2": False,
        "so7": False, "sp6": False, "sl5": True,
    }
    for name in ALGEBRA_NAMES:
        spec = get_algebra(name)
        assert _is_mirror_symmetric(spec.columns) == expected[name], name
