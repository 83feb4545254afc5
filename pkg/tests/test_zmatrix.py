"""Tests for square base cases, the rank-2 closed evaluation, the
determinant-2 coset correction, and the truncated numeric lattice sum."""

from __future__ import annotations

import mpmath
import pytest
from gmpy2 import mpq
from hypothesis import given, settings
from hypothesis import strategies as st

from wittenz.exact import PiValue, zeta_even
from wittenz.zmatrix import (
    ExponentError,
    FormMatrix,
    MatrixShapeError,
    PreconditionError,
    PrimitivityError,
    SingularMatrixError,
    WeightError,
    base_case_rank2,
    special_delta2,
    square_base_case,
    square_zcoef,
    truncated_lattice_sum,
    zcoef_to_pivalue,
)


# --------------------------------------------------------------------------
# FormMatrix
# --------------------------------------------------------------------------

def test_form_matrix_shape_and_weight():
    m = FormMatrix(2, ((1, 0), (0, 1), (1, 1)), (2, 4, 6))
    assert m.r == 3
    assert m.weight == 12


def test_form_matrix_rejects_bad_shapes():
    with pytest.raises(PreconditionError):
        FormMatrix(2, ((1, 0, 0),), (2,))
    with pytest.raises(PreconditionError):
        FormMatrix(2, ((1, 0), (0, 1)), (2,))


def test_drop_zero_exponents_removes_columns():
    m = FormMatrix(2, ((1, 0), (0, 1), (1, 1)), (2, 0, 4))
    d = m.drop_zero_exponents()
    assert d.columns == ((1, 0), (1, 1))
    assert d.exponents == (2, 4)
    assert d.weight == m.weight


# --------------------------------------------------------------------------
# square base cases
# --------------------------------------------------------------------------

def test_square_base_case_identity_is_zeta_product():
    # Full-lattice sums: each coordinate of the identity contributes the
    # two-sided sum over nonzero integers, i.e. 2 * zeta(e).
    assert square_base_case(((1, 0), (0, 1)), (2, 2)) == (
        zeta_even(2) * zeta_even(2)
    ).scaled(4)
    assert square_base_case(((1, 0), (0, 1)), (4, 2)) == (
        zeta_even(4) * zeta_even(2)
    ).scaled(4)
    assert square_base_case(
        ((1, 0, 0), (0, 1, 0), (0, 0, 1)), (2, 2, 2)
    ) == (zeta_even(2) * zeta_even(2) * zeta_even(2)).scaled(8)


def test_square_base_case_folds_column_content():
    plain = square_base_case(((1, 0), (0, 1)), (2, 4))
    scaled = square_base_case(((3, 0), (0, 1)), (2, 4))
    assert scaled == plain.scaled(mpq(1, 9))


def test_square_base_case_unimodular_shear_invariance():
    # Columns (1,0), (1,1) differ from the identity by a unimodular change
    # of summation variables, so the sums agree exactly.
    assert square_base_case(((1, 0), (1, 1)), (2, 2)) == square_base_case(
        ((1, 0), (0, 1)), (2, 2)
    )


def test_square_zcoef_rejects_singular_and_odd():
    with pytest.raises(SingularMatrixError):
        square_zcoef(((1, 2), (2, 4)), (2, 2))
    with pytest.raises(WeightError):
        square_zcoef(((1, 0), (0, 1)), (2, 3))
    with pytest.raises(MatrixShapeError):
        square_zcoef(((1, 0), (0, 1), (1, 1)), (2, 2, 2))


@given(st.integers(1, 6), st.integers(1, 6))
@settings(max_examples=60)
def test_square_zcoef_content_scaling_property(g, e):
    base = square_zcoef(((1, 0), (0, 1)), (2 * e, 2 * e))
    scaled = square_zcoef(((g, 0), (0, 1)), (2 * e, 2 * e))
    assert scaled == base / mpq(g) ** (2 * e)


# --------------------------------------------------------------------------
# rank-2 closed evaluation
# --------------------------------------------------------------------------

def test_base_case_rank2_matches_square_base_case():
    m = FormMatrix(2, ((1, 1), (1, 2)), (2, 4))
    assert base_case_rank2(m) == square_base_case(m.columns, m.exponents)


def test_base_case_rank2_determinant_two_matches_delta2():
    # Columns (1,-1), (1,1): the two cosets of the index-2 sublattice are
    # represented by (0,0) and (1/2,1/2) after applying the inverse.
    for j, k in [(2, 2), (4, 2), (3, 3), (2, 6), (5, 3)]:
        m = FormMatrix(2, ((1, -1), (1, 1)), (j, k))
        assert base_case_rank2(m) == zcoef_to_pivalue(
            special_delta2(j, j + k), j + k
        )


def test_base_case_rank2_rejects_bad_inputs():
    with pytest.raises(MatrixShapeError):
        base_case_rank2(FormMatrix(2, ((1, 0), (0, 1), (1, 1)), (2, 2, 2)))
    with pytest.raises(ExponentError):
        base_case_rank2(FormMatrix(2, ((1, 0), (0, 1)), (0, 4)))
    with pytest.raises(WeightError):
        base_case_rank2(FormMatrix(2, ((1, 0), (0, 1)), (1, 1)))
    with pytest.raises(PrimitivityError):
        base_case_rank2(FormMatrix(2, ((2, 0), (0, 1)), (2, 2)))


def test_special_delta2_domain_and_values():
    # l = 0 or l = w reduce to the plain Bernoulli product times
    # (1 + (2**1 - 1)(2**(1-w) - 1)) / 2.
    assert special_delta2(2, 4) == mpq(1, 6) * mpq(1, 6) / 4 * (
        1 + (mpq(2) ** -1 - 1) * (mpq(2) ** -1 - 1)
    ) / 2
    with pytest.raises(WeightError):
        special_delta2(2, 5)
    with pytest.raises(ExponentError):
        special_delta2(9, 8)


# --------------------------------------------------------------------------
# truncated numeric lattice sum
# --------------------------------------------------------------------------

def test_truncated_sum_odd_weight_is_exactly_zero():
    m = FormMatrix(2, ((1, 0), (0, 1)), (2, 3))
    assert truncated_lattice_sum(m, 40, 30) == 0


def test_truncated_sum_is_deterministic():
    m = FormMatrix(2, ((1, 0), (1, 2)), (4, 4))
    a = truncated_lattice_sum(m, 60, 35)
    b = truncated_lattice_sum(m, 60, 35)
    assert a == b


def test_truncated_sum_preconditions():
    m = FormMatrix(2, ((1, 0), (0, 1)), (2, 2))
    with pytest.raises(PreconditionError):
        truncated_lattice_sum(m, 0, 30)
    with pytest.raises(PreconditionError):
        truncated_lattice_sum(m, 10, 10)


def test_truncated_sum_ignores_zero_exponent_columns():
    base = FormMatrix(2, ((1, 0), (1, 2)), (4, 4))
    padded = FormMatrix(2, ((1, 0), (0, 1), (1, 2)), (4, 0, 4))
    assert truncated_lattice_sum(base, 25, 30) == truncated_lattice_sum(
        padded, 25, 30
    )


def _matching_digits(numeric: mpmath.mpf, exact: PiValue, dps: int = 40) -> int:
    with mpmath.workdps(dps):
        reference = exact.numeric(dps)
        rel = abs((numeric - reference) / reference)
        if rel == 0:
            return dps
        return int(mpmath.floor(-mpmath.log10(rel)))


@pytest.mark.parametrize(
    "columns, exponents",
    [
        (((1, 0), (0, 1)), (4, 4)),
        (((1, 0), (1, 2)), (4, 4)),
        (((1, -1), (1, 1)), (4, 4)),
        (((2, 1), (1, 1)), (4, 6)),
    ],
)
def test_base_case_rank2_matches_truncated_sum(columns, exponents):
    m = FormMatrix(2, columns, exponents)
    numeric = truncated_lattice_sum(m, 400, 30)
    assert _matching_digits(numeric, base_case_rank2(m)) >= 5


def test_square_base_case_rank3_matches_truncated_sum():
    m = FormMatrix(3, ((1, 0, 0), (0, 1, 0), (1, 1, 1)), (4, 4, 4))
    numeric = truncated_lattice_sum(m, 35, 30)
    assert _matching_digits(numeric, square_base_case(m.columns, m.exponents)) >= 4
