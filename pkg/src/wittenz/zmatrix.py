"""Lattice-sum objects ``Z((sigma_1)_{e_1}, ..., (sigma_r)_{e_r})``.

A :class:`FormMatrix` is an ``ell x r`` integer matrix of linear forms
(stored column-wise) together with one nonnegative exponent per column.  It
represents the lattice sum

    Z = sum over x in Z^ell (x != 0) of prod_j <x, sigma_j>^(-e_j),

where points annihilating any form with positive exponent are omitted.

This module provides the exact base-case evaluations for *square* matrices
and a deterministic truncated numeric evaluation used as an oracle:

* ``square_base_case`` — for a nonsingular ``ell x ell`` matrix ``C`` with
  exponents ``e_j >= 0`` and even weight ``w >= 4``,

      Z = (-1)^ell (2 pi i)^w / (prod e_j! * |det C|)
          * sum_{z in Z^ell / C Z^ell} prod_j Bper_{e_j}((C^{-1} z)_j),

  with ``Bper`` the periodized Bernoulli polynomial.  Coset representatives
  are enumerated exactly through a lower-triangular column echelon form of
  ``C``.  Zero-exponent columns contribute ``Bper_0 = 1`` factors; they are
  how boundary terms of the reduction recursion encode absorbed sublattice
  sums, so they are retained here (a plain convergent lattice sum, by
  contrast, simply drops its zero-exponent columns).

* ``base_case_rank2`` — the contract-checked 2x2 case (both exponents
  positive, primitive columns).

* ``special_delta2(l, w)`` — the two-coset combination arising for
  determinant +-2:  ``(B_l B_{w-l} / (l! (w-l)!)) * (1 + (2/2^l - 1)
  (2/2^{w-l} - 1)) / 2``, returned as the coefficient of ``(2 pi i)^w``.

* ``truncated_lattice_sum`` — the plain partial sum over the box
  ``0 < max |x_i| <= bound`` in a fixed deterministic order.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterator, Sequence

import gmpy2
import mpmath
from gmpy2 import mpq, mpz

from .exact import PiValue, Rational, bernoulli, periodized_bernoulli

__all__ = [
    "FormMatrix",
    "PreconditionError",
    "MatrixShapeError",
    "SingularMatrixError",
    "WeightError",
    "ExponentError",
    "PrimitivityError",
    "base_case_rank2",
    "special_delta2",
    "square_base_case",
    "square_zcoef",
    "truncated_lattice_sum",
    "zcoef_to_pivalue",
]


class PreconditionError(ValueError):
    """A violated operation precondition (signals bad input, not a bug)."""


class MatrixShapeError(PreconditionError):
    """Matrix does not have the shape required by the operation."""


class SingularMatrixError(PreconditionError):
    """Square matrix of forms is singular."""


class WeightError(PreconditionError):
    """Weight is odd or below the minimum required by the operation."""


class ExponentError(PreconditionError):
    """An exponent is outside the operation's allowed range."""


class PrimitivityError(PreconditionError):
    """A column has entries with gcd > 1 where primitivity is required."""


# --------------------------------------------------------------------------
# FormMatrix
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class FormMatrix:
    """An ``ell x r`` matrix of integer linear forms with exponents.

    ``columns[j]`` is the coefficient vector of the j-th form; column order
    is significant and preserved.  Columns with exponent 0 are semantically
    absent from the represented lattice sum.
    """

    ell: int
    columns: tuple[tuple[int, ...], ...] = field()
    exponents: tuple[int, ...] = field()

    def __post_init__(self) -> None:
        cols = tuple(tuple(int(c) for c in col) for col in self.columns)
        exps = tuple(int(e) for e in self.exponents)
        object.__setattr__(self, "columns", cols)
        object.__setattr__(self, "exponents", exps)
        if self.ell < 1:
            raise MatrixShapeError(f"ell must be >= 1, got {self.ell}")
        if len(cols) < self.ell:
            raise MatrixShapeError(
                f"need at least ell={self.ell} columns, got {len(cols)}"
            )
        if len(exps) != len(cols):
            raise MatrixShapeError(
                f"{len(cols)} columns but {len(exps)} exponents"
            )
        for j, col in enumerate(cols):
            if len(col) != self.ell:
                raise MatrixShapeError(
                    f"column {j + 1} has length {len(col)}, expected {self.ell}"
                )
            if not any(col):
                raise MatrixShapeError(f"column {j + 1} is the zero vector")
        for j, e in enumerate(exps):
            if e < 0:
                raise ExponentError(f"exponent {j + 1} is negative")

    @property
    def r(self) -> int:
        return len(self.columns)

    @property
    def weight(self) -> int:
        return sum(self.exponents)

    def with_exponents(self, exponents: Sequence[int]) -> "FormMatrix":
        return FormMatrix(self.ell, self.columns, tuple(exponents))

    def drop_zero_exponents(self) -> "FormMatrix":
        """Remove semantically absent columns (exponent 0)."""
        kept = [
            (col, e) for col, e in zip(self.columns, self.exponents) if e > 0
        ]
        if not kept:
            raise MatrixShapeError("all exponents are 0")
        cols, exps = zip(*kept)
        return FormMatrix(self.ell, cols, exps)

    def to_json(self) -> dict:
        return {
            "ell": self.ell,
            "columns": [list(col) for col in self.columns],
            "exponents": list(self.exponents),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "FormMatrix":
        return cls(
            int(obj["ell"]),
            tuple(tuple(int(c) for c in col) for col in obj["columns"]),
            tuple(int(e) for e in obj["exponents"]),
        )

    def __str__(self) -> str:
        cols = ", ".join(
            f"{col}^{e}" for col, e in zip(self.columns, self.exponents)
        )
        return f"Z[{cols}]"


# --------------------------------------------------------------------------
# exact linear algebra on small integer matrices (rows representation)
# --------------------------------------------------------------------------

def _det_rows(rows: list[list[int]]) -> int:
    """Determinant by minor expansion (matrices here are at most 4x4)."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = 0
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1 :] for row in rows[1:]]
        term = rows[0][j] * _det_rows(minor)
        total += term if j % 2 == 0 else -term
    return total


def _inverse_rows(rows: list[list[int]]) -> list[list[Rational]]:
    """Exact inverse via Gauss-Jordan elimination over the rationals."""
    n = len(rows)
    work = [[mpq(v) for v in row] for row in rows]
    inv = [[mpq(1 if i == j else 0) for j in range(n)] for i in range(n)]
    for i in range(n):
        pivot_row = next(
            (k for k in range(i, n) if work[k][i] != 0), None
        )
        if pivot_row is None:
            raise SingularMatrixError("matrix is singular")
        if pivot_row != i:
            work[i], work[pivot_row] = work[pivot_row], work[i]
            inv[i], inv[pivot_row] = inv[pivot_row], inv[i]
        pivot = work[i][i]
        work[i] = [v / pivot for v in work[i]]
        inv[i] = [v / pivot for v in inv[i]]
        for k in range(n):
            if k != i and work[k][i] != 0:
                factor = work[k][i]
                work[k] = [a - factor * b for a, b in zip(work[k], work[i])]
                inv[k] = [a - factor * b for a, b in zip(inv[k], inv[i])]
    return inv


def _coset_diagonal(rows: list[list[int]]) -> list[int]:
    """Diagonal of a lower-triangular column echelon form of the matrix.

    Integer column operations (swaps, adding multiples, negation) preserve
    the column lattice, so ``{z : 0 <= z_i < d_i}`` enumerates a complete
    set of representatives of ``Z^n / C Z^n`` with ``prod d_i = |det C|``.
    """
    n = len(rows)
    m = [row[:] for row in rows]
    for i in range(n):
        while True:
            nonzero = [j for j in range(i, n) if m[i][j] != 0]
            if not nonzero:
                raise SingularMatrixError("matrix is singular")
            j_min = min(nonzero, key=lambda j: abs(m[i][j]))
            if j_min != i:
                for t in range(n):
                    m[t][i], m[t][j_min] = m[t][j_min], m[t][i]
            finished = True
            for j in range(i + 1, n):
                if m[i][j] != 0:
                    q = m[i][j] // m[i][i]
                    if q:
                        for t in range(n):
                            m[t][j] -= q * m[t][i]
                    if m[i][j] != 0:
                        finished = False
            if finished:
                break
        if m[i][i] < 0:
            for t in range(n):
                m[t][i] = -m[t][i]
    return [m[i][i] for i in range(n)]


# --------------------------------------------------------------------------
# exact square base case
# --------------------------------------------------------------------------

def zcoef_to_pivalue(zcoef: Rational, w: int) -> PiValue:
    """Convert a coefficient of ``(2 pi i)^w`` into a real PiValue.

    ``(2 pi i)^w = (-1)^(w/2) 2^w pi^w`` for even ``w``.
    """
    sign = -1 if (w // 2) % 2 else 1
    return PiValue(mpq(zcoef) * sign * mpz(2) ** w, w)


def square_zcoef(
    columns: Sequence[Sequence[int]], exponents: Sequence[int]
) -> Rational:
    """Coefficient of ``(2 pi i)^w`` for a nonsingular square matrix.

    Accepts any nonzero integer columns (content is divided out and folded
    into the coefficient as ``content^(-e_j)``) and any exponents ``>= 0``
    of even total weight.
    """
    ell = len(columns[0])
    if len(columns) != ell:
        raise MatrixShapeError(
            f"square base case needs {ell} columns, got {len(columns)}"
        )
    cols = [tuple(int(c) for c in col) for col in columns]
    exps = [int(e) for e in exponents]
    w = sum(exps)
    if w % 2 != 0:
        raise WeightError(f"weight {w} is odd")
    factor = mpq(1)
    primitive: list[tuple[int, ...]] = []
    for col, e in zip(cols, exps):
        g = math.gcd(*[abs(c) for c in col])
        if g == 0:
            raise MatrixShapeError("zero column")
        if g > 1:
            factor /= mpq(g) ** e
            col = tuple(c // g for c in col)
        primitive.append(col)
    rows = [[primitive[j][i] for j in range(ell)] for i in range(ell)]
    det = _det_rows(rows)
    if det == 0:
        raise SingularMatrixError("square base case matrix is singular")
    inv = _inverse_rows(rows)
    diag = _coset_diagonal(rows)
    total = mpq(0)
    for z in itertools.product(*(range(d) for d in diag)):
        term = mpq(1)
        for i, e in enumerate(exps):
            coord = sum(inv[i][j] * z[j] for j in range(ell))
            term *= periodized_bernoulli(e, coord)
            if term == 0:
                break
        total += term
    fact_prod = mpz(1)
    for e in exps:
        fact_prod *= gmpy2.fac(e)
    sign = -1 if ell % 2 else 1
    return factor * sign * total / (fact_prod * abs(det))


def square_base_case(
    columns: Sequence[Sequence[int]], exponents: Sequence[int]
) -> PiValue:
    """Exact value of a nonsingular square lattice sum as a PiValue."""
    w = sum(int(e) for e in exponents)
    if w < 4:
        raise WeightError(f"weight {w} < 4")
    return zcoef_to_pivalue(square_zcoef(columns, exponents), w)


def base_case_rank2(matrix: FormMatrix) -> PiValue:
    """Exact value of a 2x2 lattice sum with positive exponents.

    Requires ``ell = 2``, exactly two columns, both exponents >= 1, even
    weight >= 4, nonzero determinant and primitive columns.  The value is

        (2 pi i)^(j+k) / (j! k! |delta|)
            * sum_{z in Z^2 / C Z^2} Bper_j((C^{-1}z)_1) Bper_k((C^{-1}z)_2).
    """
    if matrix.ell != 2 or matrix.r != 2:
        raise MatrixShapeError(
            f"base_case_rank2 needs a 2x2 matrix, got ell={matrix.ell}, r={matrix.r}"
        )
    j, k = matrix.exponents
    if j < 1 or k < 1:
        raise ExponentError(f"exponents must be >= 1, got ({j}, {k})")
    w = j + k
    if w % 2 != 0:
        raise WeightError(f"weight {w} is odd")
    if w < 4:
        raise WeightError(f"weight {w} < 4")
    for idx, col in enumerate(matrix.columns):
        if math.gcd(*[abs(c) for c in col]) != 1:
            raise PrimitivityError(f"column {idx + 1} {col} is not primitive")
    return square_base_case(matrix.columns, matrix.exponents)


def special_delta2(l: int, w: int) -> Rational:
    """Coefficient of ``(2 pi i)^w`` for the determinant +-2 base case:

        (B_l B_{w-l} / (l! (w-l)!)) * (1 + (2/2^l - 1)(2/2^{w-l} - 1)) / 2.
    """
    if w % 2 != 0 or w < 4:
        raise WeightError(f"w must be even >= 4, got {w}")
    if not 0 <= l <= w:
        raise ExponentError(f"l must lie in [0, {w}], got {l}")
    beta = bernoulli(l) * bernoulli(w - l) / (gmpy2.fac(l) * gmpy2.fac(w - l))
    correction = (1 + (mpq(2) ** (1 - l) - 1) * (mpq(2) ** (1 - (w - l)) - 1)) / 2
    return beta * correction


# --------------------------------------------------------------------------
# truncated numeric lattice sum
# --------------------------------------------------------------------------

def _half_box_prefixes(ell: int, bound: int) -> Iterator[tuple[tuple[int, ...], int]]:
    """Yield ``(prefix, start)`` pairs describing the half box.

    The half lattice keeps points whose first nonzero coordinate is
    positive.  Each yielded prefix covers the first ``ell - 1`` coordinates;
    the last coordinate then ranges over ``start .. bound``.
    """
    if ell == 1:
        yield (), 1
        return
    span = range(-bound, bound + 1)
    for prefix in itertools.product(*([span] * (ell - 1))):
        first_nonzero = next((v for v in prefix if v != 0), 0)
        if first_nonzero > 0:
            yield prefix, -bound
        elif first_nonzero == 0:
            yield prefix, 1


def truncated_lattice_sum(
    matrix: FormMatrix, bound: int, precision_digits: int
) -> mpmath.mpf:
    """Plain truncated lattice sum over ``0 < max |x_i| <= bound``.

    Summation runs over the half lattice (first nonzero coordinate
    positive) and doubles the result, which equals the symmetric full-box
    sum exactly: the point map ``x -> -x`` scales each term by
    ``(-1)^weight``, so odd weights return exactly 0.  Terms accumulate as
    exact scaled integers (truncation error below ``10^-(precision+12)``),
    in a fixed deterministic order, so output is bit-reproducible.
    """
    if bound < 1:
        raise PreconditionError(f"bound must be >= 1, got {bound}")
    if precision_digits < 30:
        raise PreconditionError(
            f"precision must be >= 30 digits, got {precision_digits}"
        )
    work = matrix.drop_zero_exponents()
    if work.weight % 2 != 0:
        with mpmath.workdps(precision_digits):
            return mpmath.mpf(0)
    cols = [list(col) for col in work.columns]
    exps = list(work.exponents)
    ell = work.ell
    last_coeffs = [col[ell - 1] for col in cols]
    scale = mpz(10) ** (precision_digits + 20)
    acc = mpz(0)
    for prefix, start in _half_box_prefixes(ell, bound):
        # Linear forms at (prefix, start), then incremental updates in the
        # last coordinate.
        forms = [
            sum(col[i] * prefix[i] for i in range(ell - 1)) + col[ell - 1] * start
            for col in cols
        ]
        for _x_last in range(start, bound + 1):
            denom = 1
            for f, e in zip(forms, exps):
                if f == 0:
                    denom = 0
                    break
                denom *= f**e
            if denom:
                if denom > 0:
                    acc += scale // denom
                else:
                    acc -= scale // (-denom)
            for idx, c in enumerate(last_coeffs):
                forms[idx] += c
    with mpmath.workdps(precision_digits):
        return mpmath.mpf(2) * mpmath.mpf(int(acc)) / mpmath.mpf(int(scale))
