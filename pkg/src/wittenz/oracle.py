"""Independent numeric check: direct truncated summation of the series.

Every supported value is, by definition, a sum over the positive orthant
of inverse powers of products of linear forms.  This module sums that
series head-on -- no reduction steps, no Bernoulli numbers -- and reports
how many digits of the truncated sum agree with a claimed exact value.
It is deliberately naive: its purpose is to share no machinery with the
tree reduction and closed forms it cross-checks.

Terms accumulate as exact scaled integers (each term contributes
``floor(scale / denominator)``, an error below one unit of the guarded
scale), so a given ``(algebra, n, bound, precision)`` request produces a
bit-identical digit string on every run.  Two exact identities keep the
inner loop fast:

* nested floor division, ``x // (q * g) == (x // q) // g`` for positive
  integers, lets the prefix part of each denominator be divided out once
  per inner row;
* when the column multiset is invariant under reversing the variable
  order (the special linear algebras), mirror points have identical
  terms, so the sum walks canonical representatives and doubles the
  off-palindrome ones.

The inner products are built by numpy in ``int64`` when a precomputed
bound proves they cannot overflow, and in plain Python integers
otherwise; both paths are exact, so the choice never changes the output.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterator, Sequence

import mpmath
import numpy

from .exact import PiValue
from .zmatrix import PreconditionError

if TYPE_CHECKING:  # pragma: no cover - import cycle guard for type hints
    from .catalog import AlgebraSpec

__all__ = [
    "SeriesDescriptor",
    "VerificationReport",
    "series_descriptor",
    "sum_series",
    "verify",
]

_GUARD_DIGITS = 20
_INT64_MAX = 2**63 - 1


@dataclass(frozen=True)
class SeriesDescriptor:
    """The positive-orthant series ``sum prod form_j(m)^(-multiplier_j * n)``.

    ``factors`` pairs each linear form's coefficient vector with its
    exponent multiplier (always 1 for the catalog algebras, where every
    form is raised to the common exponent ``n``).
    """

    ell: int
    factors: tuple[tuple[tuple[int, ...], int], ...]

    def __post_init__(self) -> None:
        for vector, multiplier in self.factors:
            if len(vector) != self.ell:
                raise ValueError(
                    f"form {vector} does not have {self.ell} coefficients"
                )
            if min(vector) < 0 or max(vector) <= 0 or multiplier < 1:
                # Nonnegative, not identically zero: strictly positive on
                # the positive orthant, so no term is ever omitted.
                raise ValueError(f"form {vector} is not positive on the orthant")


def series_descriptor(spec: "AlgebraSpec") -> SeriesDescriptor:
    """Descriptor for an algebra's defining series (one factor per column)."""
    return SeriesDescriptor(
        ell=spec.ell,
        factors=tuple((tuple(col), 1) for col in spec.columns),
    )


def _is_mirror_symmetric(columns: Sequence[tuple[int, ...]]) -> bool:
    """True when reversing the variable order permutes the columns."""
    return sorted(columns) == sorted(tuple(reversed(col)) for col in columns)


def _mirror_weighted_prefixes(
    ell: int, bound: int
) -> Iterator[tuple[tuple[int, ...], int, int, int]]:
    """Canonical prefixes ``(prefix, start, stop, weight)`` for mirror folds.

    Yields, for each outer prefix, the inner-coordinate range whose points
    are strictly lexicographically below their mirror (weight 2), plus the
    palindromic diagonal (weight 1).  Covers every box point exactly once
    through the mirror pairing.
    """
    if ell == 2:
        for a in range(1, bound + 1):
            if a < bound:
                yield (a,), a + 1, bound, 2
            yield (a,), a, a, 1
    elif ell == 4:
        for a in range(1, bound + 1):
            for b in range(1, bound + 1):
                for c in range(1, bound + 1):
                    if a < bound:
                        yield (a, b, c), a + 1, bound, 2
                    if b < c:
                        yield (a, b, c), a, a, 2
                    elif b == c:
                        yield (a, b, c), a, a, 1
    else:  # pragma: no cover - no catalog algebra hits this combination
        raise PreconditionError(f"mirror fold undefined for ell={ell}")


def _plain_prefixes(
    ell: int, bound: int
) -> Iterator[tuple[tuple[int, ...], int, int, int]]:
    for prefix in itertools.product(range(1, bound + 1), repeat=ell - 1):
        yield prefix, 1, bound, 1


def sum_series(
    spec: "AlgebraSpec", n: int, bound: int, precision_digits: int
) -> mpmath.mpf:
    """Truncated positive-orthant series over ``1 <= m_i <= bound``.

    Returns the algebra's reference normalization: the plain form-product
    series, times ``M**n`` exactly when the algebra's table values carry
    that factor (`spec.table_includes_m_power`).
    """
    if bound < 1:
        raise PreconditionError(f"bound must be >= 1, got {bound}")
    if precision_digits < 30:
        raise PreconditionError(
            f"precision must be >= 30 digits, got {precision_digits}"
        )
    if n < 2 or n % 2 != 0:
        raise PreconditionError(f"series exponent must be even and >= 2, got {n}")
    descriptor = series_descriptor(spec)
    ell = descriptor.ell
    forms = [vec for vec, _multiplier in descriptor.factors]

    scale = 10 ** (precision_digits + _GUARD_DIGITS)
    numerator = scale * (spec.M**n if spec.table_includes_m_power else 1)

    # Split the forms by whether they involve the innermost variable; the
    # constant part of each denominator is divided out once per row.
    outer_forms = [col[:-1] for col in forms if col[-1] == 0]
    inner_forms = [(col[:-1], col[-1]) for col in forms if col[-1] != 0]

    # numpy's int64 path is safe iff the largest possible inner product,
    # computed exactly here, cannot overflow.
    max_inner = 1
    for coeffs, last in inner_forms:
        max_inner *= bound * (sum(coeffs) + last)
    use_numpy = max_inner <= _INT64_MAX
    steps = numpy.arange(1, bound + 1, dtype=numpy.int64)

    if _is_mirror_symmetric(forms) and ell in (2, 4):
        prefix_plan = _mirror_weighted_prefixes(ell, bound)
    else:
        prefix_plan = _plain_prefixes(ell, bound)

    acc = 0
    for prefix, start, stop, weight in prefix_plan:
        if stop < start:
            continue
        outer = 1
        for coeffs in outer_forms:
            outer *= sum(c * x for c, x in zip(coeffs, prefix))
        row_numerator = numerator // outer**n
        if not row_numerator:
            continue
        offsets = [
            (sum(c * x for c, x in zip(coeffs, prefix)), last)
            for coeffs, last in inner_forms
        ]
        if use_numpy:
            window = steps[start - 1 : stop]
            products = window * offsets[0][1] + offsets[0][0]
            for off, last in offsets[1:]:
                products = products * (window * last + off)
            inner_values = products.tolist()
        else:
            inner_values = [
                _product_at(offsets, m) for m in range(start, stop + 1)
            ]
        if n == 2:
            row = sum(row_numerator // g // g for g in inner_values)
        else:
            row = 0
            for g in inner_values:
                term = row_numerator
                for _ in range(n):
                    term //= g
                row += term
        acc += weight * row

    with mpmath.workdps(precision_digits):
        return mpmath.mpf(acc) / mpmath.mpf(scale)


def _product_at(offsets: list[tuple[int, int]], m: int) -> int:
    product = 1
    for off, last in offsets:
        product *= off + last * m
    return product


@dataclass(frozen=True)
class VerificationReport:
    """Digit-agreement report between an exact value and the series."""

    algebra: str
    n: int
    exact: PiValue
    numeric: mpmath.mpf
    matching_digits: int
    bound: int
    precision_digits: int
    inconclusive: bool

    def to_json(self) -> dict:
        return {
            "algebra": self.algebra,
            "n": self.n,
            "bound": self.bound,
            "precision": self.precision_digits,
            "matching_digits": self.matching_digits,
            "inconclusive": self.inconclusive,
            "exact": self.exact.to_json(),
            "numeric": mpmath.nstr(self.numeric, self.precision_digits),
        }


def verify(
    spec: "AlgebraSpec",
    n: int,
    exact: PiValue,
    bound: int,
    precision_digits: int,
) -> VerificationReport:
    """Compare *exact* against the truncated series, counting shared digits.

    ``matching_digits`` is ``floor(-log10(relative difference))``, capped
    at the requested precision.  The report flags itself inconclusive
    when the agreement runs into the requested precision (closer than 10
    digits to it), since digits beyond that are artifacts of the
    evaluation rather than evidence.  The summation itself always runs
    at 30 digits or more, so a low-precision request yields an honest
    (if vacuous) inconclusive report rather than a summation failure.
    """
    if exact.pi_power != n * spec.r:
        raise PreconditionError(
            f"pi power {exact.pi_power} does not match weight "
            f"{n}*{spec.r} for {spec.name}"
        )
    if precision_digits < 1:
        raise PreconditionError(
            f"precision must be a positive digit count, got {precision_digits}"
        )
    working = max(precision_digits, 30)
    numeric = sum_series(spec, n, bound, working)
    with mpmath.workdps(working + 10):
        reference = exact.numeric(working + 10)
        if reference == 0:
            raise PreconditionError("exact value must be nonzero")
        relative = abs(reference - numeric) / abs(reference)
        if relative == 0:
            matching = precision_digits
        else:
            matching = int(mpmath.floor(-mpmath.log10(relative)))
            matching = min(matching, precision_digits)
    return VerificationReport(
        algebra=spec.name,
        n=n,
        exact=exact,
        numeric=numeric,
        matching_digits=matching,
        bound=bound,
        precision_digits=precision_digits,
        inconclusive=matching > precision_digits - 10,
    )
