"""Exact rational arithmetic primitives used throughout the package.

Everything downstream of this module manipulates two kinds of exact values:

* plain rationals (``gmpy2.mpq``), used for Bernoulli numbers, reduction
  coefficients and intermediate bracket sums;
* :class:`PiValue`, an exact rational multiple of an even power of pi,
  which is the shape of every special value computed by the package:
  ``coefficient * pi**pi_power`` with ``pi_power`` even.

The module provides

* a growing, thread-safe cache of Bernoulli numbers ``B_n`` (convention
  ``B_1 = -1/2``), filled by the defining recurrence
  ``sum_{k=0}^{n} C(n+1, k) B_k = 0``;
* ``binomial`` with the boundary conventions required by the reduction
  engine: ``C(t, k) = 0`` whenever ``k < 0``, ``t < 0`` or ``k > t``;
* ``zeta_even(w)`` returning the classical even zeta value
  ``zeta(w) = (-1)**(w/2+1) * B_w * (2*pi)**w / (2 * w!)`` as a
  :class:`PiValue`;
* ``periodized_bernoulli(j, x)`` returning ``B_j({x})``, the Bernoulli
  polynomial evaluated at the fractional part of ``x``, with the mean-value
  convention ``B_1({integer}) = 0``.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import gmpy2
import mpmath
from gmpy2 import mpq, mpz

__all__ = [
    "Rational",
    "RationalLike",
    "PiValue",
    "bernoulli",
    "bernoulli_warm",
    "binomial",
    "format_rational",
    "parse_rational",
    "periodized_bernoulli",
    "rational_from_json",
    "rational_to_json",
    "to_rational",
    "zeta_even",
]

Rational = type(mpq(0))
RationalLike = Union[int, str, Fraction, Rational]


# --------------------------------------------------------------------------
# rationals: coercion, parsing, serialization
# --------------------------------------------------------------------------

def to_rational(value: RationalLike) -> Rational:
    """Coerce *value* (int, Fraction, mpq or decimal string) to ``mpq``."""
    if isinstance(value, Rational):
        return value
    if isinstance(value, int):
        return mpq(value)
    if isinstance(value, Fraction):
        return mpq(value.numerator, value.denominator)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def parse_rational(text: str) -> Rational:
    """Parse ``"num"`` or ``"num/den"`` (decimal integer strings) to ``mpq``."""
    body = text.strip()
    if "/" in body:
        num_text, den_text = body.split("/", 1)
        num, den = int(num_text), int(den_text)
        if den == 0:
            raise ValueError(f"zero denominator in rational literal {text!r}")
        return mpq(num, den)
    return mpq(int(body))


def format_rational(value: RationalLike) -> str:
    """Format an exact rational as ``"num"`` or ``"num/den"`` (den > 1 only)."""
    q = to_rational(value)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def rational_to_json(value: RationalLike) -> dict:
    """Serialize a rational as ``{"num": str, "den": str}``."""
    q = to_rational(value)
    return {"num": str(q.numerator), "den": str(q.denominator)}


def rational_from_json(obj: dict) -> Rational:
    """Inverse of :func:`rational_to_json` (missing ``den`` means 1)."""
    return mpq(int(obj["num"]), int(obj.get("den", "1")))


# --------------------------------------------------------------------------
# Bernoulli numbers
# --------------------------------------------------------------------------

_BERNOULLI: list[Rational] = [mpq(1)]
_BERNOULLI_LOCK = threading.Lock()


def bernoulli(n: int) -> Rational:
    """Return ``B_n`` with the convention ``B_1 = -1/2``.

    Values are cached; the cache grows by the defining recurrence
    ``B_n = -1/(n+1) * sum_{k=0}^{n-1} C(n+1, k) B_k``.
    """
    if n < 0:
        raise ValueError(f"Bernoulli index must be nonnegative, got {n}")
    if n >= len(_BERNOULLI):
        bernoulli_warm(n)
    return _BERNOULLI[n]


def bernoulli_warm(n_max: int) -> None:
    """Ensure ``B_0 .. B_{n_max}`` are cached."""
    with _BERNOULLI_LOCK:
        cache = _BERNOULLI
        for n in range(len(cache), n_max + 1):
            if n > 1 and n % 2 == 1:
                cache.append(mpq(0))
                continue
            acc = mpq(0)
            for k in range(n):
                if cache[k]:
                    acc += gmpy2.bincoef(n + 1, k) * cache[k]
            cache.append(-acc / (n + 1))


# --------------------------------------------------------------------------
# binomial coefficients with reduction-engine boundary conventions
# --------------------------------------------------------------------------

def binomial(t: int, k: int) -> int:
    """``C(t, k)`` with ``C(t, k) = 0`` for ``k < 0``, ``t < 0`` or ``k > t``.

    The reduction recursion sums terms whose coefficients include
    ``C(e_p + e_q - i - 1, e_p - 1)``; with zero exponents these arguments
    reach ``-1``, and the affected terms must drop out.  Returning 0 outside
    the classical triangle implements exactly that.
    """
    if k < 0 or t < 0 or k > t:
        return 0
    return int(gmpy2.bincoef(t, k))


# --------------------------------------------------------------------------
# exact multiples of powers of pi
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class PiValue:
    """An exact value ``coefficient * pi**pi_power`` with even ``pi_power``.

    Addition requires matching powers; multiplication adds powers.  The
    class is hashable and usable as a dict key, which the reduction engine
    relies on for memoization of shared subtrees.
    """

    coefficient: Rational
    pi_power: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "coefficient", to_rational(self.coefficient))
        if self.pi_power < 0 or self.pi_power % 2 != 0:
            raise ValueError(f"pi_power must be even and >= 0, got {self.pi_power}")

    def __add__(self, other: "PiValue") -> "PiValue":
        if not isinstance(other, PiValue):
            return NotImplemented
        if self.pi_power != other.pi_power:
            if self.coefficient == 0:
                return other
            if other.coefficient == 0:
                return self
            raise ValueError(
                f"cannot add pi^{self.pi_power} and pi^{other.pi_power} terms"
            )
        return PiValue(self.coefficient + other.coefficient, self.pi_power)

    def __sub__(self, other: "PiValue") -> "PiValue":
        return self + (-other)

    def __neg__(self) -> "PiValue":
        return PiValue(-self.coefficient, self.pi_power)

    def __mul__(self, other) -> "PiValue":
        if isinstance(other, PiValue):
            return PiValue(
                self.coefficient * other.coefficient,
                self.pi_power + other.pi_power,
            )
        return PiValue(self.coefficient * to_rational(other), self.pi_power)

    __rmul__ = __mul__

    def scaled(self, factor: RationalLike) -> "PiValue":
        """Return this value multiplied by an exact rational factor."""
        return PiValue(self.coefficient * to_rational(factor), self.pi_power)

    def numeric(self, dps: int = 50) -> mpmath.mpf:
        """Evaluate to an ``mpmath.mpf`` at *dps* decimal digits."""
        with mpmath.workdps(dps + 10):
            value = mpmath.mpf(int(self.coefficient.numerator))
            value /= mpmath.mpf(int(self.coefficient.denominator))
            value *= mpmath.pi ** self.pi_power
            return +value

    def to_json(self) -> dict:
        return {
            "coefficient": rational_to_json(self.coefficient),
            "pi_power": self.pi_power,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "PiValue":
        return cls(rational_from_json(obj["coefficient"]), int(obj["pi_power"]))

    def __str__(self) -> str:
        coeff = format_rational(self.coefficient)
        if self.pi_power == 0:
            return coeff
        return f"({coeff})*pi^{self.pi_power}"


def zeta_even(w: int) -> PiValue:
    """Exact ``zeta(w)`` for even ``w >= 2``.

    ``zeta(w) = (-1)**(w/2 + 1) * B_w * 2**(w-1) / w! * pi**w``; the
    rational coefficient is strictly positive for every even ``w >= 2``.
    """
    if w < 2 or w % 2 != 0:
        raise ValueError(f"zeta_even requires even w >= 2, got {w}")
    sign = -1 if (w // 2 + 1) % 2 else 1
    coeff = sign * bernoulli(w) * mpz(2) ** (w - 1) / gmpy2.fac(w)
    return PiValue(coeff, w)


# --------------------------------------------------------------------------
# periodized Bernoulli polynomials
# --------------------------------------------------------------------------

_BPOLY_COEFFS: dict[int, tuple[Rational, ...]] = {}


def _bernoulli_poly_coeffs(j: int) -> tuple[Rational, ...]:
    """Coefficients of ``B_j(x)`` ordered from ``x**j`` down to ``x**0``."""
    cached = _BPOLY_COEFFS.get(j)
    if cached is None:
        cached = tuple(
            gmpy2.bincoef(j, k) * bernoulli(k) for k in range(j + 1)
        )
        _BPOLY_COEFFS[j] = cached
    return cached


def periodized_bernoulli(j: int, x: RationalLike) -> Rational:
    """``B_j({x})`` where ``{x}`` is the fractional part of the rational *x*.

    Conventions: ``B_0({x}) = 1`` identically, and the ``j = 1`` value at
    integers is 0 (the mean of the left and right limits of the sawtooth),
    which is what lattice-sum boundary terms require.
    """
    if j < 0:
        raise ValueError(f"periodized Bernoulli index must be >= 0, got {j}")
    q = to_rational(x)
    frac = q - (q.numerator // q.denominator)
    if j == 0:
        return mpq(1)
    if j == 1 and frac == 0:
        return mpq(0)
    acc = mpq(0)
    for coeff in _bernoulli_poly_coeffs(j):
        acc = acc * frac + coeff
    return acc
