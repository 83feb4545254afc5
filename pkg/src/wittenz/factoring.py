"""Factored presentation of exact coefficients, in the reference-table style.

Values print as a prime-power numerator over a prime-power denominator
with one factorial pulled out, e.g. ``2^3·19 / (3^3·7·17!)``.  The
factorial part rarely divides the reduced denominator literally: the
displayed fraction is the exact rational rebalancing ``p/q ==
N / (D * k!)`` with integers ``N, D``.  Factorization here is purely
cosmetic -- the correctness gate is that the factored form multiplies
back to the exact coefficient, which is asserted on every construction,
never a primality claim.

Factoring work is bounded by an *effort* parameter: trial division up to
``effort``, then Pollard's rho with at most ``effort`` iterations per
composite cofactor (fixed polynomial and seed, so output is
deterministic).  Cofactors that survive are reported as composite and
left unfactored.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Optional

import gmpy2
from gmpy2 import mpq, mpz
from sympy import factorint, isprime
from sympy.ntheory import pollard_rho

from .exact import PiValue

__all__ = [
    "DEFAULT_EFFORT",
    "FactoredValue",
    "factor_coefficient",
    "factor_integer",
]

DEFAULT_EFFORT = 200_000
_FACTORIAL_SEARCH_CAP = 500


def factor_integer(
    n: int, effort: int = DEFAULT_EFFORT
) -> tuple[dict[int, int], dict[int, int]]:
    """Split ``n >= 1`` into prime powers plus unfactored composite parts.

    Returns ``(primes, composites)``, each mapping a factor to its
    exponent; the product of all powers is exactly ``n``.
    """
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")
    if effort < 2:
        raise ValueError(f"effort must be at least 2, got {effort}")
    primes: dict[int, int] = {}
    composites: dict[int, int] = {}
    pending = [(factor, exponent) for factor, exponent in factorint(int(n), limit=effort).items()]
    while pending:
        factor, exponent = pending.pop()
        if factor == 1:
            continue
        if isprime(factor):
            primes[factor] = primes.get(factor, 0) + exponent
            continue
        split = pollard_rho(factor, retries=1, max_steps=effort)
        if split is None or split in (1, factor):
            composites[factor] = composites.get(factor, 0) + exponent
            continue
        pending.append((split, exponent))
        pending.append((factor // split, exponent))
    assert _product(primes) * _product(composites) == n
    return dict(sorted(primes.items())), dict(sorted(composites.items()))


def _product(powers: Mapping[int, int]) -> int:
    result = 1
    for base, exponent in powers.items():
        result *= base**exponent
    return result


@dataclass(frozen=True)
class FactoredValue:
    """A coefficient in the form ``sign * N / (D * factorial!) * pi^w``."""

    sign: int
    numerator: Mapping[int, int]
    numerator_unfactored: Mapping[int, int]
    denominator: Mapping[int, int]
    denominator_unfactored: Mapping[int, int]
    factorial: Optional[int]
    pi_power: int
    coefficient: mpq = field(repr=False)

    def __post_init__(self) -> None:
        if self.to_rational() != self.coefficient:
            raise AssertionError(
                "factored form does not multiply back to the coefficient"
            )

    def to_rational(self) -> mpq:
        numerator = _product(self.numerator) * _product(self.numerator_unfactored)
        denominator = _product(self.denominator) * _product(
            self.denominator_unfactored
        )
        if self.factorial is not None:
            denominator *= int(gmpy2.fac(self.factorial))
        return mpq(self.sign * mpz(numerator), mpz(denominator))

    @property
    def fully_factored(self) -> bool:
        return not self.numerator_unfactored and not self.denominator_unfactored

    def _side_tex(self, powers: Mapping[int, int], unfactored: Mapping[int, int],
                  factorial: Optional[int]) -> str:
        parts = [_power_tex(base, exp) for base, exp in powers.items()]
        parts += [_power_tex(base, exp) for base, exp in unfactored.items()]
        if factorial is not None:
            parts.append(f"{factorial}!")
        if not parts:
            return "1"
        return "\\cdot ".join(parts)

    def to_latex(self) -> str:
        if self.sign == 0:
            return "0"
        numerator = self._side_tex(self.numerator, self.numerator_unfactored, None)
        denominator = self._side_tex(
            self.denominator, self.denominator_unfactored, self.factorial
        )
        if denominator == "1":
            body = numerator
        else:
            body = f"\\frac{{{numerator}}}{{{denominator}}}"
        sign = "-" if self.sign < 0 else ""
        pi = "" if self.pi_power == 0 else _power_tex("\\pi", self.pi_power)
        return f"{sign}{body}{pi}"

    def to_text(self) -> str:
        if self.sign == 0:
            return "0"

        def side(powers: Mapping[int, int], unfactored: Mapping[int, int],
                 factorial: Optional[int]) -> str:
            parts = [
                str(base) if exp == 1 else f"{base}^{exp}"
                for base, exp in powers.items()
            ]
            parts += [
                (f"{base}" if exp == 1 else f"{base}^{exp}") + " (composite, unfactored)"
                for base, exp in unfactored.items()
            ]
            if factorial is not None:
                parts.append(f"{factorial}!")
            return " * ".join(parts) if parts else "1"

        numerator = side(self.numerator, self.numerator_unfactored, None)
        denominator = side(
            self.denominator, self.denominator_unfactored, self.factorial
        )
        sign = "-" if self.sign < 0 else ""
        value = f"{sign}({numerator}) / ({denominator})"
        if self.pi_power:
            value += f" * pi^{self.pi_power}"
        return value

    def to_json(self) -> dict:
        return {
            "sign": self.sign,
            "numerator": {str(k): v for k, v in self.numerator.items()},
            "numerator_unfactored": {
                str(k): v for k, v in self.numerator_unfactored.items()
            },
            "denominator": {str(k): v for k, v in self.denominator.items()},
            "denominator_unfactored": {
                str(k): v for k, v in self.denominator_unfactored.items()
            },
            "factorial": self.factorial,
            "pi_power": self.pi_power,
        }


def _power_tex(base, exponent: int) -> str:
    base = str(base)
    if exponent == 1:
        return base
    if 0 <= exponent <= 9:
        return f"{base}^{exponent}"
    return f"{base}^{{{exponent}}}"


def _largest_dividing_factorial(denominator: int) -> Optional[int]:
    """Greatest ``k`` with ``k!`` dividing *denominator* (``None`` if < 2)."""
    best = None
    factorial = 1
    for k in range(2, _FACTORIAL_SEARCH_CAP + 1):
        factorial *= k
        if factorial > denominator:
            break
        if denominator % factorial == 0:
            best = k
    return best


def factor_coefficient(
    value: PiValue,
    effort: int = DEFAULT_EFFORT,
    factorial_hint: Optional[int] = None,
) -> FactoredValue:
    """Factored form of *value*, pulling a factorial out of the denominator.

    With a *factorial_hint* ``k`` the exact rebalancing ``p/q = N/(D*k!)``
    is used, reproducing the reference tables even when ``k!`` does not
    divide ``q``.  Without a hint, the largest factorial literally
    dividing the denominator is extracted (none for factorial-free
    denominators).
    """
    coefficient = value.coefficient
    if coefficient == 0:
        return FactoredValue(
            sign=0,
            numerator={},
            numerator_unfactored={},
            denominator={},
            denominator_unfactored={},
            factorial=None,
            pi_power=value.pi_power,
            coefficient=mpq(0),
        )
    sign = 1 if coefficient > 0 else -1
    magnitude = abs(coefficient)
    factorial = factorial_hint
    if factorial is None:
        factorial = _largest_dividing_factorial(int(magnitude.denominator))
    if factorial is not None:
        if factorial < 2 or factorial > _FACTORIAL_SEARCH_CAP:
            raise ValueError(f"factorial hint out of range: {factorial}")
        rebalanced = magnitude * int(gmpy2.fac(factorial))
    else:
        rebalanced = magnitude
    num_primes, num_composite = factor_integer(int(rebalanced.numerator), effort)
    den_primes, den_composite = factor_integer(int(rebalanced.denominator), effort)
    return FactoredValue(
        sign=sign,
        numerator=num_primes,
        numerator_unfactored=num_composite,
        denominator=den_primes,
        denominator_unfactored=den_composite,
        factorial=factorial,
        pi_power=value.pi_power,
        coefficient=coefficient,
    )
