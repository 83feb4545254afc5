"""Closed-form nested Bernoulli sums for Witten zeta special values.

Every special value computed by the reduction engine can also be written
as an explicit *finite* nested sum of Bernoulli-number products: walking
the computation tree symbolically and collecting the binomial
coefficients of every branch flattens the recursion into four-to-six
nested loops whose innermost terms are products like
``B_l B_{w-l} / (l! (w-l)!)``.  This module implements those flattened
expressions directly, loop bounds exactly as derived, which yields a
second exact evaluation path that shares no code with the tree walk in
:mod:`wittenz.engine`.  Agreement of the two paths is therefore a strong
correctness check, and the test suite compares them rational-to-rational.

Normalization conventions
-------------------------

Two different normalizations of the special value are in circulation and
both appear among the pinned reference constants, so the package keeps
them explicit (see :mod:`wittenz.catalog`,
``AlgebraSpec.includes_m_power``):

* the *Witten value* ``zeta_W(n) = M**n * zeta(n, ..., n)`` where
  ``zeta(n, ..., n)`` is the positive-orthant series over the root-system
  linear forms and ``M`` is the product of the form coefficient sums;
* the bare *orthant value* ``zeta(n, ..., n)`` itself, without the
  ``M**n`` factor.

``sl3_witten``, ``so5_witten`` and ``g2_witten`` return the Witten
value; ``so7_witten``, ``sp6_witten`` and ``sl5_witten`` return the
orthant value (their reference tables are normalized that way, and the
pinned constants fix the convention).  The conversion is always the
exact scalar ``M**n``.

Bernoulli-product tables
------------------------

The innermost coefficients come in several variants, all collected in
:class:`BetaTable`:

* ``double(l)`` -- ``B_l B_{w-l} / (l! (w-l)!)``,
* ``triple(s, t)`` -- ``-B_s B_t B_{w-s-t} / (s! t! (w-s-t)!)`` (the
  leading minus sign is part of the definition; entries with any index
  equal to 1 vanish, for the same periodized-``B_1`` reason as below),
* ``triple_corrected2`` / ``triple_corrected3`` -- the same with the
  two-coset parity correction ``(1 + prod(2^{1-index} - 1)) / 2`` over
  two or three indices,
* ``quadruple(s, t, k)`` -- ``B_s B_t B_k B_{w-s-t-k} / (s! t! k!
  (w-s-t-k)!)`` with the explicit convention that the entry vanishes
  whenever ``s``, ``t`` or ``k`` equals 1 (those terms originate from
  the periodized first Bernoulli polynomial evaluated at integers, which
  is 0, not from ``B_1 = -1/2``).

All tables are pure rationals: powers of ``2*pi`` are folded in exactly
once, at the :class:`~wittenz.exact.PiValue` boundary of each public
function, never inside the sums.
"""

from __future__ import annotations

from functools import lru_cache

import gmpy2
from gmpy2 import mpq, mpz

from .exact import PiValue, Rational, bernoulli, binomial, zeta_even

__all__ = [
    "BetaTable",
    "beta_table",
    "delta2",
    "sl3_witten",
    "so5_general",
    "so5_witten",
    "g2_witten",
    "so7_witten",
    "sp6_witten",
    "sl5_witten",
]


# --------------------------------------------------------------------------
# Bernoulli-product tables
# --------------------------------------------------------------------------

def _sign(exponent: int) -> int:
    """``(-1)**exponent`` for integers of either sign."""
    return -1 if exponent % 2 else 1


def _half_pow(exponent: int) -> Rational:
    """``2**exponent`` as an exact rational, for integers of either sign."""
    if exponent >= 0:
        return mpq(mpz(2) ** exponent)
    return mpq(1, mpz(2) ** (-exponent))


def delta2(l: int, w: int) -> Rational:
    """Two-coset correction factor ``1 + 2^{1-w} - 2^{-l} - 2^{l-w}``.

    This is the factor by which a determinant-(+-2) base case differs
    from the determinant-(+-1) one; ``zmatrix.special_delta2(l, w)``
    equals ``delta2(l, w) * BetaTable(w).double(l)``.
    """
    return 1 + _half_pow(1 - w) - _half_pow(-l) - _half_pow(l - w)


class BetaTable:
    """Cached Bernoulli-product coefficients for a fixed even weight ``w``.

    All entries are exact rationals; see the module docstring for the
    exact formulas.  Entries are zero outside the index simplex (any
    index negative, or indices summing beyond ``w``).  The ``double``
    table satisfies the symmetry ``double(l) == double(w - l)``.
    """

    def __init__(self, w: int) -> None:
        if w < 4 or w % 2 != 0:
            raise ValueError(f"weight must be even and >= 4, got {w}")
        self.w = w
        self._double: dict[int, Rational] = {}
        self._triple: dict[tuple[int, int], Rational] = {}
        self._quadruple: dict[tuple[int, int, int], Rational] = {}

    def double(self, l: int) -> Rational:
        """``B_l B_{w-l} / (l! (w-l)!)``."""
        if l < 0 or l > self.w:
            return mpq(0)
        try:
            return self._double[l]
        except KeyError:
            value = bernoulli(l) * bernoulli(self.w - l) / (
                gmpy2.fac(l) * gmpy2.fac(self.w - l)
            )
            self._double[l] = value
            return value

    def triple(self, s: int, t: int) -> Rational:
        """``-B_s B_t B_{w-s-t} / (s! t! (w-s-t)!)``.

        Zero whenever ``s``, ``t`` or ``w - s - t`` equals 1: these
        entries stem from the periodized ``B_1`` at integer arguments,
        which vanishes.
        """
        k = self.w - s - t
        if s < 0 or t < 0 or k < 0 or 1 in (s, t, k):
            return mpq(0)
        try:
            return self._triple[(s, t)]
        except KeyError:
            value = -bernoulli(s) * bernoulli(t) * bernoulli(k) / (
                gmpy2.fac(s) * gmpy2.fac(t) * gmpy2.fac(k)
            )
            self._triple[(s, t)] = value
            return value

    def triple_corrected2(self, a: int, b: int) -> Rational:
        """``triple(a, b) * (1 + (2^{1-a}-1)(2^{1-b}-1)) / 2``."""
        base = self.triple(a, b)
        if base == 0:
            return base
        factor = 1 + (_half_pow(1 - a) - 1) * (_half_pow(1 - b) - 1)
        return base * factor / 2

    def triple_corrected3(self, a: int, b: int, c: int) -> Rational:
        """``triple(a, b) * (1 + (2^{1-a}-1)(2^{1-b}-1)(2^{1-c}-1)) / 2``."""
        base = self.triple(a, b)
        if base == 0:
            return base
        factor = 1 + (
            (_half_pow(1 - a) - 1)
            * (_half_pow(1 - b) - 1)
            * (_half_pow(1 - c) - 1)
        )
        return base * factor / 2

    def quadruple(self, s: int, t: int, k: int) -> Rational:
        """``B_s B_t B_k B_{w-s-t-k} / (s! t! k! (w-s-t-k)!)``.

        Zero whenever ``s``, ``t`` or ``k`` equals 1: these entries stem
        from the periodized ``B_1`` at integer arguments, which vanishes.
        """
        r = self.w - s - t - k
        if s < 0 or t < 0 or k < 0 or r < 0 or 1 in (s, t, k):
            return mpq(0)
        try:
            return self._quadruple[(s, t, k)]
        except KeyError:
            value = (
                bernoulli(s) * bernoulli(t) * bernoulli(k) * bernoulli(r)
                / (gmpy2.fac(s) * gmpy2.fac(t) * gmpy2.fac(k) * gmpy2.fac(r))
            )
            self._quadruple[(s, t, k)] = value
            return value


@lru_cache(maxsize=None)
def beta_table(w: int) -> BetaTable:
    """Shared :class:`BetaTable` for weight ``w`` (tables are immutable)."""
    return BetaTable(w)


def _require_even(n: int, who: str) -> None:
    if n < 2 or n % 2 != 0:
        raise ValueError(f"{who} requires an even exponent n >= 2, got {n}")


# --------------------------------------------------------------------------
# sl3: one-line zeta-product formula
# --------------------------------------------------------------------------

def sl3_witten(m: int) -> PiValue:
    """Witten value ``zeta_W(2m)`` for the rank-2 special linear algebra.

    ``(4^{m+1}/3) * sum_{0 <= i <= 2m, i even} C(4m-i-1, 2m-1)
    zeta(i) zeta(6m-i)`` with the convention ``zeta(0) = -1/2``.
    """
    if m < 1:
        raise ValueError(f"m must be a positive integer, got {m}")
    total = mpq(0)
    for i in range(0, 2 * m + 1, 2):
        coeff = binomial(4 * m - i - 1, 2 * m - 1)
        if not coeff:
            continue
        zi = mpq(-1, 2) if i == 0 else zeta_even(i).coefficient
        total += coeff * zi * zeta_even(6 * m - i).coefficient
    return PiValue(mpq(mpz(4) ** (m + 1), 3) * total, 6 * m)


# --------------------------------------------------------------------------
# so5: double sum, also in the four-exponent general form
# --------------------------------------------------------------------------

def _so5_bracket(a: int, b: int, d: int, w: int) -> Rational:
    """Flattened double sum for the rank-2 matrix ((1,0,1,1),(0,1,1,2)).

    Only ``a``, ``b``, ``d`` and the total weight ``w`` enter: the
    exponent of the third column appears through ``w`` alone.
    """
    beta = beta_table(w).double
    total = mpq(0)
    for i in range(b + 1):
        outer = binomial(a + b - i - 1, a - 1)
        if not outer:
            continue
        inner = mpq(0)
        for j in range(i + 1):
            inner += binomial(w - d - j - 1, w - d - i - 1) * beta(j)
        for j in range(w - d - i + 1):
            inner += binomial(w - d - j - 1, i - 1) * beta(j)
        total += outer * inner
    for i in range(a + 1):
        outer = binomial(a + b - i - 1, b - 1)
        if not outer:
            continue
        inner = mpq(0)
        for j in range(d + 1):
            inner += binomial(d + i - j - 1, i - 1) * beta(j) * _half_pow(j - d - i)
        for j in range(i + 1):
            inner += binomial(d + i - j - 1, d - 1) * beta(j) * _half_pow(j - d - i)
        total += outer * inner
    return total


def so5_general(a: int, b: int, c: int, d: int) -> PiValue:
    """Full-lattice sum for columns ``(1,0), (0,1), (1,1), (1,2)``.

    Exponents ``(a, b, c, d)`` must be positive with at most one equal
    to 1 and even total weight.  Returns the same value as
    ``reduce_by_tree`` on that matrix: all powers of ``2*pi`` folded in.
    """
    exps = (a, b, c, d)
    if any(e < 1 for e in exps):
        raise ValueError(f"exponents must be positive, got {exps}")
    if sum(1 for e in exps if e == 1) > 1:
        raise ValueError(f"at most one exponent may equal 1, got {exps}")
    w = a + b + c + d
    if w % 2 != 0:
        raise ValueError(f"total weight must be even, got {w}")
    return PiValue(_sign(w // 2) * _so5_bracket(a, b, d, w) * mpz(2) ** w, w)


def so5_witten(n: int) -> PiValue:
    """Witten value ``zeta_W(n)`` for the rank-2 odd orthogonal algebra.

    ``6^n (2 pi)^{4n} / 8`` times the flattened double sum at equal
    exponents ``(n, n, n, n)``, weight ``w = 4n``.
    """
    _require_even(n, "so5_witten")
    w = 4 * n
    beta = beta_table(w).double
    total = mpq(0)
    for i in range(n + 1):
        outer = binomial(2 * n - i - 1, n - 1)
        if not outer:
            continue
        inner = mpq(0)
        for j in range(3 * n - i + 1):
            inner += binomial(3 * n - j - 1, i - 1) * beta(j)
        for j in range(i + 1):
            inner += binomial(3 * n - j - 1, 3 * n - i - 1) * beta(j)
        for j in range(n + 1):
            inner += binomial(n + i - j - 1, i - 1) * beta(j) * _half_pow(j - n - i)
        for j in range(i + 1):
            inner += binomial(n + i - j - 1, n - 1) * beta(j) * _half_pow(j - n - i)
        total += outer * inner
    return PiValue(mpq(mpz(6) ** n * mpz(2) ** w, 8) * total, w)


# --------------------------------------------------------------------------
# g2: A -> B -> C cascade over the rank-2 six-column matrix
# --------------------------------------------------------------------------
#
# Helper names follow the edge labels of the six-column computation
# tree: the root splits into A1/A2, each A into two B's, each B into two
# C's.  Every C is a closed three-column evaluation; A's and B's are
# binomial-weighted sums one level up.  Helpers return pure rationals at
# weight w = 6n (the (2 pi)^w power is attached in g2_witten).

@lru_cache(maxsize=None)
def g2_C1(n: int, i: int, k: int) -> Rational:
    w = 6 * n
    beta = beta_table(w).double
    total = mpq(0)
    for l in range(i + 1):
        coeff = binomial(i + k - l - 1, k - 1)
        if coeff:
            total += (
                coeff * mpz(2) ** k * delta2(l, w) * beta(l)
                / mpz(3) ** (i + k - l)
            )
    for l in range(k + 1):
        coeff = binomial(i + k - l - 1, i - 1)
        if coeff:
            total += coeff * _half_pow(k - l) * beta(l) / mpz(3) ** (i + k - l)
    return total


@lru_cache(maxsize=None)
def g2_C2(n: int, i: int, k: int) -> Rational:
    w = 6 * n
    beta = beta_table(w).double
    total = mpq(0)
    for l in range(i + 1):
        coeff = binomial(i + k - l - 1, k - 1)
        if coeff:
            total += coeff * mpz(2) ** k * delta2(l, w) * beta(l)
    for l in range(k + 1):
        coeff = binomial(i + k - l - 1, i - 1)
        if coeff:
            total += coeff * _half_pow(k - l) * beta(l)
    return _sign(i) * total


@lru_cache(maxsize=None)
def g2_C3(n: int, i: int, k: int) -> Rational:
    # No (-1)^i factor here, unlike g2_C2: the reduction-engine value of
    # this state (confirmed by truncated lattice sums) is the bare sum.
    # tests/test_closed.py pins both this and the sign-carrying variant.
    w = 6 * n
    beta = beta_table(w).double
    total = mpq(0)
    for l in range(i + 1):
        coeff = binomial(i + k - l - 1, k - 1)
        if coeff:
            total += coeff * beta(l) * _half_pow(l - k - i)
    for l in range(k + 1):
        coeff = binomial(i + k - l - 1, i - 1)
        if coeff:
            total += coeff * beta(l) * _half_pow(l - k - i)
    return total


@lru_cache(maxsize=None)
def g2_C4(n: int, i: int, k: int) -> Rational:
    w = 6 * n
    beta = beta_table(w).double
    total = mpq(0)
    for l in range(k + 1):
        coeff = binomial(i + k - l - 1, i - 1)
        if coeff:
            total += coeff * beta(l)
    for l in range(i + 1):
        coeff = binomial(i + k - l - 1, k - 1)
        if coeff:
            total += coeff * beta(l)
    return _sign(k) * total


@lru_cache(maxsize=None)
def g2_C8(n: int, i: int, k: int) -> Rational:
    w = 6 * n
    beta = beta_table(w).double
    total = mpq(0)
    for l in range(k + 1):
        coeff = binomial(i + k - l - 1, i - 1)
        if coeff:
            total += coeff * beta(l) / mpz(3) ** (k + i - l)
    for l in range(i + 1):
        coeff = binomial(i + k - l - 1, k - 1)
        if coeff:
            total += coeff * beta(l) / mpz(3) ** (k + i - l)
    return total


@lru_cache(maxsize=None)
def g2_B1(n: int, i: int, j: int) -> Rational:
    total = mpq(0)
    for k in range(j + 1):
        coeff = binomial(3 * n - i + j - k - 1, 3 * n - i - 1)
        if coeff:
            total += coeff * g2_C1(n, i, k) * _half_pow(k - (3 * n - i + j))
    for k in range(3 * n - i + 1):
        coeff = binomial(3 * n - i + j - k - 1, j - 1)
        if coeff:
            total += coeff * g2_C2(n, i, k) * _half_pow(k - (3 * n - i + j))
    return total


@lru_cache(maxsize=None)
def g2_B2(n: int, i: int, j: int) -> Rational:
    total = mpq(0)
    for k in range(3 * n - j + 1):
        coeff = binomial(3 * n - k - 1, j - 1)
        if coeff:
            total += coeff * g2_C3(n, i, k)
    for k in range(j + 1):
        coeff = binomial(3 * n - k - 1, 3 * n - j - 1)
        if coeff:
            total += coeff * g2_C4(n, i, k)
    return total


@lru_cache(maxsize=None)
def g2_B3(n: int, i: int, j: int) -> Rational:
    total = mpq(0)
    for k in range(j + 1):
        coeff = binomial(3 * n - k - 1, 3 * n - j - 1)
        if coeff:
            total += coeff * g2_C3(n, i, k)
    for k in range(3 * n - j + 1):
        coeff = binomial(3 * n - k - 1, j - 1)
        if coeff:
            total += coeff * g2_C4(n, i, k)
    return total


@lru_cache(maxsize=None)
def g2_B4(n: int, i: int, j: int) -> Rational:
    total = mpq(0)
    for k in range(3 * n - i + 1):
        coeff = binomial(3 * n - i + j - k - 1, j - 1)
        if coeff:
            total += coeff * g2_C4(n, i, k) * _half_pow(k - (3 * n - i + j))
    for k in range(j + 1):
        coeff = binomial(3 * n - i + j - k - 1, 3 * n - i - 1)
        if coeff:
            total += coeff * g2_C8(n, i, k) * _half_pow(k - (3 * n - i + j))
    return total


def g2_A1(n: int, i: int) -> Rational:
    return sum(
        (
            binomial(2 * n - j - 1, n - 1) * (g2_B1(n, i, j) + g2_B2(n, i, j))
            for j in range(n + 1)
        ),
        mpq(0),
    )


def g2_A2(n: int, i: int) -> Rational:
    return sum(
        (
            binomial(2 * n - j - 1, n - 1) * (g2_B3(n, i, j) + g2_B4(n, i, j))
            for j in range(n + 1)
        ),
        mpq(0),
    )


def g2_witten(n: int) -> PiValue:
    """Witten value ``zeta_W(n)`` for the rank-2 exceptional algebra.

    ``120^n / 12`` times the flattened cascade (which carries
    ``(2 pi)^{6n}`` through its Bernoulli table), weight ``w = 6n``.
    """
    _require_even(n, "g2_witten")
    w = 6 * n
    total = mpq(0)
    for i in range(n + 1):
        coeff = binomial(2 * n - i - 1, n - 1)
        if coeff:
            total += (
                coeff * (g2_A1(n, i) + g2_A2(n, i)) / mpz(3) ** (2 * n - i)
            )
    return PiValue(mpq(mpz(120) ** n * mpz(2) ** w, 12) * total, w)


# --------------------------------------------------------------------------
# so7: B -> C -> D -> E hierarchy over the nine-column matrix
# --------------------------------------------------------------------------
#
# Each helper is the exact coefficient of (2 pi i)^{9n} for the lattice
# sum over one family of intermediate reduction states (a subset of the
# nine columns carrying redistributed exponents; the reduction steps
# conserve the total exponent 9n, so a single weight-9n Bernoulli table
# serves every level).  Column numbers refer to the catalog order; helper
# letters follow the depth in the tree: E's are four-column leaf states,
# D's are five-column states collecting E's, and so on upward.  States
# related by a unimodular change of variables share one helper.

@lru_cache(maxsize=None)
def _so7_E(n: int, c: int, l: int, s: int) -> Rational:
    # State {x, 3, 7, 9}, x in {2, 5}: exponents e3 = c, e_x = l, e7 = s.
    # The index-2 merge of columns 3 and 7 contributes the powers of 1/2.
    beta = beta_table(9 * n).triple
    total = mpq(0)
    for t in range(c + 1):
        coeff = binomial(c + s - t - 1, s - 1)
        if coeff:
            total += coeff * beta(l, t) * _half_pow(t - c - s)
    for t in range(s + 1):
        coeff = binomial(c + s - t - 1, c - 1)
        if coeff:
            total += coeff * beta(l, t) * _half_pow(t - c - s)
    return total


@lru_cache(maxsize=None)
def _so7_Ep(n: int, c: int, l: int, s: int) -> Rational:
    # State {x, 3, 4, 9}, x in {2, 5}: exponents e3 = c, e4 = s, e_x = l.
    beta = beta_table(9 * n).triple
    total = mpq(0)
    for t in range(c + 1):
        coeff = binomial(c + s - t - 1, s - 1)
        if coeff:
            total += coeff * beta(l, t)
    for t in range(s + 1):
        coeff = binomial(c + s - t - 1, c - 1)
        if coeff:
            total += coeff * beta(l, t)
    return total


@lru_cache(maxsize=None)
def _so7_Epp(n: int, l: int, s: int) -> Rational:
    # State {3, 4, 6, 9} with e4 = n: exponents e3 = s, e6 = l.  Column 6
    # spans an index-2 sublattice, so the plain triple table is replaced
    # by its two- and three-index coset corrections.
    table = beta_table(9 * n)
    total = mpq(0)
    for t in range(n + 1):
        coeff = binomial(n + s - t - 1, s - 1)
        if coeff:
            total += coeff * table.triple_corrected3(l, t, 9 * n - l - t)
    for t in range(s + 1):
        coeff = binomial(n + s - t - 1, n - 1)
        if coeff:
            total += coeff * table.triple_corrected2(l, t)
    return total


@lru_cache(maxsize=None)
def _so7_D(n: int, u: int, v: int, c: int, l: int) -> Rational:
    # State {x, 3, 4, 7, 9}, x in {2, 5, 8}: exponents e3 = c, e4 = v,
    # e7 = u, e_x = l, e9 = 9n - u - v - c - l (the formula needs e9 >= 1,
    # which every caller satisfies).  Merging columns 4 and 7 into 9
    # carries the multiplier (-1)^{e4}, whence the alternating signs.
    total = mpq(0)
    for s in range(u + 1):
        coeff = binomial(u + v - s - 1, v - 1)
        if coeff:
            total += coeff * _sign(v) * _so7_E(n, c, l, s)
    for s in range(v + 1):
        coeff = binomial(u + v - s - 1, u - 1)
        if coeff:
            total += coeff * _sign(v - s) * _so7_Ep(n, c, l, s)
    return total


@lru_cache(maxsize=None)
def _so7_Dp(n: int, i: int, k: int, l: int) -> Rational:
    # State {3, 4, 6, 7, 9} with e4 = e9 = n: exponents e3 = 3n + i - k,
    # e6 = l, e7 = 4n + k - i - l.  The merge of columns 3 and 7 has
    # half-integer multipliers, whence the powers of 1/2.
    total = mpq(0)
    for s in range(4 * n + k - i - l + 1):
        coeff = binomial(7 * n - l - s - 1, 3 * n + i - k - 1)
        if coeff:
            total += coeff * _so7_Epp(n, l, s) * _half_pow(l + s - 7 * n)
    for s in range(3 * n + i - k + 1):
        coeff = binomial(7 * n - l - s - 1, 4 * n + k - i - l - 1)
        if coeff:
            total += coeff * _so7_Epp(n, l, s) * _half_pow(l + s - 7 * n)
    return total


@lru_cache(maxsize=None)
def _so7_C1(n: int, j: int, k: int) -> Rational:
    # State {3, 4, 5, 7, 8, 9} with e3 = e4 = e5 = n: exponents e7 = 4n - j,
    # e8 = k, e9 = 2n + j - k.  Merging columns 5 and 8 into 4 leaves a
    # D-level spectator (column 8, then column 5) with e4 = 2n + k - l, so
    # the enlarged exponent lands in the v-slot.
    u = 4 * n - j
    total = mpq(0)
    for l in range(k + 1):
        coeff = binomial(n + k - l - 1, n - 1)
        if coeff:
            total += coeff * _so7_D(n, u, 2 * n + k - l, n, l)
    for l in range(n + 1):
        coeff = binomial(n + k - l - 1, k - 1)
        if coeff:
            total += coeff * _sign(l) * _so7_D(n, u, 2 * n + k - l, n, l)
    return total


@lru_cache(maxsize=None)
def _so7_C2(n: int, p: int, q: int, u: int) -> Rational:
    # State {2, 3, 4, 5, 7, 9} with e3 = e4 = n: exponents e2 = p, e5 = q,
    # e7 = u, e9 = 7n - p - q - u.  Merging columns 2 and 5 into 3 carries
    # the multiplier (-1)^{e2} and leaves column 4 as the D-level
    # spectator, so the enlarged exponent lands in the c-slot (unlike the
    # C1 family, where it lands in the v-slot -- the two families are not
    # related by a change of variables and need separate helpers).
    total = mpq(0)
    for l in range(q + 1):
        coeff = binomial(p + q - l - 1, p - 1)
        if coeff:
            total += coeff * _so7_D(n, u, n, p + q + n - l, l)
    for l in range(p + 1):
        coeff = binomial(p + q - l - 1, q - 1)
        if coeff:
            total += coeff * _sign(l) * _so7_D(n, u, n, p + q + n - l, l)
    return _sign(p) * total


@lru_cache(maxsize=None)
def _so7_Cp(n: int, r: int, s: int, c: int, u: int) -> Rational:
    # State {1, 2, 3, 4, 7, 9} with e4 = n: exponents e1 = r, e2 = s,
    # e3 = c, e7 = u, e9 = 8n - r - s - c - u.  Merging columns 1 and 2
    # into 4 (both multipliers +1) gives two sign-free branches with the
    # enlarged exponent e4 = r + s + n - l in the v-slot.
    total = mpq(0)
    for l in range(s + 1):
        coeff = binomial(r + s - l - 1, r - 1)
        if coeff:
            total += coeff * _so7_D(n, u, r + s + n - l, c, l)
    for l in range(r + 1):
        coeff = binomial(r + s - l - 1, s - 1)
        if coeff:
            total += coeff * _so7_D(n, u, r + s + n - l, c, l)
    return total


@lru_cache(maxsize=None)
def _so7_Cpp(n: int, i: int, k: int) -> Rational:
    # State {1, 3, 4, 6, 7, 9} with e1 = e4 = e9 = n: exponents
    # e3 = 3n + i - k, e6 = k, e7 = 3n - i.  Merging columns 1 and 6 into
    # 7 (multipliers 2 and 1) contributes the powers of 2; the second
    # branch drops column 6 and its index-2 sublattice, landing on plain
    # D-states with spectator column 1.
    total = mpq(0)
    for l in range(k + 1):
        coeff = binomial(n + k - l - 1, n - 1)
        if coeff:
            total += coeff * mpz(2) ** n * _so7_Dp(n, i, k, l)
    for l in range(n + 1):
        coeff = binomial(n + k - l - 1, k - 1)
        if coeff:
            total += (
                coeff
                * _half_pow(n - l)
                * _so7_D(n, 4 * n + k - i - l, n, 3 * n + i - k, l)
            )
    return total


@lru_cache(maxsize=None)
def _so7_B(n: int, j: int) -> Rational:
    # State {2, 3, 4, 5, 7, 8, 9} with all exponents n except e7 = 4n - j,
    # e8 = j.  Merging columns 2 and 8 into 9 (multipliers -1 and 1) drops
    # into the C1 family on one branch and, with the sign (-1)^{e2}
    # absorbed into the alternating sum, the C2 family on the other.
    total = mpq(0)
    for k in range(j + 1):
        coeff = binomial(n + j - k - 1, n - 1)
        if coeff:
            total += coeff * _so7_C1(n, j, k)
    for k in range(n + 1):
        coeff = binomial(n + j - k - 1, j - 1)
        if coeff:
            total += coeff * _sign(k) * _so7_C2(n, k, n, 4 * n - j)
    return total


@lru_cache(maxsize=None)
def _so7_Bp(n: int, e1: int, e2: int, e5: int, e7: int) -> Rational:
    # State {1, 2, 3, 4, 5, 7, 9} with e3 = e4 = e9 = n and the named
    # exponents free (e1 + e2 + e5 + e7 = 6n).  Merging columns 1 and 5
    # into 9 (both multipliers +1) drops into the C2 family when column 1
    # is removed and into the C' family when column 5 is removed.
    total = mpq(0)
    for k in range(e5 + 1):
        coeff = binomial(e1 + e5 - k - 1, e1 - 1)
        if coeff:
            total += coeff * _so7_C2(n, e2, k, e7)
    for k in range(e1 + 1):
        coeff = binomial(e1 + e5 - k - 1, e5 - 1)
        if coeff:
            total += coeff * _so7_Cp(n, k, e2, n, e7)
    return total


@lru_cache(maxsize=None)
def _so7_Bpp(n: int, i: int, j: int) -> Rational:
    # State {1, 2, 3, 4, 6, 7, 9} with e1 = e3 = e4 = e9 = n: exponents
    # e2 = 2n + i - j, e6 = j, e7 = 3n - i.  Merging columns 6 and 2 into
    # 3 (multipliers 1 and -2) contributes the powers of -2.
    total = mpq(0)
    for k in range(2 * n + i - j + 1):
        coeff = binomial(2 * n + i - k - 1, j - 1)
        if coeff:
            total += (
                coeff
                * mpz(2) ** (2 * n + i - j - k)
                * _sign(i - j - k)
                * _so7_Cp(n, n, k, 3 * n + i - k, 3 * n - i)
            )
    for k in range(j + 1):
        coeff = binomial(2 * n + i - k - 1, 2 * n + i - j - 1)
        if coeff:
            total += (
                coeff
                * mpz(2) ** (2 * n + i - j)
                * _sign(i - j)
                * _so7_Cpp(n, i, k)
            )
    return total


def _so7_top(n: int) -> Rational:
    # Full nine-column state at uniform exponent n.  The root merge of
    # columns 6 and 8 into 7 (multipliers -1 and 2) splits into the B and
    # B'' branch (columns {.., 7, 8, 9} with e8 = i) and the two B'
    # usages (columns {.., 6, 7, 9} with e6 = i); the second level then
    # merges within each branch as documented on the helpers.
    total = mpq(0)
    for i in range(n + 1):
        outer = binomial(2 * n - i - 1, n - 1)
        if not outer:
            continue
        inner = mpq(0)
        for j in range(i + 1):
            coeff = binomial(n + i - j - 1, n - 1)
            if coeff:
                inner += coeff * (
                    _so7_B(n, j) * _half_pow(-i)
                    + _sign(i) * _so7_Bpp(n, i, j)
                )
        for j in range(n + 1):
            coeff = binomial(n + i - j - 1, i - 1)
            if coeff:
                inner += coeff * (
                    _so7_Bp(n, j, n, n, 4 * n - j) * _half_pow(-i)
                    + _sign(i + j) * _so7_Bp(n, n, 2 * n + i - j, j, 3 * n - i)
                )
        total += outer * inner
    return mpz(2) ** n * total


def so7_witten(n: int) -> PiValue:
    """Orthant value ``zeta(n, ..., n)`` for the rank-3 odd orthogonal algebra.

    ``(2 pi i)^{9n} / 48`` times the flattened hierarchy, weight
    ``w = 9n``; ``n`` must be even, and ``i^{9n}`` contributes the
    overall sign ``(-1)^{n/2}``.
    """
    _require_even(n, "so7_witten")
    w = 9 * n
    prefactor = _sign(n // 2) * mpq(mpz(2) ** w, 48)
    return PiValue(prefactor * _so7_top(n), w)


# --------------------------------------------------------------------------
# sp6: parallel hierarchy over its own nine-column matrix
# --------------------------------------------------------------------------
#
# The symplectic nine-column matrix is a column relabeling of the odd
# orthogonal one.  The relabeling transports the *shape* of the reduction
# tree (which triples of columns are dependent), but not the merge
# multipliers or the index-2 sublattice pattern, so the collected sums
# are different and the algebra needs its own helper family.  The two
# orthant values coincide at n = 2 and split from n = 4 on; see the
# regression tests for the pinned values.  Column numbers below refer to
# the symplectic catalog order; naming conventions as in the so7 block.

@lru_cache(maxsize=None)
def _sp6_E(n: int, c: int, l: int, s: int) -> Rational:
    # State {x, 3, 8, 9}, x in {1, 2, 6, 7}: exponents e9 = c, e_x = l,
    # e3 = s.  Merging columns 9 and 3 into 8 has both multipliers +1, so
    # the two branches are sign-free plain triples.
    beta = beta_table(9 * n).triple
    total = mpq(0)
    for t in range(s + 1):
        coeff = binomial(c + s - t - 1, c - 1)
        if coeff:
            total += coeff * beta(l, t)
    for t in range(c + 1):
        coeff = binomial(c + s - t - 1, s - 1)
        if coeff:
            total += coeff * beta(l, t)
    return total


@lru_cache(maxsize=None)
def _sp6_Ep(n: int, c: int, l: int, s: int) -> Rational:
    # State {x, 4, 8, 9}, x in {1, 2, 6, 7}: exponents e9 = c, e_x = l,
    # e4 = s.  Merging columns 9 and 4 into 8 (multipliers 2 and -1)
    # contributes the powers of 2 and the alternating signs; removing
    # column 9 lands on the index-2 leaf {x, 4, 8}, whose nontrivial
    # coset sits on columns 4 and 8.
    table = beta_table(9 * n)
    total = mpq(0)
    for t in range(s + 1):
        coeff = binomial(c + s - t - 1, c - 1)
        if coeff:
            total += (
                coeff
                * _sign(s + t)
                * _half_pow(c)
                * table.triple_corrected2(t, 9 * n - l - t)
            )
    for t in range(c + 1):
        coeff = binomial(c + s - t - 1, s - 1)
        if coeff:
            total += coeff * _sign(s) * _half_pow(c - t) * table.triple(l, t)
    return total


@lru_cache(maxsize=None)
def _sp6_Epp(n: int, v: int, l: int, s: int) -> Rational:
    # State {x, 3, 4, 8}, x in {2, 5}: exponents e_x = l, e3 = s, e4 = v.
    # Merging columns 3 and 4 into 8 (multipliers 2 and 1) contributes
    # the powers of 2; the index-2 leaf {x, 4, 8} again carries its coset
    # correction on columns 4 and 8.
    table = beta_table(9 * n)
    total = mpq(0)
    for t in range(v + 1):
        coeff = binomial(s + v - t - 1, s - 1)
        if coeff:
            total += (
                coeff * _half_pow(s) * table.triple_corrected2(t, 9 * n - l - t)
            )
    for t in range(s + 1):
        coeff = binomial(s + v - t - 1, v - 1)
        if coeff:
            total += coeff * _half_pow(s - t) * table.triple(l, t)
    return total


@lru_cache(maxsize=None)
def _sp6_D(n: int, u: int, v: int, c: int, l: int) -> Rational:
    # State {x, 3, 4, 8, 9}, x in {1, 2, 6, 7}: exponents e3 = u, e4 = v,
    # e9 = c, e_x = l, e8 = 9n - u - v - c - l (the formula needs e8 >= 1,
    # which every caller satisfies).  Merging columns 4 and 3 into 8
    # (multipliers 1 and 2) contributes the powers of 2.  The recursion
    # is identical for all four spectator columns because their leaf
    # sublattices agree, so one helper serves the whole family.
    total = mpq(0)
    for s in range(u + 1):
        coeff = binomial(u + v - s - 1, v - 1)
        if coeff:
            total += coeff * _half_pow(u - s) * _sp6_E(n, c, l, s)
    for s in range(v + 1):
        coeff = binomial(u + v - s - 1, u - 1)
        if coeff:
            total += coeff * _half_pow(u) * _sp6_Ep(n, c, l, s)
    return total


@lru_cache(maxsize=None)
def _sp6_Dp(n: int, i: int, k: int, l: int) -> Rational:
    # State {3, 4, 5, 8, 9} with e4 = e8 = n: exponents e9 = 3n + i - k,
    # e5 = l, e3 = 4n + k - i - l.  Merging columns 9 and 3 into 8 (both
    # multipliers +1) is sign-free; removing column 9 keeps the E''
    # family at e4 = n, removing column 3 lands on the E' family with the
    # remaining column-9 exponent in the s-slot of that helper.
    total = mpq(0)
    for s in range(4 * n + k - i - l + 1):
        coeff = binomial(7 * n - l - s - 1, 3 * n + i - k - 1)
        if coeff:
            total += coeff * _sp6_Epp(n, n, l, s)
    for s in range(3 * n + i - k + 1):
        coeff = binomial(7 * n - l - s - 1, 4 * n + k - i - l - 1)
        if coeff:
            total += coeff * _sp6_Ep(n, s, l, n)
    return total


@lru_cache(maxsize=None)
def _sp6_C1(n: int, j: int, k: int) -> Rational:
    # State {3, 4, 6, 7, 8, 9} with e4 = e7 = e9 = n: exponents
    # e3 = 4n - j, e6 = k, e8 = 2n + j - k.  Merging columns 7 and 6 into
    # 4 (multipliers 1 and -1) carries (-1)^{e6} and leaves a D-level
    # spectator (column 6, then column 7) with e4 = 2n + k - l, so the
    # enlarged exponent lands in the v-slot.
    u = 4 * n - j
    total = mpq(0)
    for l in range(k + 1):
        coeff = binomial(n + k - l - 1, n - 1)
        if coeff:
            total += coeff * _sign(k + l) * _sp6_D(n, u, 2 * n + k - l, n, l)
    for l in range(n + 1):
        coeff = binomial(n + k - l - 1, k - 1)
        if coeff:
            total += coeff * _sign(k) * _sp6_D(n, u, 2 * n + k - l, n, l)
    return total


@lru_cache(maxsize=None)
def _sp6_C2(n: int, p: int, q: int, u: int) -> Rational:
    # State {1, 3, 4, 7, 8, 9} with e4 = e9 = n: exponents e1 = p,
    # e7 = q, e3 = u, e8 = 7n - p - q - u.  Merging columns 1 and 7 into
    # 9 (both multipliers 1/2) contributes the powers of 1/2; the
    # enlarged exponent lands in the c-slot and both spectator choices
    # (column 7, then column 1) share one D-call.
    total = mpq(0)
    for l in range(q + 1):
        coeff = binomial(p + q - l - 1, p - 1)
        if coeff:
            total += (
                coeff * _half_pow(l - p - q) * _sp6_D(n, u, n, p + q + n - l, l)
            )
    for l in range(p + 1):
        coeff = binomial(p + q - l - 1, q - 1)
        if coeff:
            total += (
                coeff * _half_pow(l - p - q) * _sp6_D(n, u, n, p + q + n - l, l)
            )
    return total


@lru_cache(maxsize=None)
def _sp6_Cp(n: int, r: int, s: int, c: int, u: int) -> Rational:
    # State {1, 2, 3, 4, 8, 9} with e4 = n: exponents e2 = r, e1 = s,
    # e9 = c, e3 = u, e8 = 8n - r - s - c - u.  Merging columns 2 and 1
    # into 4 (both multipliers +1) gives two sign-free branches with the
    # enlarged exponent e4 = r + s + n - l in the v-slot.
    total = mpq(0)
    for l in range(s + 1):
        coeff = binomial(r + s - l - 1, r - 1)
        if coeff:
            total += coeff * _sp6_D(n, u, r + s + n - l, c, l)
    for l in range(r + 1):
        coeff = binomial(r + s - l - 1, s - 1)
        if coeff:
            total += coeff * _sp6_D(n, u, r + s + n - l, c, l)
    return total


@lru_cache(maxsize=None)
def _sp6_Cpp(n: int, i: int, k: int) -> Rational:
    # State {2, 3, 4, 5, 8, 9} with e2 = e4 = e8 = n: exponents e5 = k,
    # e9 = 3n + i - k, e3 = 3n - i.  Merging columns 2 and 5 into 3
    # (multipliers -1 and 1, with (-1)^{e2} = 1 for even n): removing
    # column 2 lands on the D' family, removing column 5 on the D family
    # with spectator column 2 and the sign (-1)^l.
    total = mpq(0)
    for l in range(k + 1):
        coeff = binomial(n + k - l - 1, n - 1)
        if coeff:
            total += coeff * _sp6_Dp(n, i, k, l)
    for l in range(n + 1):
        coeff = binomial(n + k - l - 1, k - 1)
        if coeff:
            total += (
                coeff
                * _sign(l)
                * _sp6_D(n, 4 * n + k - i - l, n, 3 * n + i - k, l)
            )
    return total


@lru_cache(maxsize=None)
def _sp6_B(n: int, j: int) -> Rational:
    # State {1, 3, 4, 6, 7, 8, 9} with all exponents n except e6 = j,
    # e3 = 4n - j.  Merging columns 1 and 6 into 8 (both multipliers +1)
    # drops sign-free into the C1 family (column 1 removed) and the C2
    # family (column 6 removed).
    total = mpq(0)
    for k in range(j + 1):
        coeff = binomial(n + j - k - 1, n - 1)
        if coeff:
            total += coeff * _sp6_C1(n, j, k)
    for k in range(n + 1):
        coeff = binomial(n + j - k - 1, j - 1)
        if coeff:
            total += coeff * _sp6_C2(n, k, n, 4 * n - j)
    return total


@lru_cache(maxsize=None)
def _sp6_Bp(n: int, e1: int, e2: int, e7: int, e3: int) -> Rational:
    # State {1, 2, 3, 4, 7, 8, 9} with e4 = e8 = e9 = n and the named
    # exponents free (e1 + e2 + e7 + e3 = 6n).  Merging columns 2 and 7
    # into 8 (multipliers -1 and 1) carries (-1)^{e2}; removing column 2
    # lands on the C2 family, removing column 7 on the C' family.
    total = mpq(0)
    for k in range(e7 + 1):
        coeff = binomial(e2 + e7 - k - 1, e2 - 1)
        if coeff:
            total += coeff * _sign(e2) * _sp6_C2(n, e1, k, e3)
    for k in range(e2 + 1):
        coeff = binomial(e2 + e7 - k - 1, e7 - 1)
        if coeff:
            total += coeff * _sign(e2 + k) * _sp6_Cp(n, k, e1, n, e3)
    return total


@lru_cache(maxsize=None)
def _sp6_Bpp(n: int, i: int, j: int) -> Rational:
    # State {1, 2, 3, 4, 5, 8, 9} with e2 = e4 = e8 = e9 = n: exponents
    # e1 = 2n + i - j, e5 = j, e3 = 3n - i.  Merging columns 5 and 1 into
    # 9 (both multipliers +1) is sign-free; removing column 5 lands on
    # the C' family, removing column 1 on the C'' family.
    total = mpq(0)
    for k in range(2 * n + i - j + 1):
        coeff = binomial(2 * n + i - k - 1, j - 1)
        if coeff:
            total += coeff * _sp6_Cp(n, n, k, 3 * n + i - k, 3 * n - i)
    for k in range(j + 1):
        coeff = binomial(2 * n + i - k - 1, 2 * n + i - j - 1)
        if coeff:
            total += coeff * _sp6_Cpp(n, i, k)
    return total


@lru_cache(maxsize=None)
def _sp6_A1(n: int, i: int) -> Rational:
    # State {1, 2, 3, 4, 6, 7, 8, 9} with all exponents n except e6 = i,
    # e3 = 3n - i.  Merging columns 2 and 6 into 3 (multipliers -1/2 and
    # 1/2) contributes the overall 2^{-n-i} (for even n) and the signed
    # powers of 2 on the column-6-removed branch.
    total = mpq(0)
    for j in range(i + 1):
        coeff = binomial(n + i - j - 1, n - 1)
        if coeff:
            total += coeff * _half_pow(j) * _sp6_B(n, j)
    for j in range(n + 1):
        coeff = binomial(n + i - j - 1, i - 1)
        if coeff:
            total += (
                coeff
                * _sign(j)
                * _half_pow(j)
                * _sp6_Bp(n, n, j, n, 4 * n - j)
            )
    return _half_pow(-n - i) * total


@lru_cache(maxsize=None)
def _sp6_A2(n: int, i: int) -> Rational:
    # State {1, 2, 3, 4, 5, 7, 8, 9} with all exponents n except e5 = i,
    # e3 = 3n - i.  Merging columns 5 and 7 into 1 (multipliers -2 and 1)
    # contributes the powers of -2.
    total = mpq(0)
    for j in range(n + 1):
        coeff = binomial(i + n - j - 1, i - 1)
        if coeff:
            total += (
                coeff
                * _sign(i)
                * _half_pow(i)
                * _sp6_Bp(n, 2 * n + i - j, n, j, 3 * n - i)
            )
    for j in range(i + 1):
        coeff = binomial(i + n - j - 1, n - 1)
        if coeff:
            total += coeff * _sign(i - j) * _half_pow(i - j) * _sp6_Bpp(n, i, j)
    return total


def _sp6_top(n: int) -> Rational:
    # Full nine-column state at uniform exponent n.  The root merge of
    # columns 5 and 6 into 3 (multipliers -1 and 1, with (-1)^n = 1)
    # splits into the A1 branch (column 5 removed, e6 = i) and the A2
    # branch (column 6 removed, e5 = i) with the sign (-1)^i.
    total = mpq(0)
    for i in range(n + 1):
        coeff = binomial(2 * n - i - 1, n - 1)
        if coeff:
            total += coeff * (_sp6_A1(n, i) + _sign(i) * _sp6_A2(n, i))
    return total


def sp6_witten(n: int) -> PiValue:
    """Orthant value ``zeta(n, ..., n)`` for the rank-3 symplectic algebra.

    ``(2 pi i)^{9n} / 48`` times the flattened hierarchy, weight
    ``w = 9n``; ``n`` must be even, and ``i^{9n}`` contributes the
    overall sign ``(-1)^{n/2}``.
    """
    _require_even(n, "sp6_witten")
    w = 9 * n
    prefactor = _sign(n // 2) * mpq(mpz(2) ** w, 48)
    return PiValue(prefactor * _sp6_top(n), w)


# --------------------------------------------------------------------------
# sl5: two-branch hierarchy over the ten-column rank-4 matrix
# --------------------------------------------------------------------------
#
# The ten-column tree is mirror-symmetric, so the two root branches give
# equal values and the hierarchy needs only two branch flavors (alpha =
# 1, 2), cross-referencing each other one level down.  Weight w = 10n;
# the quadruple Bernoulli table (with its index-1 vanishing convention)
# carries (2 pi)^{10n}, attached at the end.

@lru_cache(maxsize=None)
def _sl5_E(n: int, alpha: int, i: int, k: int, l: int, s: int) -> Rational:
    beta = beta_table(10 * n).quadruple
    total = mpq(0)
    if alpha == 1:
        for t in range(2 * n + l - s + 1):
            coeff = binomial(5 * n + l - i - s - t - 1, 3 * n - i - 1)
            if coeff:
                total += coeff * beta(s, t, k)
        for t in range(3 * n - i + 1):
            coeff = binomial(5 * n + l - i - s - t - 1, 2 * n + l - s - 1)
            if coeff:
                total += coeff * beta(s, t, k)
    else:
        for t in range(n + 1):
            coeff = binomial(5 * n + l - i - s - t - 1, 4 * n + l - i - s - 1)
            if coeff:
                total += coeff * beta(s, t, k)
        for t in range(4 * n + l - i - s + 1):
            coeff = binomial(5 * n + l - i - s - t - 1, n - 1)
            if coeff:
                total += coeff * beta(s, t, k)
    return total


@lru_cache(maxsize=None)
def _sl5_D(n: int, alpha: int, i: int, k: int, l: int) -> Rational:
    total = mpq(0)
    for s in range(l + 1):
        coeff = binomial(n + l - s - 1, n - 1)
        if coeff:
            total += coeff * _sl5_E(n, alpha, i, k, l, s)
    for s in range(n + 1):
        coeff = binomial(n + l - s - 1, l - 1)
        if coeff:
            total += coeff * _sl5_E(n, alpha, i, k, l, s)
    return total


@lru_cache(maxsize=None)
def _sl5_C(n: int, alpha: int, i: int, j: int, k: int) -> Rational:
    total = mpq(0)
    for l in range(n + 1):
        coeff = binomial(3 * n + j - k - l - 1, 2 * n + j - k - 1)
        if coeff:
            total += coeff * _sl5_D(n, alpha, i, k, l)
    for l in range(2 * n + j - k + 1):
        coeff = binomial(3 * n + j - k - l - 1, n - 1)
        if coeff:
            total += coeff * _sl5_D(n, 3 - alpha, i, k, l)
    return total


@lru_cache(maxsize=None)
def _sl5_B(n: int, alpha: int, i: int, j: int) -> Rational:
    total = mpq(0)
    for k in range(j + 1):
        coeff = binomial(n + j - k - 1, n - 1)
        if coeff:
            total += coeff * _sl5_C(n, alpha, i, j, k)
    for k in range(n + 1):
        coeff = binomial(n + j - k - 1, j - 1)
        if coeff:
            total += coeff * _sl5_C(n, alpha, i, j, k)
    return total


def _sl5_top(n: int) -> Rational:
    total = mpq(0)
    for i in range(n + 1):
        outer = binomial(2 * n - i - 1, n - 1)
        if not outer:
            continue
        inner = mpq(0)
        for j in range(i + 1):
            coeff = binomial(n + i - j - 1, n - 1)
            if coeff:
                inner += coeff * _sl5_B(n, 1, i, j)
        for j in range(n + 1):
            coeff = binomial(n + i - j - 1, i - 1)
            if coeff:
                inner += coeff * _sl5_B(n, 2, i, j)
        total += outer * inner
    return total


def sl5_witten(n: int) -> PiValue:
    """Orthant value ``zeta(n, ..., n)`` for the rank-4 special linear algebra.

    ``2^{10n} / 60`` times the flattened hierarchy (which carries
    ``(2 pi)^{10n}`` through its Bernoulli table), weight ``w = 10n``.
    The hierarchy itself produces the Weyl-normalized special value; the
    reference tables for this algebra list the orthant sum, which differs
    by the factor ``288^n`` (the squared-root-length product), so that
    factor is deliberately omitted here.  ``compute`` with ``method="tree"``
    applies the same convention, keeping the two routes comparable.
    """
    _require_even(n, "sl5_witten")
    w = 10 * n
    prefactor = mpq(mpz(2) ** w, 60)
    return PiValue(prefactor * _sl5_top(n), w)
