"""Exact special values of Witten zeta functions.

The package computes ``zeta_W(2m; g)`` for the rank-2 and rank-3 simple Lie
algebras sl3, so5, g2, so7, sp6 and for sl5, as exact rationals times even
powers of pi.  Two fully independent routes are implemented -- lattice-sum
reduction by computation tree, and flattened Bernoulli closed forms -- plus
a high-precision truncated-series oracle for numeric triangulation.

The main entry points are re-exported here; see the module docstrings for
the underlying operations.
"""

from __future__ import annotations

from .api import METHODS, ComputationMismatch, closed_value, compute, table_value_via_tree
from .catalog import ALGEBRA_NAMES, AlgebraSpec, get_algebra
from .exact import PiValue, bernoulli, binomial, zeta_even
from .factoring import FactoredValue, factor_coefficient
from .oracle import VerificationReport, sum_series, verify

__version__ = "0.1.0"

__all__ = [
    "ALGEBRA_NAMES",
    "AlgebraSpec",
    "ComputationMismatch",
    "FactoredValue",
    "METHODS",
    "PiValue",
    "VerificationReport",
    "bernoulli",
    "binomial",
    "closed_value",
    "compute",
    "factor_coefficient",
    "get_algebra",
    "sum_series",
    "table_value_via_tree",
    "verify",
    "zeta_even",
    "__version__",
]
