"""Top-level computation entry point: two routes, one normalization.

Each special value can be computed two structurally independent ways:

* the *tree* route reduces the positive-root lattice sum by the
  algebra's computation tree (:func:`wittenz.engine.reduce_by_tree`) and
  normalizes by the Weyl group order and, where the reference convention
  carries it, the factor ``M**(2m)``;
* the *closed* route evaluates the flattened Bernoulli hierarchy for the
  algebra (:mod:`wittenz.closed`) with no lattice reduction at all.

The two share nothing beyond the Bernoulli numbers, so exact agreement
is a strong end-to-end check.  :func:`compute` runs both by default and
refuses to return a value on disagreement.
"""

from __future__ import annotations

from gmpy2 import mpq, mpz

from . import closed
from .catalog import AlgebraSpec, get_algebra, witten_via_tree
from .engine import TreeNode
from .exact import PiValue

__all__ = [
    "METHODS",
    "ComputationMismatch",
    "closed_value",
    "compute",
    "table_value_via_tree",
]

METHODS = ("tree", "closed", "both")

# Dispatch on the half-weight m; sl3's closed form is stated in terms of
# m itself, the others in terms of the common exponent n = 2m.
_CLOSED_FORMS = {
    "sl3": lambda m: closed.sl3_witten(m),
    "so5": lambda m: closed.so5_witten(2 * m),
    "g2": lambda m: closed.g2_witten(2 * m),
    "so7": lambda m: closed.so7_witten(2 * m),
    "sp6": lambda m: closed.sp6_witten(2 * m),
    "sl5": lambda m: closed.sl5_witten(2 * m),
}


class ComputationMismatch(RuntimeError):
    """Raised when the tree and closed routes disagree.

    This should never happen; if it does, one of the routes (or the
    catalog data feeding them) is wrong, and no value is returned.
    """

    def __init__(
        self, algebra: str, m: int, tree_value: PiValue, closed_val: PiValue
    ) -> None:
        self.algebra = algebra
        self.m = m
        self.tree_value = tree_value
        self.closed_value = closed_val
        super().__init__(
            f"independent routes disagree for {algebra}, m={m}: "
            f"tree gave {tree_value}, closed form gave {closed_val}"
        )


def _resolve(algebra: AlgebraSpec | str) -> AlgebraSpec:
    return get_algebra(algebra) if isinstance(algebra, str) else algebra


def table_value_via_tree(
    algebra: AlgebraSpec | str, m: int, tree: TreeNode | None = None
) -> PiValue:
    """Reference-normalized ``zeta_W(2m)`` by computation-tree reduction.

    :func:`wittenz.catalog.witten_via_tree` always produces the fully
    normalized Witten value ``M**(2m) / |W| * Z``; for algebras whose
    reference constants are stated for the bare orthant sum, the
    ``M**(2m)`` factor is divided back out so both routes and the pinned
    constants live on the same scale.
    """
    spec = _resolve(algebra)
    value = witten_via_tree(spec, m, tree)
    if not spec.table_includes_m_power:
        value = value.scaled(mpq(1, mpz(spec.M) ** (2 * m)))
    return value


def closed_value(algebra: AlgebraSpec | str, m: int) -> PiValue:
    """Reference-normalized ``zeta_W(2m)`` by the closed-form hierarchy."""
    spec = _resolve(algebra)
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    return _CLOSED_FORMS[spec.name](m)


def compute(
    algebra: AlgebraSpec | str,
    m: int,
    method: str = "both",
    tree: TreeNode | None = None,
) -> PiValue:
    """Exact ``zeta_W(2m)`` for the algebra, as ``rational * pi**(2m r)``.

    ``method`` selects the tree route, the closed route, or (default)
    both with an exact cross-check; a mismatch raises
    :class:`ComputationMismatch` instead of returning anything.  A custom
    ``tree`` (for instance an alternative valid merge order) only makes
    sense for the routes that reduce the lattice sum.
    """
    spec = _resolve(algebra)
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if method not in METHODS:
        raise ValueError(f"method must be one of {METHODS}, got {method!r}")
    if tree is not None and method == "closed":
        raise ValueError("a custom tree has no effect on method='closed'")
    if method == "tree":
        return table_value_via_tree(spec, m, tree)
    if method == "closed":
        return closed_value(spec, m)
    tree_val = table_value_via_tree(spec, m, tree)
    closed_val = closed_value(spec, m)
    if tree_val != closed_val:
        raise ComputationMismatch(spec.name, m, tree_val, closed_val)
    return tree_val
