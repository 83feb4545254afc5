"""Static data for the six supported Lie algebras.

For each algebra the catalog stores the positive-root coefficient matrix
``sigma`` (one column per positive root, entries = coefficients on the
fundamental-weight product form of the Weyl dimension formula), the constant
``M`` (product of column sums), the Weyl group order, the *divisor* printed
in the closed-form theorems (equal to the Weyl order except for sl5, whose
closed form folds a two-fold symmetry and divides by 60), and the default
computation tree.

Trees are stored as merge tables: a map from the set of active column
labels to the merge ``(removed_left, removed_right, target)`` applied in
that state.  Building a tree from the table naturally shares subtrees that
are reached along different branches with the same active set, mirroring
the way the reduction recursion revisits identical sub-problems.

The sp6 data is transported from so7 through the column permutation
``(1 2)(3 9 8 6 5 7)``: the two matrices have identical dependency
structure under that relabeling, so the whole so7 tree transfers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Mapping, Sequence

from gmpy2 import mpq, mpz

from .engine import TreeNode, leaf, merge_node, reduce_by_tree, serialize_tree
from .exact import PiValue
from .zmatrix import FormMatrix

__all__ = [
    "ALGEBRA_NAMES",
    "AlgebraSpec",
    "SP6_FROM_SO7_PERMUTATION",
    "get_algebra",
    "list_dependencies",
    "sp6_from_so7",
    "so7_alternative_tree",
    "witten_via_tree",
]

ALGEBRA_NAMES = ("sl3", "so5", "g2", "so7", "sp6", "sl5")


@dataclass(frozen=True)
class AlgebraSpec:
    """Immutable per-algebra data bundle."""

    name: str
    ell: int
    columns: tuple[tuple[int, ...], ...]
    M: int
    weyl_order: int
    divisor: int
    table_includes_m_power: bool
    tree: TreeNode
    merge_table: Mapping[frozenset[int], tuple[int, int, int]]
    factorial_hints: Mapping[int, int]

    @property
    def r(self) -> int:
        return len(self.columns)

    def form_matrix(self, n: int) -> FormMatrix:
        """The lattice-sum object with every exponent equal to *n*."""
        return FormMatrix(self.ell, self.columns, (n,) * self.r)

    def to_json(self) -> dict:
        data = self.form_matrix(0).to_json()
        del data["exponents"]
        data.update(
            {
                "name": self.name,
                "M": self.M,
                "weyl_order": self.weyl_order,
                "divisor": self.divisor,
                "table_includes_m_power": self.table_includes_m_power,
                "tree": serialize_tree(self.tree),
            }
        )
        return data


# --------------------------------------------------------------------------
# matrices
# --------------------------------------------------------------------------

_COLUMNS: dict[str, tuple[tuple[int, ...], ...]] = {
    "sl3": ((1, 0), (0, 1), (1, 1)),
    "so5": ((1, 0), (0, 1), (1, 1), (1, 2)),
    "g2": ((1, 0), (0, 1), (1, 1), (1, 2), (1, 3), (2, 3)),
    "so7": (
        (1, 0, 0),
        (0, 1, 0),
        (0, 0, 1),
        (1, 1, 0),
        (0, 1, 1),
        (0, 2, 1),
        (2, 2, 1),
        (1, 2, 1),
        (1, 1, 1),
    ),
    "sp6": (
        (1, 0, 0),
        (0, 1, 0),
        (0, 0, 1),
        (1, 1, 0),
        (0, 1, 1),
        (0, 1, 2),
        (1, 2, 2),
        (1, 1, 2),
        (1, 1, 1),
    ),
    "sl5": (
        (1, 0, 0, 0),
        (0, 1, 0, 0),
        (0, 0, 1, 0),
        (0, 0, 0, 1),
        (1, 1, 0, 0),
        (0, 1, 1, 0),
        (0, 0, 1, 1),
        (1, 1, 1, 0),
        (0, 1, 1, 1),
        (1, 1, 1, 1),
    ),
}

_WEYL_ORDER = {"sl3": 6, "so5": 8, "g2": 12, "so7": 48, "sp6": 48, "sl5": 120}
_DIVISOR = {"sl3": 6, "so5": 8, "g2": 12, "so7": 48, "sp6": 48, "sl5": 60}

# Whether the algebra's reference values carry the factor M^{2m} (the true
# Witten normalization) or are stated for the bare positive-orthant sum.
# Both conventions appear in the literature; the catalog pins, per algebra,
# the one the pinned reference constants use, and `api.compute` converts.
_TABLE_INCLUDES_M_POWER = {
    "sl3": True,
    "so5": True,
    "g2": True,
    "so7": False,
    "sp6": False,
    "sl5": False,
}

# Preferred factorial in displayed denominators of zeta_W(2m), per (algebra,
# m); used by the coefficient-factoring presentation layer.
_FACTORIAL_HINTS: dict[str, dict[int, int]] = {
    "so7": {1: 17, 2: 37, 3: 54, 4: 74, 5: 89},
    "sp6": {1: 17, 2: 37, 3: 54, 4: 74, 5: 89},
    "sl5": {1: 18, 2: 41},
}


# --------------------------------------------------------------------------
# merge tables (active column set -> (removed_left, removed_right, target))
# --------------------------------------------------------------------------

_SL3_TABLE = {
    frozenset({1, 2, 3}): (1, 2, 3),
}

_SO5_TABLE = {
    frozenset({1, 2, 3, 4}): (2, 1, 3),
    frozenset({1, 3, 4}): (1, 4, 3),
    frozenset({2, 3, 4}): (2, 3, 4),
}

_G2_TABLE = {
    frozenset({1, 2, 3, 4, 5, 6}): (6, 5, 4),
    frozenset({1, 2, 3, 4, 5}): (2, 1, 3),
    frozenset({1, 2, 3, 4, 6}): (1, 2, 3),
    frozenset({1, 3, 4, 5}): (4, 1, 3),
    frozenset({2, 3, 4, 5}): (2, 3, 4),
    frozenset({2, 3, 4, 6}): (3, 2, 4),
    frozenset({1, 3, 4, 6}): (1, 4, 3),
    frozenset({1, 3, 5}): (5, 1, 3),
    frozenset({3, 4, 5}): (3, 4, 5),
    frozenset({2, 4, 5}): (4, 2, 5),
    frozenset({2, 4, 6}): (2, 6, 4),
    frozenset({3, 4, 6}): (3, 4, 6),
    frozenset({1, 3, 6}): (6, 1, 3),
}

_SO7_TABLE = {
    frozenset(range(1, 10)): (6, 8, 7),
    frozenset({1, 2, 3, 4, 5, 7, 8, 9}): (1, 8, 7),
    frozenset({1, 2, 3, 4, 5, 6, 7, 9}): (6, 5, 2),
    frozenset({2, 3, 4, 5, 7, 8, 9}): (2, 8, 9),
    frozenset({1, 2, 3, 4, 5, 7, 9}): (1, 5, 9),
    frozenset({1, 2, 3, 4, 6, 7, 9}): (6, 2, 3),
    frozenset({3, 4, 5, 7, 8, 9}): (5, 8, 4),
    frozenset({2, 3, 4, 5, 7, 9}): (2, 5, 3),
    frozenset({1, 2, 3, 4, 7, 9}): (1, 2, 4),
    frozenset({1, 3, 4, 6, 7, 9}): (1, 6, 7),
    frozenset({3, 4, 7, 8, 9}): (4, 7, 9),
    frozenset({3, 4, 5, 7, 9}): (4, 7, 9),
    frozenset({2, 3, 4, 7, 9}): (4, 7, 9),
    frozenset({1, 3, 4, 7, 9}): (3, 7, 9),
    frozenset({3, 4, 6, 7, 9}): (3, 7, 9),
    frozenset({3, 7, 8, 9}): (3, 9, 7),
    frozenset({3, 4, 8, 9}): (3, 9, 4),
    frozenset({3, 5, 7, 9}): (3, 9, 7),
    frozenset({3, 4, 5, 9}): (3, 9, 4),
    frozenset({2, 3, 7, 9}): (3, 9, 7),
    frozenset({2, 3, 4, 9}): (3, 9, 4),
    frozenset({1, 4, 7, 9}): (4, 9, 7),
    frozenset({1, 3, 4, 9}): (4, 9, 3),
    frozenset({4, 6, 7, 9}): (4, 9, 7),
    frozenset({3, 4, 6, 9}): (4, 9, 3),
}

_SL5_TABLE = {
    frozenset(range(1, 11)): (5, 7, 10),
    frozenset({1, 2, 3, 4, 6, 7, 8, 9, 10}): (2, 7, 9),
    frozenset({1, 2, 3, 4, 5, 6, 8, 9, 10}): (3, 5, 8),
    frozenset({1, 3, 4, 6, 7, 8, 9, 10}): (3, 7, 4),
    frozenset({1, 2, 3, 4, 6, 8, 9, 10}): (2, 3, 6),
    frozenset({1, 2, 4, 5, 6, 8, 9, 10}): (2, 5, 1),
    frozenset({1, 4, 6, 7, 8, 9, 10}): (4, 6, 9),
    frozenset({1, 3, 4, 6, 8, 9, 10}): (4, 6, 9),
    frozenset({1, 2, 4, 6, 8, 9, 10}): (4, 6, 9),
    frozenset({1, 4, 5, 6, 8, 9, 10}): (4, 6, 9),
    frozenset({1, 6, 7, 8, 9, 10}): (8, 6, 1),
    frozenset({1, 4, 7, 8, 9, 10}): (4, 8, 10),
    frozenset({1, 3, 6, 8, 9, 10}): (8, 6, 1),
    frozenset({1, 3, 4, 8, 9, 10}): (4, 8, 10),
    frozenset({1, 2, 6, 8, 9, 10}): (8, 6, 1),
    frozenset({1, 2, 4, 8, 9, 10}): (4, 8, 10),
    frozenset({1, 5, 6, 8, 9, 10}): (8, 6, 1),
    frozenset({1, 4, 5, 8, 9, 10}): (4, 8, 10),
    frozenset({1, 6, 7, 9, 10}): (1, 10, 9),
    frozenset({1, 7, 8, 9, 10}): (1, 10, 9),
    frozenset({1, 4, 7, 9, 10}): (1, 10, 9),
    frozenset({1, 3, 6, 9, 10}): (1, 10, 9),
    frozenset({1, 3, 8, 9, 10}): (1, 10, 9),
    frozenset({1, 3, 4, 9, 10}): (1, 10, 9),
    frozenset({1, 2, 6, 9, 10}): (1, 10, 9),
    frozenset({1, 2, 8, 9, 10}): (1, 10, 9),
    frozenset({1, 2, 4, 9, 10}): (1, 10, 9),
    frozenset({1, 5, 6, 9, 10}): (1, 10, 9),
    frozenset({1, 5, 8, 9, 10}): (1, 10, 9),
    frozenset({1, 4, 5, 9, 10}): (1, 10, 9),
}

# so7 column permutation onto sp6 (cycles (1 2)(3 9 8 6 5 7)).
SP6_FROM_SO7_PERMUTATION: dict[int, int] = {
    1: 2,
    2: 1,
    3: 9,
    4: 4,
    5: 7,
    6: 5,
    7: 3,
    8: 6,
    9: 8,
}


def _transport_table(
    table: Mapping[frozenset[int], tuple[int, int, int]],
    perm: Mapping[int, int],
) -> dict[frozenset[int], tuple[int, int, int]]:
    return {
        frozenset(perm[lbl] for lbl in active): (perm[p], perm[q], perm[t])
        for active, (p, q, t) in table.items()
    }


_SP6_TABLE = _transport_table(_SO7_TABLE, SP6_FROM_SO7_PERMUTATION)

_TABLES = {
    "sl3": _SL3_TABLE,
    "so5": _SO5_TABLE,
    "g2": _G2_TABLE,
    "so7": _SO7_TABLE,
    "sp6": _SP6_TABLE,
    "sl5": _SL5_TABLE,
}


def _build_tree(
    table: Mapping[frozenset[int], tuple[int, int, int]],
    active: frozenset[int],
    ell: int,
    cache: dict[frozenset[int], TreeNode],
) -> TreeNode:
    node = cache.get(active)
    if node is not None:
        return node
    if len(active) == ell:
        node = leaf()
    else:
        try:
            p, q, t = table[active]
        except KeyError:
            raise KeyError(f"merge table has no entry for state {sorted(active)}")
        node = merge_node(
            p,
            q,
            t,
            _build_tree(table, active - {p}, ell, cache),
            _build_tree(table, active - {q}, ell, cache),
        )
    cache[active] = node
    return node


def _make_spec(name: str) -> AlgebraSpec:
    columns = _COLUMNS[name]
    ell = len(columns[0])
    table = _TABLES[name]
    tree = _build_tree(table, frozenset(range(1, len(columns) + 1)), ell, {})
    m_value = 1
    for col in columns:
        m_value *= sum(col)
    return AlgebraSpec(
        name=name,
        ell=ell,
        columns=columns,
        M=m_value,
        weyl_order=_WEYL_ORDER[name],
        divisor=_DIVISOR[name],
        table_includes_m_power=_TABLE_INCLUDES_M_POWER[name],
        tree=tree,
        merge_table=dict(table),
        factorial_hints=dict(_FACTORIAL_HINTS.get(name, {})),
    )


_SPECS: dict[str, AlgebraSpec] = {}


def get_algebra(name: str) -> AlgebraSpec:
    """Immutable spec for one of sl3, so5, g2, so7, sp6, sl5."""
    key = name.lower()
    if key not in _COLUMNS:
        raise ValueError(
            f"unknown algebra {name!r}; supported: {', '.join(ALGEBRA_NAMES)}"
        )
    spec = _SPECS.get(key)
    if spec is None:
        spec = _make_spec(key)
        _SPECS[key] = spec
    return spec


def sp6_from_so7() -> AlgebraSpec:
    """The sp6 spec, built by transporting so7 data through the column
    permutation (1 2)(3 9 8 6 5 7)."""
    return get_algebra("sp6")


def so7_alternative_tree() -> TreeNode:
    """The so7 tree with the root merge targeted at column 1 instead of 7.

    Both targets are valid for the root dependency of columns 6 and 8
    (columns 6, 8, 7 and 6, 8, 1 are each linearly dependent), and the
    reduction value must not depend on the choice.
    """
    table = dict(_SO7_TABLE)
    table[frozenset(range(1, 10))] = (6, 8, 1)
    return _build_tree(table, frozenset(range(1, 10)), 3, {})


# --------------------------------------------------------------------------
# dependency enumeration
# --------------------------------------------------------------------------

def _rank(cols: Sequence[Sequence[int]]) -> int:
    """Rank of a small integer matrix given by columns (exact elimination)."""
    rows = [
        [mpq(col[i]) for col in cols] for i in range(len(cols[0]))
    ]
    rank = 0
    col_count = len(cols)
    for j in range(col_count):
        pivot = next(
            (i for i in range(rank, len(rows)) if rows[i][j] != 0), None
        )
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pr = rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][j] != 0:
                f = rows[i][j] / pr[j]
                rows[i] = [a - f * b for a, b in zip(rows[i], pr)]
        rank += 1
    return rank


def list_dependencies(spec: AlgebraSpec | str) -> list[tuple[int, int, int]]:
    """All 3-subsets of columns that are linearly dependent with no two
    columns parallel, as sorted 1-based label triples.

    The enumeration is exhaustive over all C(r, 3) subsets; parallel pairs
    are excluded because a merge needs both coefficients nonzero.
    """
    if isinstance(spec, str):
        spec = get_algebra(spec)
    out: list[tuple[int, int, int]] = []
    cols = spec.columns
    for i, j, k in itertools.combinations(range(1, spec.r + 1), 3):
        triple = [cols[i - 1], cols[j - 1], cols[k - 1]]
        if _rank(triple) > 2:
            continue
        if any(
            _rank([a, b]) < 2
            for a, b in itertools.combinations(triple, 2)
        ):
            continue
        out.append((i, j, k))
    return out


# --------------------------------------------------------------------------
# Witten values through the engine
# --------------------------------------------------------------------------

def witten_via_tree(spec: AlgebraSpec | str, m: int, tree: TreeNode | None = None) -> PiValue:
    """``zeta_W(2m)`` by computation-tree reduction.

    The full-lattice sum ``Z`` over-counts the positive-chamber sum by the
    Weyl order (the integrand is Weyl-symmetric for even exponents and
    chamber walls are excluded), so

        zeta_W(2m) = M^(2m) / weyl_order * Z(sigma, n = 2m).
    """
    if isinstance(spec, str):
        spec = get_algebra(spec)
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    n = 2 * m
    value = reduce_by_tree(spec.form_matrix(n), tree if tree is not None else spec.tree)
    return value.scaled(mpq(mpz(spec.M) ** n, spec.weyl_order))
