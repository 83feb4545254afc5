"""Computation-tree reduction of lattice sums to Bernoulli expressions.

The engine evaluates ``Z``-objects (see :mod:`wittenz.zmatrix`) whose columns
satisfy enough two-term linear dependencies ``lam1*sigma_p + lam2*sigma_q =
sigma_t`` to be reduced, column pair by column pair, down to square matrices.

One reduction step at a node merging columns ``p`` and ``q`` into target
``t`` (exponents ``e_p``, ``e_q``, ``e_t``; ``s = e_p + e_q + e_t``)::

    Z = lam1^e_p lam2^e_q * (
          sum_{i=0}^{e_q} C(e_p+e_q-i-1, e_p-1) lam2^(-i) * Z[left,  q->i, t->s-i]
        + sum_{i=0}^{e_p} C(e_p+e_q-i-1, e_q-1) lam1^(-i) * Z[right, p->i, t->s-i] )

where the left subtree has column ``p`` removed and the right subtree has
``q`` removed.  The ``i = 0`` terms are boundary terms: a kept column at
exponent 0 stands for *minus* the same sum restricted to that column's zero
hyperplane.  Equivalently, a state whose exponent vector has zeros at
columns ``j1, ..., jz`` has the value

    (-1)^z * sum over the sublattice  {x : <x, sigma_j1> = ... = 0}

of the positive-exponent integrand (primed as usual).  The square base case
accounts for this automatically through its ``Bper_0 = 1`` coset factors,
and merges touching a single exponent-0 column reduce to one absorption
term under the binomial convention ``C(t, k) = 0`` for ``k < 0``.  When a
merge meets *two* exponent-0 columns the restriction has corank at least
two, and the state is evaluated directly: zero when the sublattice is
trivial or a positive-exponent form vanishes on it, an explicit one-line
zeta sum when the sublattice is a line.

A *computation tree* records which column each branch removes and the merge
target.  Binary-tree nodes may be shared (the same subtree object reachable
through both branches); evaluation memoizes on (node, exponent vector), so
shared subtrees are evaluated once per distinct exponent vector.

Leaves are evaluated as follows:

* square state (``ell`` active columns): exact coset base case;
* ``ell + 1`` active columns: the closed two-sum evaluation
  (:func:`evaluate_key_lemma` for ``ell = 2``, :func:`evaluate_higher_rank`
  otherwise) when its preconditions hold;
* anything else is an error carrying the tree path.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

import gmpy2
from gmpy2 import mpq

from .exact import PiValue, Rational, bernoulli, binomial, format_rational, to_rational
from .zmatrix import (
    FormMatrix,
    MatrixShapeError,
    PreconditionError,
    SingularMatrixError,
    WeightError,
    _det_rows,
    square_zcoef,
    zcoef_to_pivalue,
)

__all__ = [
    "TreeNode",
    "TreeValidationError",
    "TreeEvaluationError",
    "DependencyError",
    "GcdConditionError",
    "ShapeConditionError",
    "ValidationReport",
    "NodeReport",
    "describe_tree",
    "evaluate_higher_rank",
    "evaluate_key_lemma",
    "leaf",
    "merge_node",
    "parse_tree",
    "partial_fraction_split",
    "reduce_by_tree",
    "reduction_terms",
    "serialize_tree",
    "solve_merge",
    "tree_stats",
    "validate_tree",
]


class DependencyError(PreconditionError):
    """The requested two-column merge admits no exact dependency."""


class GcdConditionError(PreconditionError):
    """A gcd/primitivity hypothesis of a closed evaluation is violated."""


class ShapeConditionError(PreconditionError):
    """A determinant / u-shape hypothesis of a closed evaluation is violated."""


class TreeValidationError(ValueError):
    """A computation tree failed validation; carries the full report."""

    def __init__(self, report: "ValidationReport") -> None:
        super().__init__("; ".join(report.problems) or "invalid computation tree")
        self.report = report


class TreeEvaluationError(ValueError):
    """A leaf evaluation failed; carries the tree path of the leaf."""

    def __init__(self, path: str, cause: Exception) -> None:
        super().__init__(f"at tree node {path}: {cause}")
        self.path = path
        self.cause = cause


# --------------------------------------------------------------------------
# tree structure
# --------------------------------------------------------------------------

@dataclass(eq=False)
class TreeNode:
    """A computation-tree node.  Instances may be shared between branches.

    Internal nodes carry the merge ``(removed_left, removed_right, target)``
    using 1-based column labels: the left child's state has ``removed_left``
    dropped, the right child's state has ``removed_right`` dropped, and both
    transfer exponent weight onto ``target``.  Leaves carry no data.
    """

    removed_left: Optional[int] = None
    removed_right: Optional[int] = None
    target: Optional[int] = None
    left: Optional["TreeNode"] = None
    right: Optional["TreeNode"] = None

    @property
    def is_leaf(self) -> bool:
        return self.removed_left is None

    def __repr__(self) -> str:
        if self.is_leaf:
            return "TreeNode(leaf)"
        return (
            f"TreeNode({self.removed_left},{self.removed_right}"
            f"->{self.target})"
        )


def leaf() -> TreeNode:
    return TreeNode()


def merge_node(
    removed_left: int,
    removed_right: int,
    target: int,
    left: TreeNode,
    right: TreeNode,
) -> TreeNode:
    return TreeNode(removed_left, removed_right, target, left, right)


def parse_tree(obj: dict) -> TreeNode:
    """Build a tree from its JSON object form."""
    if obj.get("leaf"):
        return leaf()
    try:
        return merge_node(
            int(obj["removed_left"]),
            int(obj["removed_right"]),
            int(obj["target"]),
            parse_tree(obj["left"]),
            parse_tree(obj["right"]),
        )
    except KeyError as exc:
        raise ValueError(f"malformed tree node: missing {exc}") from None


def serialize_tree(node: TreeNode) -> dict:
    """JSON object form of a tree (shared subtrees are expanded)."""
    if node.is_leaf:
        return {"leaf": True}
    return {
        "removed_left": node.removed_left,
        "removed_right": node.removed_right,
        "target": node.target,
        "left": serialize_tree(node.left),
        "right": serialize_tree(node.right),
    }


def tree_stats(node: TreeNode) -> dict:
    """Node counts: strict (expanded) and distinct (shared objects once)."""
    strict_internal = strict_leaves = 0
    seen: set[int] = set()
    distinct_internal = distinct_leaves = 0

    def walk(n: TreeNode) -> None:
        nonlocal strict_internal, strict_leaves
        nonlocal distinct_internal, distinct_leaves
        new = id(n) not in seen
        seen.add(id(n))
        if n.is_leaf:
            strict_leaves += 1
            if new:
                distinct_leaves += 1
            return
        strict_internal += 1
        if new:
            distinct_internal += 1
        walk(n.left)
        walk(n.right)

    walk(node)
    return {
        "strict_internal": strict_internal,
        "strict_leaves": strict_leaves,
        "distinct_internal": distinct_internal,
        "distinct_leaves": distinct_leaves,
    }


# --------------------------------------------------------------------------
# merge coefficients
# --------------------------------------------------------------------------

def solve_merge(
    columns: Sequence[Sequence[int]], p: int, q: int, t: int
) -> tuple[Rational, Rational]:
    """Solve ``lam1 * sigma_p + lam2 * sigma_q = sigma_t`` exactly.

    Labels are 1-based.  Raises :class:`DependencyError` when the columns
    admit no such dependency with nonzero coefficients (including the
    parallel-columns case, which the dependency inventories exclude).
    """
    cp, cq, ct = columns[p - 1], columns[q - 1], columns[t - 1]
    n = len(cp)
    for i1 in range(n):
        for i2 in range(i1 + 1, n):
            det = cp[i1] * cq[i2] - cp[i2] * cq[i1]
            if det == 0:
                continue
            lam1 = mpq(ct[i1] * cq[i2] - ct[i2] * cq[i1], det)
            lam2 = mpq(cp[i1] * ct[i2] - cp[i2] * ct[i1], det)
            if lam1 == 0 or lam2 == 0:
                raise DependencyError(
                    f"columns {p},{q} do not combine onto {t}: "
                    f"degenerate coefficients ({lam1}, {lam2})"
                )
            for i in range(n):
                if lam1 * cp[i] + lam2 * cq[i] != ct[i]:
                    raise DependencyError(
                        f"no dependency: columns {p},{q} do not span column {t}"
                    )
            return lam1, lam2
    raise DependencyError(f"no dependency: columns {p} and {q} are parallel")


def reduction_terms(
    e_p: int, e_q: int, e_t: int, lam1: Rational, lam2: Rational
) -> Iterator[tuple[str, int, Rational, tuple[int, int]]]:
    """Terms of one reduction step as ``(side, i, coefficient, exponents)``.

    ``side`` is ``"left"`` (column ``p`` removed, ``q`` kept at exponent
    ``i``) or ``"right"`` (``q`` removed, ``p`` kept); ``exponents`` is the
    pair (kept-column exponent, target exponent), which always sums with the
    removed weight to the parent's ``s = e_p + e_q + e_t``.  The common
    prefactor ``lam1^e_p lam2^e_q`` is folded into each coefficient.
    """
    s = e_p + e_q + e_t
    prefactor = lam1**e_p * lam2**e_q
    for i in range(e_q + 1):
        c = binomial(e_p + e_q - i - 1, e_p - 1)
        if c:
            yield "left", i, prefactor * c * lam2**-i, (i, s - i)
    for i in range(e_p + 1):
        c = binomial(e_p + e_q - i - 1, e_q - 1)
        if c:
            yield "right", i, prefactor * c * lam1**-i, (i, s - i)


def partial_fraction_split(
    s: int, t: int
) -> list[tuple[str, int, Rational]]:
    """Partial-fraction split of ``1/(x^s y^t)`` along ``x + y``.

    Returns ``(kind, a, coefficient)`` triples with

        1/(x^s y^t) = sum over keep_x terms of C(t+a-1, a) / (x^(s-a) (x+y)^(t+a))
                    + sum over keep_y terms of C(s+b-1, b) / (y^(t-b) (x+y)^(s+b)).
    """
    if s < 1 or t < 1:
        raise PreconditionError(f"exponents must be >= 1, got ({s}, {t})")
    terms: list[tuple[str, int, Rational]] = []
    for a in range(s):
        terms.append(("keep_x", a, mpq(binomial(t + a - 1, a))))
    for b in range(t):
        terms.append(("keep_y", b, mpq(binomial(s + b - 1, b))))
    return terms


# --------------------------------------------------------------------------
# closed leaf evaluations
# --------------------------------------------------------------------------

def _beta(l: int, w: int) -> Rational:
    return bernoulli(l) * bernoulli(w - l) / (gmpy2.fac(l) * gmpy2.fac(w - l))


def _alpha(l: int, w: int, det: Rational) -> Rational:
    """Coset correction: 1 for determinant +-1, the two-coset factor for +-2."""
    mag = abs(det)
    if mag == 1:
        return mpq(1)
    if mag == 2:
        return 1 - mpq(2) ** -l - mpq(2) ** (l - w) + mpq(2) ** (1 - w)
    raise ShapeConditionError(f"|determinant| must be 1 or 2, got {mag}")


def _key_lemma_zcoef(
    cols: Sequence[Sequence[int]], exps: Sequence[int]
) -> Rational:
    """Coefficient of ``(2 pi i)^w`` for the fully evaluated 2x3 state."""
    if len(cols) != 3 or any(len(c) != 2 for c in cols):
        raise MatrixShapeError("key-lemma evaluation needs three 2-vectors")
    (a, b), (c, d), (e, f) = (tuple(col) for col in cols)
    i, j, k = (int(x) for x in exps)
    if min(i, j, k) < 1:
        raise PreconditionError(f"exponents must be >= 1, got {(i, j, k)}")
    w = i + j + k
    if w % 2 != 0:
        raise WeightError(f"weight {w} is odd")
    import math as _math

    for col in ((a, b), (c, d), (e, f)):
        if _math.gcd(abs(col[0]), abs(col[1])) != 1:
            raise GcdConditionError(f"column {col} is not primitive")
    det12 = a * d - b * c
    if det12 != 0:
        mu1 = mpq(e * d - f * c, det12)
        mu2 = mpq(a * f - b * e, det12)
        if mu1 == 0 or mu2 == 0:
            raise DependencyError(
                "first two columns do not combine onto the third"
            )
        candidates = [(mu1 / mu2, mu2)]
    else:
        # Parallel primitive columns: (c,d) = +-(a,b).  u is then free up
        # to the constraint u*lam*(a,b) + lam*(c,d) = (e,f); prefer
        # u in {1,-1} then {2,1/2}.
        sign = 1 if (c, d) == (a, b) else -1
        candidates = []
        for u in (mpq(1), mpq(-1), mpq(2), mpq(1, 2)):
            denom = u + sign
            if denom == 0:
                continue
            ref = a if a != 0 else b
            tgt = e if a != 0 else f
            lam = mpq(tgt, ref) / denom
            if lam == 0:
                continue
            if (u * lam * a + lam * c, u * lam * b + lam * d) == (e, f):
                candidates.append((u, lam))
        if not candidates:
            raise DependencyError(
                "first two columns do not combine onto the third"
            )
    u, lam = candidates[0]
    if abs(u) not in (mpq(1), mpq(2), mpq(1, 2)):
        raise ShapeConditionError(f"|u| must be 1, 2 or 1/2, got {u}")
    delta = a * f - b * e
    if abs(delta) not in (1, 2):
        raise ShapeConditionError(f"|delta| must be 1 or 2, got {delta}")
    u_delta = u * delta
    if abs(u_delta) not in (mpq(1), mpq(2)):
        raise ShapeConditionError(f"|u*delta| must be 1 or 2, got {u_delta}")
    total = mpq(0)
    for l in range(i + 1):
        c_bin = binomial(i + j - l - 1, j - 1)
        if c_bin:
            total += (
                c_bin * u ** (i - l) * lam ** (i + j - l)
                * _beta(l, w) * _alpha(l, w, delta)
            )
    for l in range(j + 1):
        c_bin = binomial(i + j - l - 1, i - 1)
        if c_bin:
            total += (
                c_bin * u**i * lam ** (i + j - l)
                * _beta(l, w) * _alpha(l, w, u_delta)
            )
    return total


def evaluate_key_lemma(
    cols: Sequence[Sequence[int]], exps: Sequence[int]
) -> PiValue:
    """Closed evaluation of ``Z((sigma1)_i, (sigma2)_j, (sigma3)_k)`` in rank 2.

    Hypotheses: all columns primitive; ``u*lam*sigma1 + lam*sigma2 = sigma3``
    with ``|u| in {1, 2, 1/2}``; ``delta = det(sigma1, sigma3)`` with
    ``|delta|`` and ``|u*delta|`` in ``{1, 2}``; even weight.  Violations
    raise :class:`GcdConditionError`, :class:`DependencyError`,
    :class:`ShapeConditionError` or :class:`WeightError` respectively.
    """
    w = sum(int(x) for x in exps)
    return zcoef_to_pivalue(_key_lemma_zcoef(cols, exps), w)


def _higher_rank_zcoef(
    columns: Sequence[Sequence[int]],
    exponents: Sequence[int],
    triple: Sequence[int],
    u: Rational,
    lam: Rational,
) -> Rational:
    """Coefficient of ``(2 pi i)^w`` for the one-merge-from-square state.

    The state has ``r`` columns of dimension ``ell = r - 1``; roles 1, 2, 3
    are the *triple* columns, the rest keep matrix order.  Requires
    ``u = +-1``, ``u*lam*sigma1 + lam*sigma2 = sigma3`` and
    ``|det(sigma2, sigma3, rest...)| = 1``.

    The value is ``(-1)^(r-1)`` times the product of the spectator factors
    ``Bper_{e_j}(0)/e_j!`` (zero for any spectator exponent 1) times::

        u^e1 lam^(e1+e2) * (
            sum_{l=0}^{e1} C(e1+e2-l-1, e2-1) u^l B_l B_{s-l} / (lam^l l! (s-l)!)
          + sum_{l=0}^{e2} C(e1+e2-l-1, e1-1)     B_l B_{s-l} / (lam^l l! (s-l)!) )

    with ``s = e1 + e2 + e3``.  The global sign ``(-1)^(r-1)`` matches the
    square base case (and the lattice oracle); it is the product of one
    ``-(2 pi i)^e B_e / e!`` factor per final column.
    """
    r = len(columns)
    ell = len(columns[0])
    if r != ell + 1 or r < 3:
        raise MatrixShapeError(
            f"need an (r-1) x r matrix with r >= 3, got {ell} x {r}"
        )
    u = to_rational(u)
    lam = to_rational(lam)
    if abs(u) != 1:
        raise ShapeConditionError(f"u must be +-1, got {u}")
    if lam == 0:
        raise ShapeConditionError("lam must be nonzero")
    i1, i2, i3 = (int(x) for x in triple)
    labels = set(range(1, r + 1))
    if len({i1, i2, i3}) != 3 or not {i1, i2, i3} <= labels:
        raise PreconditionError(f"invalid role triple {triple!r}")
    sigma1 = columns[i1 - 1]
    sigma2 = columns[i2 - 1]
    sigma3 = columns[i3 - 1]
    for i in range(ell):
        if u * lam * sigma1[i] + lam * sigma2[i] != sigma3[i]:
            raise DependencyError(
                f"u*lam*sigma{i1} + lam*sigma{i2} != sigma{i3}"
            )
    if not any(abs(c) == 1 for c in sigma1) or not any(
        abs(c) == 1 for c in sigma2
    ):
        raise ShapeConditionError(
            "merged columns must each have a +-1 component"
        )
    rest = [idx for idx in range(1, r + 1) if idx not in (i1, i2, i3)]
    check_cols = [sigma2, sigma3] + [columns[idx - 1] for idx in rest]
    rows = [[col[i] for col in check_cols] for i in range(ell)]
    from .zmatrix import _det_rows

    if abs(_det_rows(rows)) != 1:
        raise ShapeConditionError(
            "det of (sigma2, sigma3, remaining columns) must be +-1"
        )
    e1 = int(exponents[i1 - 1])
    e2 = int(exponents[i2 - 1])
    e3 = int(exponents[i3 - 1])
    w = sum(int(e) for e in exponents)
    if w % 2 != 0:
        raise WeightError(f"weight {w} is odd")
    s = e1 + e2 + e3
    spectator = mpq(1)
    for idx in rest:
        e = int(exponents[idx - 1])
        if e == 1:
            return mpq(0)
        spectator *= bernoulli(e) / gmpy2.fac(e)
    bracket = mpq(0)
    for l in range(e1 + 1):
        c_bin = binomial(e1 + e2 - l - 1, e2 - 1)
        if c_bin:
            bracket += c_bin * u**l * _beta(l, s) / lam**l
    for l in range(e2 + 1):
        c_bin = binomial(e1 + e2 - l - 1, e1 - 1)
        if c_bin:
            bracket += c_bin * _beta(l, s) / lam**l
    sign = -1 if (r - 1) % 2 else 1
    return sign * spectator * u**e1 * lam ** (e1 + e2) * bracket


def evaluate_higher_rank(
    matrix: FormMatrix,
    triple: Sequence[int],
    u: Rational,
    lam: Rational,
) -> PiValue:
    """Closed evaluation of a state one merge away from square (rank >= 2)."""
    zc = _higher_rank_zcoef(
        matrix.columns, matrix.exponents, triple, u, lam
    )
    return zcoef_to_pivalue(zc, matrix.weight)


# --------------------------------------------------------------------------
# validation
# --------------------------------------------------------------------------

@dataclass
class NodeReport:
    path: str
    active: tuple[int, ...]
    merge: Optional[tuple[int, int, int]]
    lambdas: Optional[tuple[str, str]]
    good_parent: Optional[bool]
    problems: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "path": self.path,
            "active": list(self.active),
            "merge": list(self.merge) if self.merge else None,
            "lambdas": list(self.lambdas) if self.lambdas else None,
            "good_parent": self.good_parent,
            "problems": list(self.problems),
        }


@dataclass
class ValidationReport:
    ok: bool
    problems: list[str]
    warnings: list[str]
    nodes: list[NodeReport]

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "problems": list(self.problems),
            "warnings": list(self.warnings),
            "nodes": [n.to_json() for n in self.nodes],
        }


def _leaf_dispatch_possible(
    columns: Sequence[Sequence[int]], active: tuple[int, ...], ell: int
) -> Optional[str]:
    """Return a problem description if a leaf state cannot be evaluated."""
    cols = [columns[lbl - 1] for lbl in active]
    if len(active) == ell:
        rows = [[col[i] for col in cols] for i in range(ell)]
        from .zmatrix import _det_rows

        if _det_rows(rows) == 0:
            return f"square leaf {active} is singular"
        return None
    if len(active) == ell + 1:
        if _find_leaf_merge(columns, active) is None:
            return (
                f"leaf state {active} admits no closed evaluation "
                "(no valid merge shape found)"
            )
        return None
    return (
        f"leaf state {active} has {len(active)} active columns; "
        f"only {ell} (square) or {ell + 1} are evaluable"
    )


def _find_leaf_merge(
    columns: Sequence[Sequence[int]], active: tuple[int, ...]
) -> Optional[tuple[int, int, int, Rational, Rational]]:
    """Find ``(p, q, t, u, lam)`` making an ell+1 leaf state evaluable.

    Scans role assignments in label order; for ell = 2 the key-lemma shape
    (|u| in {1,2,1/2}, |delta| conditions) is accepted, otherwise u = +-1
    with unit determinant is required.
    """
    ell = len(columns[0])
    for t in active:
        for p in active:
            if p == t:
                continue
            for q in active:
                if q in (p, t):
                    continue
                try:
                    lam1, lam2 = solve_merge(columns, p, q, t)
                except DependencyError:
                    continue
                u = lam1 / lam2
                if ell == 2:
                    try:
                        cols = [columns[lbl - 1] for lbl in active]
                        exps = [2] * len(active)
                        order = [p, q, t] + [
                            lbl for lbl in active if lbl not in (p, q, t)
                        ]
                        _key_lemma_zcoef(
                            [columns[lbl - 1] for lbl in order], exps
                        )
                        return p, q, t, u, lam2
                    except (PreconditionError, ValueError):
                        continue
                if abs(u) != 1:
                    continue
                rest = [lbl for lbl in active if lbl not in (p, q, t)]
                check = [columns[q - 1], columns[t - 1]] + [
                    columns[lbl - 1] for lbl in rest
                ]
                rows = [[col[i] for col in check] for i in range(ell)]
                from .zmatrix import _det_rows

                if abs(_det_rows(rows)) != 1:
                    continue
                if not any(abs(c) == 1 for c in columns[p - 1]):
                    continue
                if not any(abs(c) == 1 for c in columns[q - 1]):
                    continue
                return p, q, t, u, lam2
    return None


def validate_tree(matrix: FormMatrix, tree: TreeNode) -> ValidationReport:
    """Structural validation of a computation tree against a matrix.

    Checks per internal node: the merge references distinct active columns,
    the two-column dependency onto the target exists, and removed columns
    never reappear below.  Checks per leaf: the remaining state is exactly
    evaluable.  Additionally computes the good-parent property (every
    internal descendant's merge pair contains the label of its own sibling);
    violations are reported as warnings, not failures, since valid trees in
    use do violate it at isolated nodes without affecting correctness.
    """
    problems: list[str] = []
    warnings: list[str] = []
    nodes: list[NodeReport] = []
    columns = matrix.columns

    def walk(node: TreeNode, active: tuple[int, ...], path: str) -> bool:
        """Returns True if all internal strict descendants (including
        *node* itself when internal and non-root) satisfy the sibling
        condition evaluated by the caller; used to aggregate goodness."""
        if node.is_leaf:
            report = NodeReport(path, active, None, None, None)
            problem = _leaf_dispatch_possible(columns, active, matrix.ell)
            if problem:
                report.problems.append(problem)
                problems.append(f"{path}: {problem}")
            nodes.append(report)
            return True
        p, q, t = node.removed_left, node.removed_right, node.target
        report = NodeReport(path, active, (p, q, t), None, None)
        ok_here = True
        if len({p, q, t}) != 3:
            report.problems.append(f"merge ({p},{q},{t}) labels not distinct")
            ok_here = False
        missing = [lbl for lbl in (p, q, t) if lbl not in active]
        if missing:
            report.problems.append(
                f"merge references removed/unknown columns {missing}"
            )
            ok_here = False
        lam_txt = None
        if ok_here:
            try:
                lam1, lam2 = solve_merge(columns, p, q, t)
                lam_txt = (format_rational(lam1), format_rational(lam2))
                report.lambdas = lam_txt
            except DependencyError as exc:
                report.problems.append(str(exc))
                ok_here = False
        if not ok_here:
            problems.extend(f"{path}: {msg}" for msg in report.problems)
            nodes.append(report)
            walk(node.left, tuple(l for l in active if l != p), f"{path}/{p}")
            walk(node.right, tuple(l for l in active if l != q), f"{path}/{q}")
            return False
        nodes.append(report)
        good_left = walk(
            node.left, tuple(l for l in active if l != p), f"{path}/{p}"
        )
        good_right = walk(
            node.right, tuple(l for l in active if l != q), f"{path}/{q}"
        )
        # Sibling condition for this node's two children: the left child's
        # sibling is named by the right removed column and vice versa.
        children_ok = True
        for child, sibling_label in ((node.left, q), (node.right, p)):
            if not child.is_leaf and sibling_label not in (
                child.removed_left,
                child.removed_right,
            ):
                children_ok = False
        subtree_good = good_left and good_right and children_ok
        report.good_parent = subtree_good
        if not subtree_good:
            warnings.append(
                f"{path}: not a good parent (a descendant's merge pair "
                "omits its sibling's label)"
            )
        return subtree_good

    walk(tree, tuple(range(1, matrix.r + 1)), "root")
    return ValidationReport(not problems, problems, warnings, nodes)


# --------------------------------------------------------------------------
# evaluation
# --------------------------------------------------------------------------

_LEAF_MEMO: dict[tuple, Rational] = {}


def _square_leaf_zcoef(
    cols: tuple[tuple[int, ...], ...], exps: tuple[int, ...]
) -> Rational:
    key = (cols, exps)
    value = _LEAF_MEMO.get(key)
    if value is None:
        value = square_zcoef(cols, exps)
        _LEAF_MEMO[key] = value
    return value


def _restricted_state_zcoef(
    columns: Sequence[Sequence[int]],
    ell: int,
    active: Sequence[int],
    exps: Sequence[int],
) -> Optional[Rational]:
    """Direct value of a state through its exponent-0 hyperplane restrictions.

    Each exponent-0 column contributes a factor -1 and restricts the sum to
    that column's zero hyperplane.  If the restrictions cut the lattice to
    rank 0 the value is 0; if they leave exactly a line spanned by a
    primitive vector v, the sum collapses to

        (-1)^z * prod_j <v, sigma_j>^(-e_j) * sum'_k k^(-w)

    with ``sum'_k k^(-w) = -B_w (2 pi i)^w / w!`` for even w (0 for odd w).
    Returns None when the restricted sublattice has rank 2 or more, which
    this shortcut cannot evaluate.
    """
    zero_rows = [
        tuple(columns[lbl - 1]) for lbl, e in zip(active, exps) if e == 0
    ]
    basis: list[list[Rational]] = []
    pivots: list[int] = []
    originals: list[tuple[int, ...]] = []
    for row in zero_rows:
        vec = [mpq(c) for c in row]
        for prow, pcol in zip(basis, pivots):
            if vec[pcol] != 0:
                f = vec[pcol] / prow[pcol]
                vec = [a - f * b for a, b in zip(vec, prow)]
        piv = next((j for j, a in enumerate(vec) if a != 0), None)
        if piv is not None:
            basis.append(vec)
            pivots.append(piv)
            originals.append(row)
    rank = len(basis)
    if rank == ell:
        return mpq(0)
    if rank < ell - 1:
        return None
    kernel = []
    for k in range(ell):
        minor = [[r[j] for j in range(ell) if j != k] for r in originals]
        kernel.append((-1) ** k * _det_rows(minor))
    content = 0
    for a in kernel:
        content = gmpy2.gcd(content, a)
    kernel = [int(a // content) for a in kernel]
    w = sum(exps)
    if w % 2 != 0:
        return mpq(0)
    prod = mpq(1)
    for lbl, e in zip(active, exps):
        if e > 0:
            c = sum(v * s for v, s in zip(kernel, columns[lbl - 1]))
            if c == 0:
                return mpq(0)
            prod *= mpq(c) ** -e
    sign = -1 if len(zero_rows) % 2 else 1
    return sign * prod * (-bernoulli(w) / gmpy2.fac(w))


def reduce_by_tree(matrix: FormMatrix, tree: TreeNode) -> PiValue:
    """Exact value of the lattice sum by computation-tree reduction.

    Validates the tree first (:class:`TreeValidationError` on failure),
    then applies the reduction step at every internal node and the closed
    evaluations at leaves.  Leaf precondition failures are re-raised as
    :class:`TreeEvaluationError` with the tree path attached.
    """
    report = validate_tree(matrix, tree)
    if not report.ok:
        raise TreeValidationError(report)
    w = matrix.weight
    if w % 2 != 0:
        raise WeightError(f"weight {w} is odd")
    columns = matrix.columns
    ell = matrix.ell
    lam_cache: dict[int, tuple[Rational, Rational]] = {}
    memo: dict[tuple[int, tuple[int, ...], tuple[int, ...]], Rational] = {}

    def eval_node(
        node: TreeNode,
        active: tuple[int, ...],
        exps: tuple[int, ...],
        path: str,
    ) -> Rational:
        key = (id(node), active, exps)
        cached = memo.get(key)
        if cached is not None:
            return cached
        if node.is_leaf:
            value = eval_leaf(active, exps, path)
        else:
            value = eval_merge(node, active, exps, path)
        memo[key] = value
        return value

    def eval_leaf(
        active: tuple[int, ...], exps: tuple[int, ...], path: str
    ) -> Rational:
        cols = tuple(columns[lbl - 1] for lbl in active)
        if len(active) == ell:
            try:
                return _square_leaf_zcoef(cols, exps)
            except PreconditionError as exc:
                raise TreeEvaluationError(path, exc) from exc
        if len(active) == ell + 1:
            found = _find_leaf_merge(columns, active)
            if found is None:
                raise TreeEvaluationError(
                    path,
                    PreconditionError(
                        f"state {active} admits no closed evaluation"
                    ),
                )
            p, q, t, u, lam = found
            order = [p, q, t] + [lbl for lbl in active if lbl not in (p, q, t)]
            ordered_cols = [columns[lbl - 1] for lbl in order]
            ordered_exps = [exps[active.index(lbl)] for lbl in order]
            try:
                if ell == 2:
                    return _key_lemma_zcoef(ordered_cols, ordered_exps)
                return _higher_rank_zcoef(
                    ordered_cols, ordered_exps, (1, 2, 3), u, lam
                )
            except PreconditionError as exc:
                raise TreeEvaluationError(path, exc) from exc
        raise TreeEvaluationError(
            path,
            PreconditionError(
                f"leaf with {len(active)} active columns is not evaluable"
            ),
        )

    def eval_merge(
        node: TreeNode,
        active: tuple[int, ...],
        exps: tuple[int, ...],
        path: str,
    ) -> Rational:
        p, q, t = node.removed_left, node.removed_right, node.target
        idx = {lbl: pos for pos, lbl in enumerate(active)}
        e_p, e_q, e_t = exps[idx[p]], exps[idx[q]], exps[idx[t]]
        left_active = tuple(l for l in active if l != p)
        right_active = tuple(l for l in active if l != q)
        if e_p == 0 and e_q == 0:
            # Two exponent-0 columns in one merge: the state is confined to
            # a corank >= 2 sublattice and is evaluated directly.
            value = _restricted_state_zcoef(columns, ell, active, exps)
            if value is None:
                raise TreeEvaluationError(
                    path,
                    PreconditionError(
                        "merge of two exponent-0 columns over a sublattice "
                        "of rank >= 2"
                    ),
                )
            return value
        lams = lam_cache.get(id(node))
        if lams is None:
            lams = solve_merge(columns, p, q, t)
            lam_cache[id(node)] = lams
        lam1, lam2 = lams
        if e_t == 0:
            # The state lives on sigma_t's zero hyperplane, where
            # lam1*sigma_p + lam2*sigma_q vanishes identically.
            if e_p == 0 or e_q == 0:
                # The exponent-0 one of p, q vanishes there too, forcing the
                # positive-exponent one to vanish: every term is omitted.
                return mpq(0)
            # sigma_p = -(lam2/lam1) sigma_q on the hyperplane: fold p into
            # q directly (the partial-fraction split needs sigma_t != 0).
            child = list(exps)
            child[idx[q]] = e_p + e_q
            child_exps = tuple(e for l, e in zip(active, child) if l != p)
            return (-lam1 / lam2) ** e_p * eval_node(
                node.left, left_active, child_exps, f"{path}/{p}"
            )
        s = e_p + e_q + e_t
        total = mpq(0)
        for i in range(e_q + 1):
            c = binomial(e_p + e_q - i - 1, e_p - 1)
            if c:
                child = list(exps)
                child[idx[q]] = i
                child[idx[t]] = s - i
                child_exps = tuple(
                    e for l, e in zip(active, child) if l != p
                )
                total += (
                    c
                    * lam2**-i
                    * eval_node(node.left, left_active, child_exps, f"{path}/{p}")
                )
        for i in range(e_p + 1):
            c = binomial(e_p + e_q - i - 1, e_q - 1)
            if c:
                child = list(exps)
                child[idx[p]] = i
                child[idx[t]] = s - i
                child_exps = tuple(
                    e for l, e in zip(active, child) if l != q
                )
                total += (
                    c
                    * lam1**-i
                    * eval_node(node.right, right_active, child_exps, f"{path}/{q}")
                )
        return lam1**e_p * lam2**e_q * total

    zcoef = eval_node(
        tree, tuple(range(1, matrix.r + 1)), matrix.exponents, "root"
    )
    return zcoef_to_pivalue(zcoef, w)


# --------------------------------------------------------------------------
# display helpers
# --------------------------------------------------------------------------

def describe_tree(matrix: FormMatrix, tree: TreeNode) -> list[str]:
    """Human-readable per-node lines: active columns, merge, coefficients."""
    lines: list[str] = []
    columns = matrix.columns

    def walk(node: TreeNode, active: tuple[int, ...], depth: int, label: str) -> None:
        pad = "  " * depth
        if node.is_leaf:
            cols = ", ".join(str(columns[lbl - 1]) for lbl in active)
            lines.append(f"{pad}{label} leaf  active={list(active)}  [{cols}]")
            return
        p, q, t = node.removed_left, node.removed_right, node.target
        try:
            lam1, lam2 = solve_merge(columns, p, q, t)
            lam_txt = f"lam=({format_rational(lam1)}, {format_rational(lam2)})"
        except DependencyError as exc:
            lam_txt = f"invalid: {exc}"
        lines.append(
            f"{pad}{label} merge ({p},{q} -> {t})  active={list(active)}  {lam_txt}"
        )
        walk(node.left, tuple(l for l in active if l != p), depth + 1, f"-{p}:")
        walk(node.right, tuple(l for l in active if l != q), depth + 1, f"-{q}:")

    walk(tree, tuple(range(1, matrix.r + 1)), 0, "root:")
    return lines
