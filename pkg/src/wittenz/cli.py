"""Command-line interface: compute, verify, tree, selftest.

Exact values are printed as decimal rationals (or their factored form);
floating output appears only inside verification reports.  Exit codes:
0 success, 2 usage or input error, 3 dual-route mismatch, 4 verification
below threshold or inconclusive.

The environment variable ``WITTENZ_BERNOULLI_MAX`` pre-sizes the shared
Bernoulli cache before any command runs, which helps when timing a
single large computation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass
from typing import Optional, Sequence

from .api import ComputationMismatch, closed_value, compute, table_value_via_tree
from .catalog import ALGEBRA_NAMES, AlgebraSpec, get_algebra
from .engine import (
    TreeNode,
    parse_tree,
    serialize_tree,
    tree_stats,
    validate_tree,
)
from .exact import PiValue, bernoulli_warm, format_rational
from .factoring import DEFAULT_EFFORT, FactoredValue, factor_coefficient
from .oracle import verify
from .zmatrix import PreconditionError

__all__ = ["main"]

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_MISMATCH = 3
EXIT_VERIFY = 4

_METHOD_LABELS = {"tree": "tree", "closed": "closed-form", "both": "both"}


class UsageError(Exception):
    """Bad input that is the caller's fault (exit code 2)."""


@dataclass(frozen=True)
class OutputRecord:
    """One computed value, ready for text/JSON/LaTeX emission."""

    algebra: str
    s: int
    method: str
    value: PiValue
    factored: Optional[FactoredValue]
    timing: float

    def to_json(self) -> dict:
        return {
            "algebra": self.algebra,
            "s": self.s,
            "method": self.method,
            "value": self.value.to_json(),
            "factored": self.factored.to_json() if self.factored else None,
            "timing": round(self.timing, 3),
        }

    def to_text(self) -> str:
        lines = [f"zeta_W({self.s}; {self.algebra}) = {self.value}"]
        if self.factored is not None:
            lines.append(f"{'':>{len(f'zeta_W({self.s}; {self.algebra})')}} = "
                         f"{self.factored.to_text()}")
        lines.append(f"method: {self.method}   time: {self.timing:.3f}s")
        return "\n".join(lines)

    def to_latex(self) -> str:
        if self.factored is not None:
            return self.factored.to_latex()
        coeff = format_rational(self.value.coefficient)
        return f"{coeff}\\pi^{{{self.value.pi_power}}}"


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _load_tree(path: str) -> TreeNode:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            obj = json.load(handle)
    except OSError as exc:
        raise UsageError(f"cannot read tree file {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"tree file {path} is not valid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise UsageError(f"tree file {path}: expected a JSON object at top level")
    try:
        return parse_tree(obj)
    except (ValueError, TypeError) as exc:
        raise UsageError(f"tree file {path}: {exc}") from None


def _render_tree(node: TreeNode, prefix: str = "", is_last: bool = True,
                 is_root: bool = True) -> list[str]:
    if node.is_leaf:
        label = "leaf"
    else:
        label = (f"merge {node.removed_left},{node.removed_right}"
                 f" -> {node.target}")
    if is_root:
        lines = [label]
        child_prefix = ""
    else:
        connector = "`- " if is_last else "|- "
        lines = [f"{prefix}{connector}{label}"]
        child_prefix = prefix + ("   " if is_last else "|  ")
    if not node.is_leaf:
        lines += _render_tree(node.left, child_prefix, False, False)
        lines += _render_tree(node.right, child_prefix, True, False)
    return lines


# --------------------------------------------------------------------------
# commands
# --------------------------------------------------------------------------

def cmd_compute(args: argparse.Namespace) -> int:
    spec = get_algebra(args.algebra)
    tree = _load_tree(args.tree) if args.tree else None
    started = time.perf_counter()
    try:
        value = compute(spec, args.m, method=args.method, tree=tree)
    except ComputationMismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    elapsed = time.perf_counter() - started
    hint = spec.factorial_hints.get(args.m)
    factored = factor_coefficient(value, effort=args.effort, factorial_hint=hint)
    record = OutputRecord(
        algebra=spec.name,
        s=2 * args.m,
        method=_METHOD_LABELS[args.method],
        value=value,
        factored=factored,
        timing=elapsed,
    )
    if args.format == "json":
        print(json.dumps(record.to_json(), indent=2))
    elif args.format == "latex":
        print(record.to_latex())
    else:
        print(record.to_text())
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    spec = get_algebra(args.algebra)
    tree = _load_tree(args.tree) if args.tree else None
    exact = table_value_via_tree(spec, args.m, tree)
    report = verify(spec, 2 * args.m, exact, args.bound, args.precision)
    passed = report.matching_digits >= args.min_digits and not report.inconclusive
    if args.format == "json":
        payload = report.to_json()
        payload["min_digits"] = args.min_digits
        payload["passed"] = passed
        print(json.dumps(payload, indent=2))
    else:
        print(
            f"verify {spec.name} s={2 * args.m}: exact = {exact}\n"
            f"  series bound {args.bound}, precision {args.precision}: "
            f"numeric = {report.to_json()['numeric']}\n"
            f"  matching digits: {report.matching_digits}"
            f" (threshold {args.min_digits})"
            + (" [inconclusive: raise --precision]" if report.inconclusive else "")
        )
        print("  PASS" if passed else "  FAIL")
    return EXIT_OK if passed else EXIT_VERIFY


def cmd_tree(args: argparse.Namespace) -> int:
    spec: Optional[AlgebraSpec] = (
        get_algebra(args.algebra) if args.algebra else None
    )
    if args.tree:
        tree = _load_tree(args.tree)
    elif spec is not None:
        tree = spec.tree
    else:
        raise UsageError("tree: need --algebra (default tree) or --tree <file>")
    stats = tree_stats(tree)
    report = None
    if args.check:
        if spec is None:
            raise UsageError("tree --check: need --algebra for the form matrix")
        report = validate_tree(spec.form_matrix(2), tree)
    if args.format == "json":
        payload: dict = {
            "algebra": spec.name if spec else None,
            "tree": serialize_tree(tree),
            "stats": stats,
        }
        if report is not None:
            payload["validation"] = report.to_json()
        print(json.dumps(payload, indent=2))
    else:
        for line in _render_tree(tree):
            print(line)
        print(
            f"internal nodes: {stats['distinct_internal']} distinct"
            f" ({stats['strict_internal']} expanded),"
            f" leaves: {stats['distinct_leaves']} distinct"
            f" ({stats['strict_leaves']} expanded)"
        )
        if report is not None:
            if report.ok:
                print("validation: pass")
            else:
                print("validation: FAIL")
                for problem in report.problems:
                    print(f"  problem: {problem}")
            for warning in report.warnings:
                print(f"  warning: {warning}")
    if report is not None and not report.ok:
        return EXIT_USAGE
    return EXIT_OK


def cmd_selftest(args: argparse.Namespace) -> int:
    """Quick end-to-end battery: dual routes, oracle, factored output."""
    failures = 0
    worst = EXIT_OK

    def check(label: str, ok: bool, detail: str = "", code: int = EXIT_VERIFY) -> None:
        nonlocal failures, worst
        status = "ok" if ok else "FAIL"
        suffix = f"  ({detail})" if detail else ""
        print(f"selftest: {label}: {status}{suffix}")
        if not ok:
            failures += 1
            worst = max(worst, code)

    for name in ALGEBRA_NAMES:
        started = time.perf_counter()
        try:
            value = compute(name, 1, method="both")
        except ComputationMismatch as exc:
            check(f"{name} m=1 dual-route", False, str(exc), EXIT_MISMATCH)
            continue
        elapsed = time.perf_counter() - started
        check(f"{name} m=1 dual-route", True, f"{value}, {elapsed:.2f}s")

    spec = get_algebra("so5")
    report = verify(spec, 2, table_value_via_tree(spec, 1), bound=200,
                    precision_digits=30)
    check(
        "so5 m=1 series oracle",
        report.matching_digits >= 8 and not report.inconclusive,
        f"{report.matching_digits} matching digits at bound 200",
    )

    factored = factor_coefficient(
        closed_value("so7", 1), factorial_hint=get_algebra("so7").factorial_hints[1]
    )
    check(
        "so7 m=1 factored emission",
        factored.to_latex() == "\\frac{2^3\\cdot 19}{3^3\\cdot 7\\cdot 17!}\\pi^{18}",
        factored.to_latex(),
    )

    print(f"selftest: {'all checks passed' if not failures else f'{failures} failed'}")
    return worst


# --------------------------------------------------------------------------
# parser / entry point
# --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wittenz",
        description=(
            "Exact Witten zeta special values zeta_W(2m) as rational"
            " multiples of pi^(2mr), with independent numeric verification."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_algebra(p: argparse.ArgumentParser, required: bool = True) -> None:
        p.add_argument(
            "--algebra",
            choices=ALGEBRA_NAMES,
            required=required,
            help="simple Lie algebra (rank 2 to 4)",
        )

    p_compute = sub.add_parser(
        "compute", help="exact value of zeta_W(2m) for one algebra"
    )
    add_algebra(p_compute)
    p_compute.add_argument(
        "--m", type=_positive_int, required=True,
        help="half-weight: the computed value is zeta_W(2m)",
    )
    p_compute.add_argument(
        "--method", choices=("tree", "closed", "both"), default="both",
        help="reduction tree, closed-form hierarchy, or both with an"
             " exact cross-check (default)",
    )
    p_compute.add_argument(
        "--format", choices=("text", "json", "latex"), default="text"
    )
    p_compute.add_argument(
        "--tree", metavar="PATH",
        help="JSON file with an alternative computation tree",
    )
    p_compute.add_argument(
        "--effort", type=_positive_int, default=DEFAULT_EFFORT,
        help="factoring work bound (trial-division limit and rho steps)",
    )
    p_compute.set_defaults(handler=cmd_compute)

    p_verify = sub.add_parser(
        "verify", help="compare the tree-route value against the series oracle"
    )
    add_algebra(p_verify)
    p_verify.add_argument("--m", type=_positive_int, required=True)
    p_verify.add_argument(
        "--bound", type=_positive_int, default=100,
        help="series truncation: 1 <= m_i <= bound (default 100)",
    )
    p_verify.add_argument(
        "--precision", type=_positive_int, default=50,
        help="requested decimal digits for the series sum (default 50)",
    )
    p_verify.add_argument(
        "--min-digits", type=_positive_int, default=10,
        help="matching digits required for success (default 10)",
    )
    p_verify.add_argument(
        "--tree", metavar="PATH",
        help="JSON file with an alternative computation tree",
    )
    p_verify.add_argument("--format", choices=("text", "json"), default="text")
    p_verify.set_defaults(handler=cmd_verify)

    p_tree = sub.add_parser(
        "tree", help="dump and optionally validate a computation tree"
    )
    add_algebra(p_tree, required=False)
    p_tree.add_argument(
        "--tree", metavar="PATH", help="JSON tree file (default: catalog tree)"
    )
    p_tree.add_argument(
        "--check", action="store_true",
        help="validate merges, gcd conditions, and leaf shapes",
    )
    p_tree.add_argument("--format", choices=("text", "json"), default="text")
    p_tree.set_defaults(handler=cmd_tree)

    p_self = sub.add_parser(
        "selftest", help="quick dual-route, oracle, and output checks"
    )
    p_self.set_defaults(handler=cmd_selftest)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    warm = os.environ.get("WITTENZ_BERNOULLI_MAX")
    if warm:
        try:
            bernoulli_warm(int(warm))
        except ValueError:
            print(
                f"error: WITTENZ_BERNOULLI_MAX must be an integer, got {warm!r}",
                file=sys.stderr,
            )
            return EXIT_USAGE
    try:
        return args.handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (PreconditionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
