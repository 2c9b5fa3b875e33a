"""Command-line interface.

Subcommands: solve, verify, brute, classify, gen, bench.  Exit codes: 0 on
success (and "valid" verdicts), 1 for an invalid verdict from verify, 2 for
usage or parse errors, 3 when brute refuses an oversized instance.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from fractions import Fraction

from . import __version__
from .fileformat import (
    TreeFileError,
    emit_tree_text,
    parse_tree_file,
    result_document,
    result_to_json,
)
from .generators import KINDS, make_tree
from .oracle import ModelKind, TooLarge, brute_min, verify_landmark
from .solver import solve
from .topology import classify
from .tree import IndexOutOfRange, NegativeCost, NotATree, total_cost

_PARSE_ERRORS = (TreeFileError, NotATree, NegativeCost, IndexOutOfRange, OSError)


def _load_tree(path: str):
    try:
        return parse_tree_file(path)
    except _PARSE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(2) from None


def _parse_landmarks(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(tok) for tok in text.replace(",", " ").split()]
    except ValueError:
        print(f"error: bad landmark list {text!r}", file=sys.stderr)
        raise SystemExit(2) from None


def _model_from_args(args) -> ModelKind:
    return ModelKind(args.model, args.k)


def _seed_from_args(args) -> int:
    env = os.environ.get("TREEDIM_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            print(f"error: TREEDIM_SEED must be an integer, got {env!r}", file=sys.stderr)
            raise SystemExit(2) from None
    return args.seed


def cmd_solve(args) -> int:
    tree = _load_tree(args.tree)
    result = solve(tree)
    if args.json:
        sys.stdout.write(result_to_json(result_document(tree, result)))
        return 0
    print(f"case: {result.case_tag.value}")
    print(f"landmarks: {' '.join(map(str, result.landmarks)) or '(empty)'}")
    print(f"cost: {result.cost}")
    if args.explain:
        for assignment in result.explanation:
            print(f"core {assignment.core}:")
            for sol in assignment.solutions:
                verts = " ".join(map(str, sorted(sol.vertices))) or "-"
                print(f"  leg at {sol.leg.root} ({sol.leg.kind.value}): "
                      f"{sol.type.value} -> {verts}")
        if result.added_core_vertex is not None:
            print(f"added core vertex: {result.added_core_vertex}")
    return 0


def cmd_verify(args) -> int:
    tree = _load_tree(args.tree)
    landmarks = _parse_landmarks(args.landmarks)
    for v in landmarks:
        if not 0 <= v < tree.n:
            print(f"error: landmark {v} out of range for n={tree.n}", file=sys.stderr)
            return 2
    verdict = verify_landmark(tree, landmarks, _model_from_args(args), max_violations=5)
    cost = total_cost(tree, set(landmarks))
    if verdict.valid:
        print(f"valid (cost {cost})")
        return 0
    print(f"invalid (cost {cost})")
    for x, y, seen in verdict.violations:
        print(f"  pair ({x}, {y}) has {seen} separating landmark(s), needs {args.k}")
    return 1


def cmd_brute(args) -> int:
    tree = _load_tree(args.tree)
    try:
        landmarks, cost = brute_min(tree, _model_from_args(args), cap=args.cap)
    except TooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    print(f"landmarks: {' '.join(map(str, landmarks)) or '(empty)'}")
    print(f"cost: {cost}")
    return 0


def cmd_classify(args) -> int:
    tree = _load_tree(args.tree)
    topology = classify(tree)
    if args.dot:
        sys.stdout.write(_to_dot(tree, topology))
        return 0
    print(f"case: {topology.case_tag.value}")
    for v in range(tree.n):
        print(f"{v}\t{topology.vertex_class[v].value}")
    for core in topology.cores:
        legs = topology.glegs.get(core, ())
        if not legs:
            continue
        print(f"core {core} g-legs:")
        for leg in legs:
            verts = " ".join(map(str, leg.vertices))
            print(f"  root {leg.root} ({leg.kind.value}): {verts}")
    return 0


_DOT_COLORS = {
    "leaf": "gray",
    "path_vertex": "white",
    "small_core": "orange",
    "minor_core": "lightblue",
    "main_core": "red",
}


def _to_dot(tree, topology) -> str:
    lines = ["graph tree {"]
    for v in range(tree.n):
        cls = topology.vertex_class[v].value
        color = _DOT_COLORS[cls]
        lines.append(f'  {v} [label="{v}\\n{cls}\\ncost {tree.costs[v]}" '
                     f'style=filled fillcolor={color}];')
    for a, b in tree.edges:
        lines.append(f"  {a} -- {b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_gen(args) -> int:
    seed = _seed_from_args(args)
    cost_values = None
    if args.costs == "file":
        if not args.cost_file:
            print("error: --costs file needs --cost-file", file=sys.stderr)
            return 2
        try:
            with open(args.cost_file, encoding="utf-8") as fh:
                cost_values = [Fraction(tok) for tok in fh.read().split()]
        except (OSError, ValueError, ZeroDivisionError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
    try:
        tree = make_tree(args.kind, args.n, seed=seed, costs=args.costs,
                         cost_values=cost_values)
    except (ValueError, NotATree, NegativeCost, IndexOutOfRange) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = emit_tree_text(tree)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_bench(args) -> int:
    seed = _seed_from_args(args)
    try:
        sizes = [int(tok) for tok in args.sizes.replace(",", " ").split()]
    except ValueError:
        print(f"error: bad --sizes {args.sizes!r}", file=sys.stderr)
        return 2
    print(f"{'n':>10}  {'seconds':>10}  {'us/vertex':>10}")
    for n in sizes:
        tree = make_tree(args.kind, n, seed=seed, costs="unit")
        start = time.perf_counter()
        result = solve(tree)
        elapsed = time.perf_counter() - start
        print(f"{n:>10}  {elapsed:>10.4f}  {elapsed / n * 1e6:>10.4f}"
              f"  # cost {result.cost}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="treedim",
        description="Minimum-cost landmark sets for vertex-weighted trees.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve one tree file")
    p.add_argument("tree")
    p.add_argument("--json", action="store_true", help="print the JSON result document")
    p.add_argument("--explain", action="store_true", help="print the per-core breakdown")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a landmark set")
    p.add_argument("tree")
    p.add_argument("--landmarks", required=True,
                   help="comma or space separated vertex ids (may be empty)")
    p.add_argument("--k", type=int, default=2, help="required separators per pair")
    p.add_argument("--model", choices=("nl", "ap"), default="nl",
                   help="nl: pairs outside the set; ap: all pairs")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("brute", help="exhaustive minimum (small trees only)")
    p.add_argument("tree")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--model", choices=("nl", "ap"), default="nl")
    p.add_argument("--cap", type=int, default=18, help="refuse trees larger than this")
    p.set_defaults(func=cmd_brute)

    p = sub.add_parser("classify", help="vertex classes and g-leg structure")
    p.add_argument("tree")
    p.add_argument("--dot", action="store_true", help="emit Graphviz DOT instead")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("gen", help="generate a tree file")
    p.add_argument("--kind", choices=KINDS, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0,
                   help="RNG seed (TREEDIM_SEED overrides)")
    p.add_argument("--costs", choices=("unit", "random", "file"), default="unit")
    p.add_argument("--cost-file", help="whitespace-separated cost tokens for --costs file")
    p.add_argument("-o", "--output", help="write here instead of stdout")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="time solve() on generated trees")
    p.add_argument("--sizes", default="100000,1000000",
                   help="comma separated vertex counts")
    p.add_argument("--kind", choices=KINDS, default="caterpillar")
    p.add_argument("--seed", type=int, default=0,
                   help="RNG seed (TREEDIM_SEED overrides)")
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
