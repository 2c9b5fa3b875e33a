"""Reading and writing the plain-text tree format and the JSON result document.

Tree files are line oriented.  Lines starting with ``#`` are comments and
blank lines are skipped.  The first data line holds the vertex count n; the
following tokens (one line canonically, but any split is accepted) give the n
vertex costs as non-negative integers or ``p/q`` rationals; then n-1 lines
each hold one edge as two vertex ids.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .legs import LocalSetAssignment
from .solver import LandmarkResult
from .topology import LegKind
from .tree import WeightedTree, build_tree


class TreeFileError(ValueError):
    """Malformed tree file; the message names the offending line."""


def _parse_cost_token(token: str, lineno: int) -> Fraction:
    try:
        if "/" in token:
            p, q = token.split("/", 1)
            value = Fraction(int(p), int(q))
        else:
            value = Fraction(int(token))
    except (ValueError, ZeroDivisionError) as exc:
        raise TreeFileError(f"line {lineno}: bad cost token {token!r} ({exc})") from None
    if value < 0:
        raise TreeFileError(f"line {lineno}: negative cost {token!r}")
    return value


def parse_tree_text(text: str) -> WeightedTree:
    """Parse tree-file text into a validated tree.

    Raises:
        TreeFileError: on any syntax problem, naming the line.
        NotATree, NegativeCost, IndexOutOfRange: from structural validation.
    """
    lines = [(no, line.strip()) for no, line in enumerate(text.splitlines(), start=1)]
    data = [(no, line) for no, line in lines if line and not line.startswith("#")]
    pos = 0

    if pos >= len(data):
        raise TreeFileError("line 1: missing vertex count")
    no, line = data[pos]
    pos += 1
    tokens = line.split()
    if len(tokens) != 1:
        raise TreeFileError(f"line {no}: expected the vertex count alone, got {line!r}")
    try:
        n = int(tokens[0])
    except ValueError:
        raise TreeFileError(f"line {no}: vertex count is not an integer: {tokens[0]!r}") from None
    if n < 1:
        raise TreeFileError(f"line {no}: vertex count must be at least 1, got {n}")

    costs: list[Fraction] = []
    while len(costs) < n:
        if pos >= len(data):
            raise TreeFileError(f"line {lines[-1][0] if lines else 1}: "
                                f"expected {n} cost tokens, found {len(costs)}")
        no, line = data[pos]
        pos += 1
        for token in line.split():
            if len(costs) == n:
                raise TreeFileError(f"line {no}: more than {n} cost tokens")
            costs.append(_parse_cost_token(token, no))

    edges: list[tuple[int, int]] = []
    for _ in range(n - 1):
        if pos >= len(data):
            raise TreeFileError(f"line {lines[-1][0] if lines else 1}: "
                                f"expected {n - 1} edge lines, found {len(edges)}")
        no, line = data[pos]
        pos += 1
        tokens = line.split()
        if len(tokens) != 2:
            raise TreeFileError(f"line {no}: expected an edge as two vertex ids, got {line!r}")
        try:
            a, b = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise TreeFileError(f"line {no}: edge endpoints must be integers: {line!r}") from None
        edges.append((a, b))

    if pos < len(data):
        no, line = data[pos]
        raise TreeFileError(f"line {no}: unexpected trailing content: {line!r}")

    return build_tree(n, edges, costs)


def parse_tree_file(path: str) -> WeightedTree:
    with open(path, encoding="utf-8") as fh:
        return parse_tree_text(fh.read())


def emit_tree_text(tree: WeightedTree) -> str:
    """Canonical text form: one count line, one cost line, one line per edge."""
    out = [str(tree.n)]
    out.append(" ".join(str(c) for c in tree.costs))
    for a, b in tree.edges:
        out.append(f"{a} {b}")
    return "\n".join(out) + "\n"


_KIND_NAMES = {
    LegKind.SHORT_STANDARD: "short_standard",
    LegKind.LONG_STANDARD: "long_standard",
    LegKind.MODIFIED: "modified",
}


def _assignment_entry(assignment: LocalSetAssignment) -> dict:
    return {
        "core": assignment.core,
        "legs": [
            {
                "root": sol.leg.root,
                "kind": _KIND_NAMES[sol.leg.kind],
                "solution_type": sol.type.value,
                "vertices": sorted(sol.vertices),
            }
            for sol in assignment.solutions
        ],
    }


def result_document(tree: WeightedTree, result: LandmarkResult) -> dict:
    """JSON-ready summary of a solver run."""
    doc = {
        "n": tree.n,
        "case_tag": result.case_tag.value,
        "landmarks": list(result.landmarks),
        "cost": str(result.cost),
        "per_core": [_assignment_entry(a) for a in result.explanation],
    }
    if result.added_core_vertex is not None:
        doc["added_core_vertex"] = result.added_core_vertex
    return doc


def result_to_json(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"
