"""Deterministic tree generators for tests, benchmarks, and the CLI.

Every generator takes a vertex count and returns an edge list; ``make_tree``
combines a shape with a cost scheme.  All randomness flows through a caller
supplied seed via ``random.Random``, so identical inputs give identical trees
on every run and platform.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .tree import WeightedTree, build_tree

KINDS = ("path", "star", "spider", "caterpillar", "double-spider", "random")

_RANDOM_COST_DENOMINATORS = (1, 2, 4)


def path_edges(n: int) -> list[tuple[int, int]]:
    return [(i, i + 1) for i in range(n - 1)]


def star_edges(n: int) -> list[tuple[int, int]]:
    return [(0, i) for i in range(1, n)]


def spider_edges(n: int) -> list[tuple[int, int]]:
    """Three bare legs of near-equal length around center 0 (n=7 gives 2,2,2)."""
    if n < 4:
        return star_edges(n)
    lengths = [(n - 1 + i) // 3 for i in range(3)]
    edges = []
    nxt = 1
    for length in lengths:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return edges


def caterpillar_edges(n: int) -> list[tuple[int, int]]:
    """A spine of ceil((n+2)/2) vertices with the rest hanging as single leaves."""
    if n < 4:
        return path_edges(n)
    m = (n + 3) // 2
    edges = path_edges(m)
    for i, leaf in enumerate(range(m, n)):
        edges.append((1 + i, leaf))
    return edges


def double_spider_edges(n: int) -> list[tuple[int, int]]:
    """Two degree-3 branch vertices joined by a path, each with two bare legs."""
    if n < 6:
        raise ValueError(f"double-spider needs at least 6 vertices, got {n}")
    mid = (n - 4) // 4
    rest = n - 4 - mid
    len_a = rest - rest // 2
    len_b = rest // 2

    edges = []
    nxt = 0

    def chain(attach: int, length: int) -> None:
        nonlocal nxt
        prev = attach
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1

    u = nxt
    nxt += 1
    edges.append((u, nxt))  # u's single-leaf leg
    nxt += 1
    chain(u, len_a)  # u's other leg
    # path from u to the second branch vertex
    prev = u
    for _ in range(mid):
        edges.append((prev, nxt))
        prev = nxt
        nxt += 1
    v = nxt
    edges.append((prev, v))
    nxt += 1
    edges.append((v, nxt))
    nxt += 1
    chain(v, len_b)
    return edges


def prufer_decode(n: int, seq: list[int]) -> list[tuple[int, int]]:
    """Edges of the labeled tree encoded by a Pruefer sequence of length n-2."""
    if n == 1:
        return []
    if n == 2:
        return [(0, 1)]
    if len(seq) != n - 2:
        raise ValueError(f"sequence length must be {n - 2}, got {len(seq)}")
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    ptr = 0
    while degree[ptr] != 1:
        ptr += 1
    leaf = ptr
    for x in seq:
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1 and x < ptr:
            leaf = x
        else:
            ptr += 1
            while degree[ptr] != 1:
                ptr += 1
            leaf = ptr
    edges.append((leaf, n - 1))
    return edges


def random_tree_edges(n: int, rng: random.Random) -> list[tuple[int, int]]:
    """Uniform random labeled tree (decoded from a random Pruefer sequence)."""
    if n <= 2:
        return prufer_decode(n, [])
    return prufer_decode(n, [rng.randrange(n) for _ in range(n - 2)])


def unit_costs(n: int) -> list[Fraction]:
    return [Fraction(1)] * n


def random_costs(n: int, rng: random.Random) -> list[Fraction]:
    return [Fraction(rng.randint(0, 100), rng.choice(_RANDOM_COST_DENOMINATORS))
            for _ in range(n)]


def edges_for(kind: str, n: int, rng: random.Random) -> list[tuple[int, int]]:
    if kind == "path":
        return path_edges(n)
    if kind == "star":
        return star_edges(n)
    if kind == "spider":
        return spider_edges(n)
    if kind == "caterpillar":
        return caterpillar_edges(n)
    if kind == "double-spider":
        return double_spider_edges(n)
    if kind == "random":
        return random_tree_edges(n, rng)
    raise ValueError(f"unknown tree kind {kind!r} (choose from {', '.join(KINDS)})")


def make_tree(kind: str, n: int, seed: int = 0, costs: str = "unit",
              cost_values: list[Fraction] | None = None) -> WeightedTree:
    """Build a generated tree.

    ``costs`` is "unit", "random", or "file"; the latter requires
    ``cost_values`` with exactly n entries.  The same seed drives both shape
    and costs.
    """
    rng = random.Random(seed)
    edges = edges_for(kind, n, rng)
    if costs == "unit":
        values = unit_costs(n)
    elif costs == "random":
        values = random_costs(n, rng)
    elif costs == "file":
        if cost_values is None:
            raise ValueError("costs='file' needs cost_values")
        values = list(cost_values)
    else:
        raise ValueError(f"unknown cost scheme {costs!r}")
    return build_tree(n, edges, values)
