"""Weighted-tree representation with exact rational vertex costs.

Vertices are dense zero-based integers. Costs are non-negative rationals
(`int` or `fractions.Fraction`) and every arithmetic operation on them is
exact; nothing in this package ever touches floating point for costs.

Besides the user-facing ``Fraction`` view, a tree carries an integer view of
its costs (every cost multiplied by the least common multiple of the
denominators). Integer comparison is what the solver uses on its hot path.
"""

from __future__ import annotations

import math
from array import array
from collections import deque
from fractions import Fraction
from itertools import accumulate, chain


class NotATree(ValueError):
    """The edge list does not describe a tree on the given vertices."""


class NegativeCost(ValueError):
    """A vertex cost is negative."""


class IndexOutOfRange(ValueError):
    """A vertex id lies outside [0, n)."""


class WeightedTree:
    """Immutable-by-convention tree with per-vertex rational costs.

    Attributes:
        n: number of vertices.
        edges: the n-1 validated edges, each normalized to (min, max) and
            sorted; this is the canonical edge order used everywhere.
        adjacency: per-vertex neighbor lists, each sorted ascending.
        costs: per-vertex costs as Fractions (always reduced).
        scaled_costs: per-vertex integer costs; scaled_costs[v] equals
            costs[v] * cost_denominator exactly.
        cost_denominator: the common denominator of the integer view.

    The neighbor lists also exist in a packed form (`_adj_heads`,
    `_adj_flat`): one flat C int array of all neighbors in vertex order plus
    an offset table, so vertex v's neighbors are
    `_adj_flat[_adj_heads[v]:_adj_heads[v + 1]]`.  Hot traversals read this
    contiguous view instead of chasing two million boxed ints around the
    heap; `adjacency` remains the friendly public face.

    Do not mutate any attribute after construction; every function in this
    package treats trees as immutable and shares them freely.
    """

    __slots__ = ("n", "edges", "adjacency", "costs",
                 "scaled_costs", "cost_denominator",
                 "_adj_heads", "_adj_flat")

    def __init__(self, n, edges, adjacency, costs, scaled_costs, denominator,
                 adj_heads, adj_flat):
        self.n = n
        self.edges = edges
        self.adjacency = adjacency
        self.costs = costs
        self.scaled_costs = scaled_costs
        self.cost_denominator = denominator
        self._adj_heads = adj_heads
        self._adj_flat = adj_flat

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def __repr__(self) -> str:
        return f"WeightedTree(n={self.n})"


def build_tree(n: int, edges, costs) -> WeightedTree:
    """Validate and build a WeightedTree.

    Parameters:
        n: vertex count, at least 1.
        edges: iterable of n-1 unordered (u, v) pairs.
        costs: sequence of n non-negative costs (int or Fraction).

    Returns:
        The validated tree, with adjacency lists sorted ascending so that
        every downstream iteration order is deterministic.

    Raises:
        NotATree: wrong edge count, self-loop, duplicate edge, or cycle
            (naming the offending edge).
        NegativeCost: some cost is negative (naming the vertex).
        IndexOutOfRange: an edge endpoint is outside [0, n).
        ValueError/TypeError: malformed n or costs.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    costs = list(costs)
    if len(costs) != n:
        raise ValueError(f"expected {n} costs, got {len(costs)}")

    norm_costs: list[Fraction] = []
    for v, c in enumerate(costs):
        if isinstance(c, bool) or not isinstance(c, (int, Fraction)):
            raise TypeError(
                f"cost of vertex {v} must be an int or Fraction, got {type(c).__name__}")
        if c < 0:
            raise NegativeCost(f"vertex {v} has negative cost {c}")
        norm_costs.append(c if isinstance(c, Fraction) else Fraction(c))

    edge_list = [tuple(e) for e in edges]
    if len(edge_list) != n - 1:
        raise NotATree(f"a tree on {n} vertices needs {n - 1} edges, got {len(edge_list)}")

    # Union-find; with exactly n-1 edges, acyclic is equivalent to connected.
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    seen: set[tuple[int, int]] = set()
    normalized: list[tuple[int, int]] = []
    for a, b in edge_list:
        if not (isinstance(a, int) and isinstance(b, int)):
            raise TypeError(f"edge ({a!r}, {b!r}) endpoints must be integers")
        if not (0 <= a < n) or not (0 <= b < n):
            raise IndexOutOfRange(f"edge ({a}, {b}) has an endpoint outside [0, {n})")
        if a == b:
            raise NotATree(f"edge ({a}, {b}) is a self-loop")
        key = (a, b) if a < b else (b, a)
        if key in seen:
            raise NotATree(f"edge ({key[0]}, {key[1]}) appears twice")
        seen.add(key)
        ra, rb = find(a), find(b)
        if ra == rb:
            raise NotATree(f"edge ({a}, {b}) closes a cycle")
        parent[ra] = rb
        normalized.append(key)
    normalized.sort()

    adjacency: list[list[int]] = [[] for _ in range(n)]
    for a, b in normalized:
        adjacency[a].append(b)
        adjacency[b].append(a)
    for neighbors in adjacency:
        neighbors.sort()
    adj_heads = array("i", chain((0,), accumulate(map(len, adjacency))))
    adj_flat = array("i", chain.from_iterable(adjacency))

    denominator = 1
    for c in norm_costs:
        denominator = denominator * c.denominator // math.gcd(denominator, c.denominator)
    scaled = [c.numerator * (denominator // c.denominator) for c in norm_costs]

    return WeightedTree(n, tuple(normalized), tuple(tuple(ns) for ns in adjacency),
                        norm_costs, scaled, denominator, adj_heads, adj_flat)


def bfs_distances(tree: WeightedTree, src: int) -> list[int]:
    """Hop-count distances from ``src`` to every vertex."""
    if not (0 <= src < tree.n):
        raise IndexOutOfRange(f"source vertex {src} outside [0, {tree.n})")
    dist = [-1] * tree.n
    dist[src] = 0
    queue = deque([src])
    adjacency = tree.adjacency
    while queue:
        v = queue.popleft()
        dv = dist[v]
        for w in adjacency[v]:
            if dist[w] < 0:
                dist[w] = dv + 1
                queue.append(w)
    return dist


def total_cost(tree: WeightedTree, subset) -> Fraction:
    """Exact total cost of a set of vertices."""
    scaled = tree.scaled_costs
    return Fraction(sum(scaled[v] for v in subset), tree.cost_denominator)
