"""Shared builders for the test suite.

The steered builders construct trees that land in a specific classification
bucket (each asserts nothing itself; tests check the classification).  The
``enumeration_min`` helper is a second, independent exhaustive minimizer used
to cross-check ``brute_min``: it walks subsets by ``itertools.combinations``
and judges each with ``verify_landmark``, sharing no code with the bitmask
search.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

import pytest

from treedim import WeightedTree, build_tree, prufer_decode, verify_landmark


def unit_costs(n: int) -> list[Fraction]:
    return [Fraction(1)] * n


def random_costs(rng: random.Random, n: int) -> list[Fraction]:
    return [Fraction(rng.randint(0, 100), rng.choice((1, 2, 4))) for _ in range(n)]


def random_tree(rng: random.Random, n: int, costs: str = "unit") -> WeightedTree:
    edges = prufer_decode(n, [rng.randrange(n) for _ in range(max(0, n - 2))])
    values = unit_costs(n) if costs == "unit" else random_costs(rng, n)
    return build_tree(n, edges, values)


def chain_edges(attach: int, start: int, length: int) -> list[tuple[int, int]]:
    edges = []
    prev = attach
    for v in range(start, start + length):
        edges.append((prev, v))
        prev = v
    return edges


def spider(leg_lengths, costs=None) -> WeightedTree:
    """Center 0 with one bare chain per entry of ``leg_lengths``."""
    edges = []
    nxt = 1
    for length in leg_lengths:
        edges.extend(chain_edges(0, nxt, length))
        nxt += length
    n = nxt
    return build_tree(n, edges, costs if costs is not None else unit_costs(n))


# --- steered builders for the coverage buckets -------------------------------

def steered_tiny(rng: random.Random) -> WeightedTree:
    n = rng.choice((1, 2))
    return build_tree(n, [(0, 1)] if n == 2 else [], random_costs(rng, n))


def steered_path(rng: random.Random) -> WeightedTree:
    n = rng.randint(3, 14)
    return build_tree(n, [(i, i + 1) for i in range(n - 1)], random_costs(rng, n))


def steered_single_small_core(rng: random.Random) -> WeightedTree:
    # Degree-3 center, bare legs, at least one short: the only core is small.
    lengths = [1, rng.randint(1, 5), rng.randint(2, 5)]
    rng.shuffle(lengths)
    n = 1 + sum(lengths)
    return spider(lengths, random_costs(rng, n))


def steered_two_small_cores(rng: random.Random) -> WeightedTree:
    # Two degree-3 branch vertices joined by a path, each with two bare legs,
    # each owning a short one.
    mid = rng.randint(0, 3)
    len_a = rng.randint(1, 3)
    len_b = rng.randint(1, 3)
    edges = [(0, 1)]
    edges.extend(chain_edges(0, 2, len_a))
    nxt = 2 + len_a
    prev = 0
    for _ in range(mid):
        edges.append((prev, nxt))
        prev = nxt
        nxt += 1
    v = nxt
    edges.append((prev, v))
    edges.append((v, v + 1))
    nxt = v + 2
    edges.extend(chain_edges(v, nxt, len_b))
    n = nxt + len_b
    return build_tree(n, edges, random_costs(rng, n))


def steered_modified_leg(rng: random.Random) -> WeightedTree:
    # A main core (two long bare legs) whose third branch leads to a small
    # core: that branch is a modified leg.
    len1 = rng.randint(2, 3)
    len2 = rng.randint(2, 3)
    path = rng.randint(0, 2)  # vertices strictly between the two cores
    inner_short = 1
    inner_other = rng.randint(1, 2)
    edges = chain_edges(0, 1, len1)
    nxt = 1 + len1
    edges.extend(chain_edges(0, nxt, len2))
    nxt += len2
    prev = 0
    for _ in range(path):
        edges.append((prev, nxt))
        prev = nxt
        nxt += 1
    s = nxt
    edges.append((prev, s))
    nxt += 1
    edges.extend(chain_edges(s, nxt, inner_short))
    nxt += inner_short
    edges.extend(chain_edges(s, nxt, inner_other))
    n = nxt + inner_other
    return build_tree(n, edges, random_costs(rng, n))


def steered_minor_single_gleg(rng: random.Random) -> WeightedTree:
    # A degree-3 core with one bare leg whose other two branches both hold a
    # regular core: exactly one g-leg, so the middle core is minor.
    own = rng.randint(1, 2)
    edges = chain_edges(0, 1, own)
    nxt = 1 + own
    for _ in range(2):
        center = nxt
        edges.append((0, center))
        nxt += 1
        for _ in range(3):
            edges.append((center, nxt))
            nxt += 1
    return build_tree(nxt, edges, random_costs(rng, nxt))


def steered_minor_degree4(rng: random.Random) -> WeightedTree:
    # Degree-4 core with one short and one long bare leg; its other two
    # branches hold regular cores, so the degree->=4 clause makes it minor.
    long_len = rng.randint(2, 3)
    edges = [(0, 1)]
    nxt = 2
    edges.extend(chain_edges(0, nxt, long_len))
    nxt += long_len
    for _ in range(2):
        center = nxt
        edges.append((0, center))
        nxt += 1
        for _ in range(3):
            edges.append((center, nxt))
            nxt += 1
    return build_tree(nxt, edges, random_costs(rng, nxt))


# --- independent exhaustive minimizer ----------------------------------------

def enumeration_min(tree: WeightedTree, model) -> tuple[tuple[int, ...], Fraction]:
    """Minimum-cost valid set by plain subset enumeration + verify_landmark."""
    best = None
    vertices = range(tree.n)
    for size in range(tree.n + 1):
        for combo in combinations(vertices, size):
            if not verify_landmark(tree, combo, model, max_violations=1).valid:
                continue
            cost = sum((tree.costs[v] for v in combo), Fraction(0))
            key = (cost, combo)
            if best is None or key < best:
                best = key
    assert best is not None, "no valid landmark set at all"
    return best[1], best[0]


# --- pinned fixture trees -----------------------------------------------------

@pytest.fixture
def star4() -> WeightedTree:
    return build_tree(4, [(0, 1), (0, 2), (0, 3)], unit_costs(4))


@pytest.fixture
def spider222() -> WeightedTree:
    return spider((2, 2, 2))


@pytest.fixture
def path5() -> WeightedTree:
    return build_tree(5, [(0, 1), (1, 2), (2, 3), (3, 4)], unit_costs(5))


@pytest.fixture
def t_mod() -> WeightedTree:
    # Main core 0 with long legs (1,2) and (3,4) and a modified leg: path
    # vertex 5, small core 6, whose own legs are the leaves 7 and 8.
    edges = [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6), (6, 7), (6, 8)]
    return build_tree(9, edges, unit_costs(9))


@pytest.fixture
def t_minor1() -> WeightedTree:
    # Minor core 0 (single short leg 1) between two main star centers 2 and 6.
    edges = [(0, 1), (0, 2), (2, 3), (2, 4), (2, 5), (0, 6), (6, 7), (6, 8), (6, 9)]
    return build_tree(10, edges, unit_costs(10))


@pytest.fixture
def caterpillar6() -> WeightedTree:
    # Spine 0-1-2-3 with leaves 4 on 1 and 5 on 2: two adjacent small cores.
    edges = [(0, 1), (1, 2), (2, 3), (1, 4), (2, 5)]
    return build_tree(6, edges, unit_costs(6))
