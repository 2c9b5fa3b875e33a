"""Tree construction, validation, and distance basics."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from treedim import (
    IndexOutOfRange,
    NegativeCost,
    NotATree,
    bfs_distances,
    build_tree,
    prufer_decode,
    total_cost,
)

from conftest import unit_costs


def test_build_tree_basic():
    t = build_tree(3, [(1, 0), (1, 2)], [Fraction(1), Fraction(1, 2), Fraction(3)])
    assert t.n == 3
    assert t.edges == ((0, 1), (1, 2))  # normalized and sorted
    assert t.adjacency == ((1,), (0, 2), (1,))
    assert t.degree(1) == 2
    assert t.costs[1] == Fraction(1, 2)


def test_single_vertex_tree():
    t = build_tree(1, [], [Fraction(7)])
    assert t.n == 1
    assert t.edges == ()
    assert t.adjacency == ((),)


def test_scaled_costs_share_denominator():
    t = build_tree(3, [(0, 1), (1, 2)],
                   [Fraction(1, 2), Fraction(3, 4), Fraction(2)])
    assert t.cost_denominator == 4
    assert t.scaled_costs == [2, 3, 8]
    assert all(Fraction(s, 4) == c for s, c in zip(t.scaled_costs, t.costs))


def test_rejects_wrong_edge_count():
    with pytest.raises(NotATree):
        build_tree(3, [(0, 1)], unit_costs(3))


def test_rejects_cycle():
    with pytest.raises(NotATree):
        build_tree(4, [(0, 1), (1, 2), (2, 0)], unit_costs(4))


def test_rejects_self_loop():
    with pytest.raises(NotATree):
        build_tree(2, [(0, 0)], unit_costs(2))


def test_rejects_duplicate_edge():
    with pytest.raises(NotATree):
        build_tree(3, [(0, 1), (1, 0)], unit_costs(3))


def test_rejects_out_of_range_endpoint():
    with pytest.raises(IndexOutOfRange):
        build_tree(3, [(0, 1), (1, 3)], unit_costs(3))


def test_rejects_negative_cost():
    with pytest.raises(NegativeCost) as exc:
        build_tree(2, [(0, 1)], [Fraction(1), Fraction(-1)])
    assert "1" in str(exc.value)


def test_rejects_float_costs():
    with pytest.raises(TypeError):
        build_tree(2, [(0, 1)], [1.0, 2.0])


def test_rejects_wrong_cost_count():
    with pytest.raises(ValueError):
        build_tree(3, [(0, 1), (1, 2)], unit_costs(2))


def test_bfs_distances_on_path():
    t = build_tree(5, [(i, i + 1) for i in range(4)], unit_costs(5))
    assert bfs_distances(t, 0) == [0, 1, 2, 3, 4]
    assert bfs_distances(t, 2) == [2, 1, 0, 1, 2]


def test_total_cost_sums_exactly():
    t = build_tree(3, [(0, 1), (1, 2)],
                   [Fraction(1, 2), Fraction(1, 4), Fraction(1)])
    assert total_cost(t, {0, 1}) == Fraction(3, 4)
    assert total_cost(t, ()) == 0


@given(st.data())
def test_bfs_matches_edge_relaxation(data):
    n = data.draw(st.integers(2, 16))
    seq = data.draw(st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2))
    t = build_tree(n, prufer_decode(n, seq), unit_costs(n))
    src = data.draw(st.integers(0, n - 1))
    dist = bfs_distances(t, src)
    assert dist[src] == 0
    # Every edge spans exactly one level.
    assert all(abs(dist[a] - dist[b]) == 1 for a, b in t.edges)
    # Every non-source vertex has a neighbor one level closer.
    for v in range(n):
        if v != src:
            assert min(dist[w] for w in t.adjacency[v]) == dist[v] - 1


def test_prufer_decode_is_bijective_at_n5():
    seen = set()
    for a in range(5):
        for b in range(5):
            for c in range(5):
                edges = prufer_decode(5, [a, b, c])
                seen.add(tuple(sorted(tuple(sorted(e)) for e in edges)))
    assert len(seen) == 125  # Cayley: 5^3 distinct labeled trees


def test_prufer_decode_rejects_bad_length():
    with pytest.raises(ValueError):
        prufer_decode(5, [0, 1])


def test_random_trees_are_valid_trees():
    rng = random.Random(7)
    for _ in range(50):
        n = rng.randint(1, 30)
        seq = [rng.randrange(n) for _ in range(max(0, n - 2))]
        t = build_tree(n, prufer_decode(n, seq), unit_costs(n))
        assert t.n == n and len(t.edges) == n - 1
