"""Shape generators: structure, determinism, and cost schemes."""

from __future__ import annotations

from fractions import Fraction

import pytest

from treedim import CaseTag, classify, make_tree
from treedim.generators import (
    caterpillar_edges,
    double_spider_edges,
    spider_edges,
)


def test_path_kind():
    t = make_tree("path", 6)
    assert t.edges == tuple((i, i + 1) for i in range(5))
    assert classify(t).case_tag is CaseTag.PATH


def test_star_kind():
    t = make_tree("star", 4)
    assert classify(t).case_tag is CaseTag.SINGLE_SMALL_CORE
    t = make_tree("star", 9)
    assert classify(t).case_tag is CaseTag.HAS_REGULAR_CORE


def test_spider_seven_is_three_legs_of_two():
    assert sorted(spider_edges(7)) == sorted(
        [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])


def test_caterpillar_six_matches_pinned_shape():
    assert sorted(caterpillar_edges(6)) == sorted(
        [(0, 1), (1, 2), (2, 3), (1, 4), (2, 5)])


def test_caterpillar_cases_by_size():
    assert classify(make_tree("caterpillar", 6)).case_tag is CaseTag.TWO_SMALL_CORES
    for n in (8, 12, 30, 101):
        assert classify(make_tree("caterpillar", n)).case_tag is CaseTag.HAS_REGULAR_CORE


def test_double_spider_is_two_small_cores():
    for n in (6, 7, 10, 15, 24):
        t = make_tree("double-spider", n)
        assert t.n == n
        assert classify(t).case_tag is CaseTag.TWO_SMALL_CORES


def test_double_spider_minimum_size():
    with pytest.raises(ValueError):
        double_spider_edges(5)


def test_random_kind_is_seed_deterministic():
    a = make_tree("random", 40, seed=9, costs="random")
    b = make_tree("random", 40, seed=9, costs="random")
    assert a.edges == b.edges and a.costs == b.costs
    c = make_tree("random", 40, seed=10, costs="random")
    assert a.edges != c.edges or a.costs != c.costs


def test_random_costs_land_in_contract_range():
    t = make_tree("random", 60, seed=3, costs="random")
    for c in t.costs:
        assert 0 <= c <= 100
        assert c.denominator in (1, 2, 4)


def test_unit_costs_default():
    t = make_tree("spider", 7)
    assert all(c == Fraction(1) for c in t.costs)


def test_file_costs():
    values = [Fraction(2), Fraction(1, 2), Fraction(3)]
    t = make_tree("path", 3, costs="file", cost_values=values)
    assert t.costs == values
    with pytest.raises(ValueError):
        make_tree("path", 3, costs="file")


def test_unknown_kind_and_scheme():
    with pytest.raises(ValueError):
        make_tree("wheel", 5)
    with pytest.raises(ValueError):
        make_tree("path", 5, costs="gaussian")


def test_all_kinds_produce_n_vertices():
    for kind in ("path", "star", "spider", "caterpillar", "random"):
        for n in (1, 2, 3, 7, 20):
            t = make_tree(kind, n, seed=1)
            assert t.n == n and len(t.edges) == n - 1
    for n in (6, 9, 20):
        assert make_tree("double-spider", n).n == n
