from __future__ import annotations

import random

import pytest
from oracles import brute_force_vertex_cover, is_cover

from approxlab import (
    CapExceededError,
    approx_vertex_cover,
    exact_vertex_cover,
    greedy_maximal_matching,
    make_graph,
)
from test_graphs import complete_graph, random_graph


def path_graph(n: int):
    return make_graph(n, [(i, i + 1, 1.0) for i in range(n - 1)])


def test_no_edges_empty_cover():
    solution = approx_vertex_cover(make_graph(4, []))
    assert solution.cover == ()
    assert solution.size == 0


def test_single_edge_takes_both_endpoints():
    solution = approx_vertex_cover(make_graph(2, [(0, 1, 1.0)]))
    assert solution.cover == (0, 1)


def test_p3_ratio_is_exactly_two():
    g = path_graph(3)
    approx = approx_vertex_cover(g)
    exact = exact_vertex_cover(g)
    assert approx.size == 2
    assert approx.cover == (0, 1)
    assert exact.size == 1
    assert exact.cover == (1,)
    assert approx.size == 2 * exact.size


def test_exact_triangle_lex_smallest():
    solution = exact_vertex_cover(complete_graph(3))
    assert solution.size == 2
    assert solution.cover == (0, 1)


def test_exact_star_center_only():
    g = make_graph(5, [(0, i, 1.0) for i in range(1, 5)])
    solution = exact_vertex_cover(g)
    assert solution.cover == (0,)


def test_exact_empty_graph():
    solution = exact_vertex_cover(make_graph(3, []))
    assert solution.cover == ()


def test_exact_cap():
    with pytest.raises(CapExceededError):
        exact_vertex_cover(make_graph(30, []), cap=25)


def test_exact_matches_enumeration_and_is_lex_smallest():
    rng = random.Random(23)
    for _ in range(80):
        g = random_graph(rng, rng.randint(1, 9), rng.uniform(0.1, 0.8), connected=False)
        expected = brute_force_vertex_cover(g)
        solution = exact_vertex_cover(g)
        assert solution.cover == expected


def test_two_times_bound_and_validity_randomized():
    rng = random.Random(29)
    for _ in range(150):
        g = random_graph(rng, rng.randint(1, 12), rng.uniform(0.05, 0.9), connected=False)
        approx = approx_vertex_cover(g)
        exact = exact_vertex_cover(g)
        assert is_cover(g, approx.cover)
        assert is_cover(g, exact.cover)
        assert approx.size <= 2 * exact.size


def test_approx_cover_is_matching_endpoints():
    rng = random.Random(31)
    for _ in range(60):
        g = random_graph(rng, rng.randint(1, 11), rng.uniform(0.1, 0.9), connected=False)
        approx = approx_vertex_cover(g)
        matching = greedy_maximal_matching(g)
        assert approx.size == 2 * len(matching)
        assert set(approx.cover) == {v for e in matching for v in e}


def test_exact_cover_is_minimal():
    rng = random.Random(37)
    for _ in range(40):
        g = random_graph(rng, rng.randint(2, 10), rng.uniform(0.2, 0.8), connected=False)
        solution = exact_vertex_cover(g)
        for leave_out in solution.cover:
            reduced = set(solution.cover) - {leave_out}
            assert not is_cover(g, reduced) or not g.edges
