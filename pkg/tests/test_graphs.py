from __future__ import annotations

import random

import pytest
from oracles import brute_force_hamiltonian, brute_force_spanning_tree_cost

from approxlab import (
    CapExceededError,
    DisconnectedGraphError,
    check_triangle_inequality,
    euclidean_metric,
    find_hamiltonian_cycle,
    greedy_maximal_matching,
    make_graph,
    make_metric,
    mst_prim,
    preorder_walk,
)
from approxlab.graphs import SpanningTree


def random_graph(rng: random.Random, n: int, p: float, connected: bool):
    edges = set()
    if connected:
        for v in range(1, n):
            edges.add((rng.randrange(v), v))
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < p:
                edges.add((u, v))
    return make_graph(n, [(u, v, rng.uniform(0.5, 10.0)) for u, v in sorted(edges)])


# --- mst_prim ---------------------------------------------------------------


def test_single_vertex_tree():
    metric = make_metric(1, [[0]])
    tree = mst_prim(metric, 0)
    assert tree.parent == {}
    assert tree.total_cost == 0


def test_triangle_mst_from_enumeration():
    metric = make_metric(3, [[0, 1, 3], [1, 0, 2], [3, 2, 0]])
    tree = mst_prim(metric, 0)
    assert tree.total_cost == 3
    assert tree.parent == {1: 0, 2: 1}


def test_tree_shaped_graph_is_its_own_mst():
    g = make_graph(5, [(0, 1, 2.0), (1, 2, 3.0), (1, 3, 1.0), (3, 4, 5.0)])
    tree = mst_prim(g, 0)
    assert tree.total_cost == pytest.approx(11.0)
    assert set(tree.parent.items()) == {(1, 0), (2, 1), (3, 1), (4, 3)}


def test_disconnected_graph_raises():
    g = make_graph(4, [(0, 1, 1.0), (2, 3, 1.0)])
    with pytest.raises(DisconnectedGraphError):
        mst_prim(g, 0)


def test_root_out_of_range():
    with pytest.raises(ValueError):
        mst_prim(make_metric(2, [[0, 1], [1, 0]]), 2)


def test_mst_matches_enumeration_oracle_on_small_graphs():
    rng = random.Random(7)
    checked = 0
    while checked < 60:
        n = rng.randint(2, 7)
        g = random_graph(rng, n, 0.6, connected=True)
        expected = brute_force_spanning_tree_cost(g)
        tree = mst_prim(g, rng.randrange(n))
        assert tree.total_cost == pytest.approx(expected)
        assert len(tree.parent) == n - 1
        checked += 1


def test_mst_is_deterministic_under_cost_ties():
    # all edges cost 1: the tie rule fixes the tree uniquely
    metric = make_metric(4, [[0, 1, 1, 1], [1, 0, 1, 1], [1, 1, 0, 1], [1, 1, 1, 0]])
    tree = mst_prim(metric, 0)
    assert tree.parent == {1: 0, 2: 0, 3: 0}


# --- preorder_walk ----------------------------------------------------------


def test_preorder_single_vertex():
    assert preorder_walk(SpanningTree(root=0, parent={}, total_cost=0.0)) == [0]


def test_preorder_star_children_ascend():
    tree = SpanningTree(root=0, parent={1: 0, 2: 0, 3: 0}, total_cost=3.0)
    assert preorder_walk(tree) == [0, 1, 2, 3]


def test_preorder_chain():
    tree = SpanningTree(root=0, parent={2: 1, 1: 0}, total_cost=2.0)
    assert preorder_walk(tree) == [0, 1, 2]


def test_preorder_is_permutation():
    rng = random.Random(3)
    for _ in range(40):
        n = rng.randint(1, 9)
        g = random_graph(rng, n, 0.5, connected=True)
        walk = preorder_walk(mst_prim(g, 0))
        assert sorted(walk) == list(range(n))
        # every non-root vertex appears after its parent
        position = {v: i for i, v in enumerate(walk)}
        tree = mst_prim(g, 0)
        assert all(position[c] > position[p] for c, p in tree.parent.items())


# --- check_triangle_inequality ----------------------------------------------


def test_all_ones_metric_ok():
    metric = make_metric(3, [[0, 1, 1], [1, 0, 1], [1, 1, 0]])
    assert check_triangle_inequality(metric) is None


def test_violation_returns_first_triple():
    metric = make_metric(3, [[0, 10, 1], [10, 0, 1], [1, 1, 0]])
    assert check_triangle_inequality(metric) == (0, 2, 1)


def test_euclidean_metrics_pass():
    rng = random.Random(11)
    for _ in range(20):
        pts = [(rng.uniform(0, 100), rng.uniform(0, 100)) for _ in range(rng.randint(1, 8))]
        assert check_triangle_inequality(euclidean_metric(pts)) is None


# --- greedy_maximal_matching --------------------------------------------------


def test_matching_empty_graph():
    assert greedy_maximal_matching(make_graph(3, [])) == []


def test_matching_single_edge():
    assert greedy_maximal_matching(make_graph(2, [(0, 1, 1.0)])) == [(0, 1)]


def test_matching_path_takes_first_edge():
    g = make_graph(3, [(0, 1, 1.0), (1, 2, 1.0)])
    assert greedy_maximal_matching(g) == [(0, 1)]


def test_matching_is_matching_and_maximal():
    rng = random.Random(5)
    for _ in range(60):
        g = random_graph(rng, rng.randint(1, 10), 0.4, connected=False)
        matching = greedy_maximal_matching(g)
        used = [v for e in matching for v in e]
        assert len(used) == len(set(used))  # pairwise non-adjacent
        matched = set(used)
        for u, v in g.edge_pairs():  # no addable edge remains
            assert u in matched or v in matched


# --- find_hamiltonian_cycle ---------------------------------------------------


def complete_graph(n: int):
    return make_graph(n, [(u, v, 1.0) for u in range(n) for v in range(u + 1, n)])


def petersen_graph():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return make_graph(10, [(u, v, 1.0) for u, v in outer + inner + spokes])


def test_k4_has_cycle():
    cycle = find_hamiltonian_cycle(complete_graph(4))
    assert cycle == [0, 1, 2, 3]


def test_trees_have_no_cycle():
    g = make_graph(5, [(0, 1, 1.0), (1, 2, 1.0), (1, 3, 1.0), (3, 4, 1.0)])
    assert find_hamiltonian_cycle(g) is None


def test_small_n_returns_none():
    assert find_hamiltonian_cycle(make_graph(2, [(0, 1, 1.0)])) is None


def test_petersen_graph_has_no_cycle():
    assert find_hamiltonian_cycle(petersen_graph()) is None


def test_cap_enforced():
    with pytest.raises(CapExceededError):
        find_hamiltonian_cycle(complete_graph(6), cap=5)


def test_agrees_with_permutation_oracle():
    rng = random.Random(13)
    for _ in range(50):
        n = rng.randint(3, 8)
        g = random_graph(rng, n, rng.uniform(0.2, 0.9), connected=False)
        cycle = find_hamiltonian_cycle(g)
        assert (cycle is not None) == brute_force_hamiltonian(g)
        if cycle is not None:
            adj = {frozenset(e) for e in g.edge_pairs()}
            assert sorted(cycle) == list(range(n))
            for i in range(n):
                assert frozenset((cycle[i], cycle[(i + 1) % n])) in adj
