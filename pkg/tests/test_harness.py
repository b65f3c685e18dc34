from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from approxlab import (
    GeneratorConfig,
    InvalidInstanceError,
    approximation_ratio,
    check_triangle_inequality,
    generate_instances,
    records_to_csv,
    run_batch,
)
from approxlab.harness import CSV_HEADER

values = st.floats(min_value=0, max_value=1e9, allow_nan=False)
positive = st.floats(min_value=1e-6, max_value=1e9, allow_nan=False)


# --- approximation_ratio --------------------------------------------------------


def test_ratio_examples():
    assert approximation_ratio(5, 5) == 1.0
    assert approximation_ratio(2, 1) == 2.0
    assert approximation_ratio(0, 0) == 1.0


def test_one_sided_zero_is_an_error():
    with pytest.raises(ValueError, match="one-sided zero"):
        approximation_ratio(3, 0)
    with pytest.raises(ValueError, match="one-sided zero"):
        approximation_ratio(0, 3)


def test_negative_inputs_rejected():
    with pytest.raises(ValueError):
        approximation_ratio(-1, 2)


@settings(max_examples=100)
@given(positive, positive)
def test_ratio_symmetric_and_at_least_one(a, b):
    r = approximation_ratio(a, b)
    assert r == approximation_ratio(b, a)
    assert r >= 1.0


@settings(max_examples=50)
@given(values)
def test_ratio_identity_at_equality(a):
    assert approximation_ratio(a, a) == 1.0


# --- generate_instances ---------------------------------------------------------


def test_same_config_same_instances():
    config = GeneratorConfig(problem="vertex_cover", count=10, seed=99, n_min=2, n_max=8)
    assert generate_instances(config) == generate_instances(config)


def test_different_seed_differs():
    a = GeneratorConfig(problem="subset_sum", count=5, seed=1, n_min=3, n_max=6)
    b = GeneratorConfig(problem="subset_sum", count=5, seed=2, n_min=3, n_max=6)
    assert generate_instances(a) != generate_instances(b)


def test_euclidean_instances_pass_triangle_check():
    config = GeneratorConfig(problem="tsp", count=15, seed=5, n_min=1, n_max=9)
    for metric in generate_instances(config):
        assert check_triangle_inequality(metric) is None


def test_count_zero_rejected():
    with pytest.raises(InvalidInstanceError, match="count"):
        GeneratorConfig(problem="tsp", count=0, seed=1).validate()


def test_empty_size_range_rejected():
    with pytest.raises(InvalidInstanceError, match="size range"):
        GeneratorConfig(problem="tsp", count=1, seed=1, n_min=5, n_max=4).validate()


def test_zero_edge_probability_with_connectivity_infeasible():
    config = GeneratorConfig(
        problem="hamiltonian", count=1, seed=1, n_min=3, n_max=5, edge_probability=0.0
    )
    with pytest.raises(InvalidInstanceError, match="connectivity"):
        config.validate()


def test_path_shape_generates_paths():
    config = GeneratorConfig(
        problem="vertex_cover", count=5, seed=7, n_min=3, n_max=3, graph_shape="path"
    )
    for g in generate_instances(config):
        assert g.edge_pairs() == [(0, 1), (1, 2)]


def test_connected_graphs_are_connected():
    from approxlab import mst_prim

    config = GeneratorConfig(
        problem="vertex_cover", count=10, seed=3, n_min=2, n_max=9,
        edge_probability=0.1, connected=True,
    )
    for g in generate_instances(config):
        mst_prim(g, 0)  # raises DisconnectedGraphError if the repair failed


# --- run_batch -------------------------------------------------------------------


def test_p3_batch_every_ratio_exactly_two():
    config = GeneratorConfig(
        problem="vertex_cover", count=8, seed=11, n_min=3, n_max=3, graph_shape="path"
    )
    records, summary = run_batch(config, "vertex-cover-approx")
    assert all(r.ratio == 2.0 for r in records)
    assert all(r.within_bound for r in records)
    assert summary["max_ratio"] == 2.0
    assert summary["violations"] == 0


def test_three_city_tsp_batch_all_optimal():
    config = GeneratorConfig(problem="tsp", count=10, seed=13, n_min=3, n_max=3)
    records, summary = run_batch(config, "tsp-approx")
    assert all(r.ratio == pytest.approx(1.0) for r in records)
    assert summary["bound"] == 2.0


def test_fptas_batch_respects_bound():
    config = GeneratorConfig(
        problem="subset_sum", count=25, seed=17, n_min=1, n_max=10, value_max=500
    )
    records, summary = run_batch(config, "subset-sum-fptas", epsilon=0.4)
    assert summary["bound"] == pytest.approx(1.4)
    assert summary["max_ratio"] <= 1.4 + 1e-9
    assert summary["violations"] == 0


def test_batch_rejects_exact_algorithms():
    config = GeneratorConfig(problem="tsp", count=1, seed=1)
    with pytest.raises(InvalidInstanceError, match="exact"):
        run_batch(config, "tsp-held-karp")


def test_batch_rejects_problem_mismatch():
    config = GeneratorConfig(problem="tsp", count=1, seed=1)
    with pytest.raises(InvalidInstanceError, match="solves"):
        run_batch(config, "vertex-cover-approx")


def test_batch_records_in_instance_id_order_and_deterministic():
    config = GeneratorConfig(
        problem="knapsack", count=12, seed=19, n_min=0, n_max=8, value_max=60, weight_max=40
    )
    records, _ = run_batch(config, "knapsack-greedy")
    ids = [r.instance_id for r in records]
    assert ids == sorted(ids)
    again, _ = run_batch(config, "knapsack-greedy")
    assert records_to_csv(records) == records_to_csv(again)


def test_csv_shape():
    config = GeneratorConfig(
        problem="vertex_cover", count=3, seed=23, n_min=2, n_max=5
    )
    records, _ = run_batch(config, "vertex-cover-approx")
    text = records_to_csv(records)
    lines = text.strip().split("\n")
    assert lines[0] == CSV_HEADER
    assert len(lines) == 4
    for line in lines[1:]:
        fields = line.split(",")
        assert len(fields) == 8
        float(fields[5])  # ratio parses
        assert fields[7] in ("true", "false")
