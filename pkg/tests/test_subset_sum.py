from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from oracles import brute_force_subset_sum

from approxlab import (
    CapExceededError,
    approx_subset_sum,
    exact_subset_sum,
    make_subset_sum,
    merge_lists,
    shift_list,
    trim,
)

sorted_lists = st.lists(st.integers(0, 10**6), max_size=30, unique=True).map(sorted)


# --- merge_lists --------------------------------------------------------------


def test_merge_collapses_duplicate_zero():
    assert merge_lists([0], [0, 3]) == [0, 3]


def test_merge_interleaves():
    assert merge_lists([0, 2], [1, 3]) == [0, 1, 2, 3]


@settings(max_examples=50)
@given(sorted_lists)
def test_merge_idempotent(a):
    assert merge_lists(a, a) == a


@settings(max_examples=50)
@given(sorted_lists, sorted_lists)
def test_merge_is_sorted_union(a, b):
    out = merge_lists(a, b)
    assert out == sorted(set(a) | set(b))
    assert len(out) <= len(a) + len(b)


def test_merge_rejects_unsorted():
    with pytest.raises(ValueError, match="not strictly ascending"):
        merge_lists([2, 1], [0])


# --- shift_list ---------------------------------------------------------------


def test_shift_examples():
    assert shift_list([0], 5) == [5]
    assert shift_list([0, 1, 4], 2) == [2, 3, 6]
    assert shift_list([3, 9], 0) == [3, 9]


# --- trim ---------------------------------------------------------------------


def test_trim_delta_zero_keeps_all():
    assert trim([1, 2, 3], 0) == [1, 2, 3]


def test_trim_worked_example():
    data = [10, 11, 12, 15, 20, 21, 22, 23, 24, 29]
    assert trim(data, 0.1) == [10, 12, 15, 20, 23, 29]


def test_trim_zero_never_represents_a_positive_value():
    assert trim([0, 1], 0.5) == [0, 1]


def test_trim_rejects_bad_delta():
    with pytest.raises(ValueError):
        trim([1], 1.0)
    with pytest.raises(ValueError):
        trim([1], -0.1)


@settings(max_examples=80)
@given(sorted_lists, st.floats(0, 0.99))
def test_trim_representation_condition(a, delta):
    kept = trim(a, delta)
    kept_set = set(kept)
    assert kept == sorted(kept_set)
    if a:
        assert a[0] in kept_set  # the head always survives
    position = 0
    for y in a:
        if y in kept_set:
            continue
        # some kept z represents y: z <= y <= z * (1 + delta)
        assert any(z <= y <= z * (1 + delta) for z in kept)


# --- exact_subset_sum ---------------------------------------------------------


def test_empty_set_gives_zero():
    result = exact_subset_sum(make_subset_sum([], 10))
    assert result.value == 0
    assert result.indices == ()


def test_small_example_with_witness():
    inst = make_subset_sum([1, 2, 3], 4)
    result = exact_subset_sum(inst)
    assert result.value == 4
    assert result.indices == (0, 2)
    assert [inst.values[i] for i in result.indices] == [1, 3]


def test_clrs_style_instance():
    result = exact_subset_sum(make_subset_sum([104, 102, 201, 101], 308))
    assert result.value == 307


def test_witness_sums_to_value():
    rng = random.Random(41)
    for _ in range(100):
        n = rng.randint(0, 10)
        values = [rng.randint(1, 500) for _ in range(n)]
        inst = make_subset_sum(values, rng.randint(1, max(1, sum(values))))
        result = exact_subset_sum(inst)
        assert result.value == brute_force_subset_sum(inst.values, inst.target)
        assert sum(inst.values[i] for i in result.indices) == result.value


def test_list_cap_guards_exponential_growth():
    inst = make_subset_sum([2**i for i in range(20)], 2**20)
    with pytest.raises(CapExceededError):
        exact_subset_sum(inst, list_cap=1000)


# --- approx_subset_sum ----------------------------------------------------------


def test_empty_set_any_epsilon():
    assert approx_subset_sum(make_subset_sum([], 5), 0.5).value == 0


def test_epsilon_out_of_range():
    inst = make_subset_sum([1], 1)
    for eps in (0.0, 1.0, -1.0):
        with pytest.raises(ValueError):
            approx_subset_sum(inst, eps)


def test_clrs_style_instance_epsilon_04():
    # independent simulation of the stated trim rule, using set-union
    # merging instead of the implementation's two-pointer merge
    inst = make_subset_sum([104, 102, 201, 101], 308)
    delta = 0.4 / (2 * inst.n)
    current = [0]
    for x in inst.values:
        merged = sorted(set(current) | {v + x for v in current})
        kept = [merged[0]]
        for y in merged[1:]:
            if y > kept[-1] * (1 + delta):
                kept.append(y)
        current = [v for v in kept if v <= inst.target]
    assert current[-1] == 302  # frozen from this simulation

    result = approx_subset_sum(inst, 0.4)
    assert result.value == 302
    assert result.indices is None
    opt = exact_subset_sum(inst).value
    assert opt / 1.4 <= result.value <= opt


def test_tiny_epsilon_recovers_exact_value():
    rng = random.Random(43)
    for _ in range(30):
        n = rng.randint(1, 10)
        values = [rng.randint(1, 50) for _ in range(n)]
        inst = make_subset_sum(values, rng.randint(1, sum(values)))
        # delta small enough that no two achievable sums merge
        assert approx_subset_sum(inst, 1e-6).value == exact_subset_sum(inst).value


def test_every_list_value_is_an_achievable_sum():
    from itertools import combinations

    from approxlab import traced_solve

    rng = random.Random(49)
    for _ in range(20):
        n = rng.randint(1, 9)
        values = [rng.randint(1, 200) for _ in range(n)]
        inst = make_subset_sum(values, rng.randint(1, sum(values)))
        achievable = {
            sum(c) for size in range(n + 1) for c in combinations(inst.values, size)
        }
        for algorithm, eps in (("subset-sum-exact", None), ("subset-sum-fptas", 0.3)):
            _, log = traced_solve(inst, algorithm, epsilon=eps)
            for event in log.events:
                if event.kind in ("list-merged", "list-trimmed"):
                    assert set(event.payload["values"]) <= achievable


def test_fptas_guarantee_randomized():
    rng = random.Random(47)
    for _ in range(120):
        n = rng.randint(0, 15)
        values = [rng.randint(1, 10**4) for _ in range(n)]
        inst = make_subset_sum(values, rng.randint(1, max(1, sum(values))))
        opt = exact_subset_sum(inst).value
        for eps in (0.1, 0.4, 0.8):
            z = approx_subset_sum(inst, eps).value
            assert opt / (1 + eps) <= z <= opt
