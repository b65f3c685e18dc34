"""Algorithm catalog: stable kebab-case names bound to solver functions.

The trace format, the CLI, and the HTTP endpoints all key on these names.
Every entry knows its problem kind, which instance kind it consumes, its
proven ratio bound, and which exact oracle to compare against.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .errors import InvalidInstanceError, UnknownAlgorithmError
from .graphs import check_triangle_inequality, find_hamiltonian_cycle
from .instances import (
    Instance,
    KnapsackInstance,
    MetricInstance,
    SolveOutcome,
    SubsetSumInstance,
    WeightedGraph,
)
from .knapsack import knapsack_exact, knapsack_fptas, knapsack_greedy
from .subset_sum import approx_subset_sum, exact_subset_sum
from .trace import TraceRecorder
from .tsp import approx_tsp_tour, held_karp
from .vertex_cover import approx_vertex_cover, exact_vertex_cover


@dataclass(frozen=True)
class AlgorithmSpec:
    name: str
    problem: str
    instance_kind: str
    is_exact: bool
    needs_epsilon: bool
    oracle: str | None
    bound: Callable[[float | None], float]
    run: Callable[..., SolveOutcome]


def _expect(instance: Instance, kind: type, name: str) -> None:
    if not isinstance(instance, kind):
        raise InvalidInstanceError(
            f"algorithm {name} needs a {kind.kind} instance, got {instance.kind}"
        )


def _check_epsilon(name: str, needs: bool, epsilon: float | None) -> None:
    if needs and epsilon is None:
        raise InvalidInstanceError(f"algorithm {name} requires --epsilon")
    if not needs and epsilon is not None:
        raise InvalidInstanceError(f"algorithm {name} does not take --epsilon")


def _run_vc_approx(instance, *, epsilon=None, root=None, force=False, trace=None):
    _expect(instance, WeightedGraph, "vertex-cover-approx")
    solution = approx_vertex_cover(instance, trace=trace)
    return SolveOutcome(
        problem="vertex_cover",
        algorithm="vertex-cover-approx",
        value=solution.size,
        certificate=solution.to_certificate(),
        is_exact=False,
        bound=2.0,
    )


def _run_vc_exact(instance, *, epsilon=None, root=None, force=False, trace=None):
    _expect(instance, WeightedGraph, "vertex-cover-exact")
    solution = exact_vertex_cover(instance, trace=trace)
    return SolveOutcome(
        problem="vertex_cover",
        algorithm="vertex-cover-exact",
        value=solution.size,
        certificate=solution.to_certificate(),
        is_exact=True,
        bound=1.0,
    )


def _run_tsp_approx(instance, *, epsilon=None, root=None, force=False, trace=None):
    _expect(instance, MetricInstance, "tsp-approx")
    root = 0 if root is None else root
    tour = approx_tsp_tour(instance, root=root, force=force, trace=trace)
    guaranteed = True
    bound: float | None = 2.0
    if force and check_triangle_inequality(instance) is not None:
        guaranteed = False
        bound = None
    return SolveOutcome(
        problem="tsp",
        algorithm="tsp-approx",
        value=tour.cost,
        certificate=tour.to_certificate(),
        is_exact=False,
        bound=bound,
        guaranteed=guaranteed,
    )


def _run_tsp_exact(instance, *, epsilon=None, root=None, force=False, trace=None):
    _expect(instance, MetricInstance, "tsp-held-karp")
    tour = held_karp(instance, trace=trace)
    return SolveOutcome(
        problem="tsp",
        algorithm="tsp-held-karp",
        value=tour.cost,
        certificate=tour.to_certificate(),
        is_exact=True,
        bound=1.0,
    )


def _run_ss_exact(instance, *, epsilon=None, root=None, force=False, trace=None):
    _expect(instance, SubsetSumInstance, "subset-sum-exact")
    result = exact_subset_sum(instance, trace=trace)
    return SolveOutcome(
        problem="subset_sum",
        algorithm="subset-sum-exact",
        value=result.value,
        certificate=result.to_certificate(instance),
        is_exact=True,
        bound=1.0,
    )


def _run_ss_fptas(instance, *, epsilon=None, root=None, force=False, trace=None):
    _expect(instance, SubsetSumInstance, "subset-sum-fptas")
    result = approx_subset_sum(instance, epsilon, trace=trace)
    return SolveOutcome(
        problem="subset_sum",
        algorithm="subset-sum-fptas",
        value=result.value,
        certificate=None,
        is_exact=False,
        bound=1.0 + epsilon,
    )


def _run_ks_exact(instance, *, epsilon=None, root=None, force=False, trace=None):
    _expect(instance, KnapsackInstance, "knapsack-exact")
    solution = knapsack_exact(instance, trace=trace)
    return SolveOutcome(
        problem="knapsack",
        algorithm="knapsack-exact",
        value=solution.total_value,
        certificate=solution.to_certificate(),
        is_exact=True,
        bound=1.0,
    )


def _run_ks_greedy(instance, *, epsilon=None, root=None, force=False, trace=None):
    _expect(instance, KnapsackInstance, "knapsack-greedy")
    solution = knapsack_greedy(instance, trace=trace)
    return SolveOutcome(
        problem="knapsack",
        algorithm="knapsack-greedy",
        value=solution.total_value,
        certificate=solution.to_certificate(),
        is_exact=False,
        bound=2.0,
    )


def _run_ks_fptas(instance, *, epsilon=None, root=None, force=False, trace=None):
    _expect(instance, KnapsackInstance, "knapsack-fptas")
    solution = knapsack_fptas(instance, epsilon, trace=trace)
    return SolveOutcome(
        problem="knapsack",
        algorithm="knapsack-fptas",
        value=solution.total_value,
        certificate=solution.to_certificate(),
        is_exact=False,
        bound=1.0 / (1.0 - epsilon),
    )


def _run_ham_exact(instance, *, epsilon=None, root=None, force=False, trace=None):
    _expect(instance, WeightedGraph, "hamiltonian-exact")
    cycle = find_hamiltonian_cycle(instance, trace=trace)
    if cycle is None:
        return SolveOutcome(
            problem="hamiltonian",
            algorithm="hamiltonian-exact",
            value=0,
            certificate=None,
            is_exact=True,
            bound=1.0,
        )
    return SolveOutcome(
        problem="hamiltonian",
        algorithm="hamiltonian-exact",
        value=1,
        certificate={"order": cycle},
        is_exact=True,
        bound=1.0,
    )


ALGORITHMS: dict[str, AlgorithmSpec] = {
    spec.name: spec
    for spec in [
        AlgorithmSpec(
            "vertex-cover-approx", "vertex_cover", "graph", False, False,
            "vertex-cover-exact", lambda eps: 2.0, _run_vc_approx,
        ),
        AlgorithmSpec(
            "vertex-cover-exact", "vertex_cover", "graph", True, False,
            None, lambda eps: 1.0, _run_vc_exact,
        ),
        AlgorithmSpec(
            "tsp-approx", "tsp", "metric", False, False,
            "tsp-held-karp", lambda eps: 2.0, _run_tsp_approx,
        ),
        AlgorithmSpec(
            "tsp-held-karp", "tsp", "metric", True, False,
            None, lambda eps: 1.0, _run_tsp_exact,
        ),
        AlgorithmSpec(
            "subset-sum-exact", "subset_sum", "subset_sum", True, False,
            None, lambda eps: 1.0, _run_ss_exact,
        ),
        AlgorithmSpec(
            "subset-sum-fptas", "subset_sum", "subset_sum", False, True,
            "subset-sum-exact", lambda eps: 1.0 + eps, _run_ss_fptas,
        ),
        AlgorithmSpec(
            "knapsack-exact", "knapsack", "knapsack", True, False,
            None, lambda eps: 1.0, _run_ks_exact,
        ),
        AlgorithmSpec(
            "knapsack-greedy", "knapsack", "knapsack", False, False,
            "knapsack-exact", lambda eps: 2.0, _run_ks_greedy,
        ),
        AlgorithmSpec(
            "knapsack-fptas", "knapsack", "knapsack", False, True,
            "knapsack-exact", lambda eps: 1.0 / (1.0 - eps), _run_ks_fptas,
        ),
        AlgorithmSpec(
            "hamiltonian-exact", "hamiltonian", "graph", True, False,
            None, lambda eps: 1.0, _run_ham_exact,
        ),
    ]
}

PROBLEM_KINDS = ["vertex_cover", "tsp", "subset_sum", "knapsack", "hamiltonian"]


def get_algorithm(name: str) -> AlgorithmSpec:
    spec = ALGORITHMS.get(name)
    if spec is None:
        raise UnknownAlgorithmError(name, sorted(ALGORITHMS))
    return spec


def run_algorithm(
    name: str,
    instance: Instance,
    *,
    epsilon: float | None = None,
    root: int | None = None,
    force: bool = False,
    trace: TraceRecorder | None = None,
) -> SolveOutcome:
    """Dispatch with argument checking shared by the CLI and the server."""
    spec = get_algorithm(name)
    _check_epsilon(name, spec.needs_epsilon, epsilon)
    if root is not None and spec.problem != "tsp":
        raise InvalidInstanceError(f"--root is only meaningful for TSP, not {name}")
    return spec.run(instance, epsilon=epsilon, root=root, force=force, trace=trace)
