"""Approximation-algorithm workbench.

Solvers for vertex cover, metric TSP, subset sum, knapsack, and
Hamiltonian-cycle search, each paired with a desk-scale exact oracle, a
seeded ratio harness, and replayable execution traces.
"""

from .errors import (
    ApproxLabError,
    BoundViolationError,
    CapExceededError,
    DisconnectedGraphError,
    InvalidInstanceError,
    MetricViolationError,
    TraceReplayError,
    UnknownAlgorithmError,
)
from .graphs import (
    SpanningTree,
    check_triangle_inequality,
    find_hamiltonian_cycle,
    greedy_maximal_matching,
    mst_prim,
    preorder_walk,
)
from .harness import (
    GeneratorConfig,
    RatioRecord,
    approximation_ratio,
    generate_instances,
    records_to_csv,
    run_batch,
)
from .instances import (
    Instance,
    KnapsackInstance,
    MetricInstance,
    SolveOutcome,
    SubsetSumInstance,
    WeightedGraph,
    euclidean_metric,
    make_graph,
    make_knapsack,
    make_metric,
    make_subset_sum,
    parse_instance,
    read_instance,
    validate_instance,
    write_instance,
)
from .knapsack import KnapsackSolution, knapsack_exact, knapsack_fptas, knapsack_greedy
from .registry import ALGORITHMS, get_algorithm, run_algorithm
from .subset_sum import (
    SubsetSumResult,
    approx_subset_sum,
    exact_subset_sum,
    merge_lists,
    shift_list,
    trim,
)
from .trace import TraceEvent, TraceLog, TraceRecorder, parse_trace, replay_trace, traced_solve
from .tsp import Tour, approx_tsp_tour, evaluate_tour, held_karp
from .vertex_cover import VertexCoverSolution, approx_vertex_cover, exact_vertex_cover

__version__ = "0.1.0"
