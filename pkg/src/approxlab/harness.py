"""Empirical approximation-ratio experiments.

Seeded generators produce instances per problem kind; a batch run solves
each with an approximation algorithm and its exact oracle, records the
ratio max(approx/exact, exact/approx) against the proven bound, and
summarizes.  Identical (config, algorithm) inputs always reproduce the
same records byte for byte.
"""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass
from typing import Any

from .errors import ApproxLabError, InvalidInstanceError
from .instances import (
    Instance,
    euclidean_metric,
    make_graph,
    make_knapsack,
    make_subset_sum,
)
from .registry import get_algorithm, run_algorithm

RATIO_TOLERANCE = 1e-9


def approximation_ratio(approx_value: float, exact_value: float) -> float:
    """max(C/C*, C*/C), symmetric and >= 1; (0, 0) counts as 1.

    A zero on exactly one side is a defect in the caller's pairing, not
    an infinite ratio, and is rejected.
    """
    if approx_value < 0 or exact_value < 0:
        raise ValueError("ratio inputs must be nonnegative")
    if approx_value == 0 and exact_value == 0:
        return 1.0
    if approx_value == 0 or exact_value == 0:
        raise ValueError(
            f"one-sided zero: approx={approx_value}, exact={exact_value}"
        )
    return max(approx_value / exact_value, exact_value / approx_value)


@dataclass(frozen=True)
class GeneratorConfig:
    """Seeded instance-generation recipe.

    Unused fields for a problem kind are simply ignored, so one config
    document type serves all five kinds.
    """

    problem: str
    count: int
    seed: int
    n_min: int = 1
    n_max: int = 8
    edge_probability: float = 0.5
    graph_shape: str = "gnp"  # or "path"
    connected: bool = False
    box: float = 100.0  # Euclidean point-cloud extent
    value_max: int = 100
    weight_max: int = 100

    def validate(self) -> "GeneratorConfig":
        problems = {"vertex_cover", "tsp", "subset_sum", "knapsack", "hamiltonian"}
        if self.problem not in problems:
            raise InvalidInstanceError(f"unknown problem kind {self.problem!r}")
        if self.count < 1:
            raise InvalidInstanceError(f"count must be >= 1, got {self.count}")
        if self.n_min > self.n_max:
            raise InvalidInstanceError(f"empty size range [{self.n_min},{self.n_max}]")
        floor = {"tsp": 1, "subset_sum": 0, "knapsack": 0}.get(self.problem, 1)
        if self.n_min < floor:
            raise InvalidInstanceError(f"n_min must be >= {floor} for {self.problem}")
        if not 0 <= self.edge_probability <= 1:
            raise InvalidInstanceError("edge_probability must be in [0,1]")
        if self.graph_shape not in ("gnp", "path"):
            raise InvalidInstanceError(f"unknown graph shape {self.graph_shape!r}")
        if self.value_max < 1 or self.weight_max < 1:
            raise InvalidInstanceError("value ranges must be nonempty")
        if self.box <= 0:
            raise InvalidInstanceError("box must be positive")
        needs_connectivity = self.connected or self.problem == "hamiltonian"
        if (
            needs_connectivity
            and self.graph_shape == "gnp"
            and self.edge_probability == 0
            and self.n_max > 1
        ):
            raise InvalidInstanceError(
                "edge probability 0 cannot satisfy the connectivity requirement"
            )
        return self


def _random_graph(config: GeneratorConfig, rng: random.Random) -> Instance:
    n = rng.randint(config.n_min, config.n_max)
    if config.graph_shape == "path":
        return make_graph(n, [(i, i + 1, 1.0) for i in range(n - 1)])
    edges: set[tuple[int, int]] = set()
    if config.connected or config.problem == "hamiltonian":
        # random spanning-tree skeleton first, then extra sampled edges
        for v in range(1, n):
            edges.add((rng.randrange(v), v))
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < config.edge_probability:
                edges.add((u, v))
    return make_graph(n, [(u, v, 1.0) for u, v in sorted(edges)])


def _generate_one(config: GeneratorConfig, rng: random.Random) -> Instance:
    if config.problem in ("vertex_cover", "hamiltonian"):
        return _random_graph(config, rng)
    if config.problem == "tsp":
        n = rng.randint(config.n_min, config.n_max)
        points = [(rng.uniform(0, config.box), rng.uniform(0, config.box)) for _ in range(n)]
        return euclidean_metric(points)
    if config.problem == "subset_sum":
        n = rng.randint(config.n_min, config.n_max)
        values = [rng.randint(1, config.value_max) for _ in range(n)]
        total = sum(values)
        return make_subset_sum(values, rng.randint(1, max(1, total)))
    n = rng.randint(config.n_min, config.n_max)
    items = [
        (rng.randint(1, config.value_max), rng.randint(1, config.weight_max))
        for _ in range(n)
    ]
    total_weight = sum(w for _, w in items)
    return make_knapsack(items, rng.randint(0, max(0, total_weight // 2)))


def instance_id(config: GeneratorConfig, index: int) -> str:
    return f"{config.problem}-{config.seed}-{index:04d}"


def generate_instances(config: GeneratorConfig) -> list[Instance]:
    """Deterministic for a given (config, seed): each instance draws from
    its own stream keyed by (seed, index), so lists are stable prefixes."""
    config.validate()
    out = []
    for index in range(config.count):
        rng = random.Random(f"{config.seed}:{index}")
        out.append(_generate_one(config, rng))
    return out


@dataclass(frozen=True)
class RatioRecord:
    problem: str
    instance_id: str
    seed: int | None  # None for one-off compares on explicit files
    approx_value: float
    exact_value: float
    ratio: float
    bound: float
    within_bound: bool

    def to_document(self) -> dict[str, Any]:
        return {
            "problem": self.problem,
            "instance_id": self.instance_id,
            "seed": self.seed,
            "approx": self.approx_value,
            "exact": self.exact_value,
            "ratio": round(self.ratio, 6),
            "bound": self.bound,
            "within_bound": self.within_bound,
        }


def make_record(
    problem: str,
    iid: str,
    seed: int | None,
    approx_value: float,
    exact_value: float,
    bound: float,
) -> RatioRecord:
    ratio = approximation_ratio(approx_value, exact_value)
    return RatioRecord(
        problem=problem,
        instance_id=iid,
        seed=seed,
        approx_value=approx_value,
        exact_value=exact_value,
        ratio=ratio,
        bound=bound,
        within_bound=ratio <= bound + RATIO_TOLERANCE,
    )


def run_batch(
    config: GeneratorConfig,
    algorithm: str,
    *,
    epsilon: float | None = None,
) -> tuple[list[RatioRecord], dict[str, Any]]:
    """One record per generated instance, in instance_id order, plus a
    summary.  A within_bound=False record is a defect signal."""
    spec = get_algorithm(algorithm)
    if spec.oracle is None:
        raise InvalidInstanceError(
            f"{algorithm} is an exact algorithm; batches need an approximation"
        )
    if spec.problem != config.problem:
        raise InvalidInstanceError(
            f"config generates {config.problem} instances but {algorithm} solves {spec.problem}"
        )
    records = []
    for index, instance in enumerate(generate_instances(config)):
        iid = instance_id(config, index)
        try:
            approx = run_algorithm(algorithm, instance, epsilon=epsilon)
            exact = run_algorithm(spec.oracle, instance)
        except ApproxLabError as exc:
            exc.args = (f"instance {iid}: {exc}",)
            raise
        records.append(
            make_record(
                config.problem, iid, config.seed,
                approx.value, exact.value, spec.bound(epsilon),
            )
        )
    ratios = [r.ratio for r in records]
    summary = {
        "problem": config.problem,
        "algorithm": algorithm,
        "oracle": spec.oracle,
        "epsilon": epsilon,
        "count": len(records),
        "mean_ratio": round(sum(ratios) / len(ratios), 6),
        "max_ratio": round(max(ratios), 6),
        "violations": sum(1 for r in records if not r.within_bound),
        "bound": spec.bound(epsilon),
        "config": asdict(config),
    }
    return records, summary


CSV_HEADER = "problem,instance_id,seed,approx,exact,ratio,bound,within_bound"


def _csv_number(x: float) -> str:
    if isinstance(x, int):
        return str(x)
    return repr(x)


def records_to_csv(records: list[RatioRecord]) -> str:
    lines = [CSV_HEADER]
    for r in records:
        lines.append(
            ",".join(
                (
                    r.problem,
                    r.instance_id,
                    str(r.seed),
                    _csv_number(r.approx_value),
                    _csv_number(r.exact_value),
                    f"{r.ratio:.6f}",
                    _csv_number(r.bound),
                    "true" if r.within_bound else "false",
                )
            )
        )
    return "\n".join(lines) + "\n"
