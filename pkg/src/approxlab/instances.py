"""Problem-instance types, their validity rules, and on-disk serialization.

Every instance is one JSON document per file.  Serialization is canonical:
keys in a fixed order, graph edges sorted by (u, v) with u < v, subset-sum
sets sorted ascending, so equal instances always produce byte-identical
text.  All types are immutable after validation and safe to share across
concurrent tasks.
"""

from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Union

from .errors import InvalidInstanceError

# Subset-sum arithmetic must stay exact; anything past 63 bits is rejected.
_INT_SUM_LIMIT = 2**63


@dataclass(frozen=True)
class WeightedGraph:
    """Undirected graph on vertices 0..n-1 with nonnegative edge costs.

    Edges are canonicalized to (u, v, w) with u < v and sorted by (u, v).
    """

    n: int
    edges: tuple[tuple[int, int, float], ...]

    kind = "graph"

    def adjacency(self) -> list[dict[int, float]]:
        adj: list[dict[int, float]] = [{} for _ in range(self.n)]
        for u, v, w in self.edges:
            adj[u][v] = w
            adj[v][u] = w
        return adj

    def edge_pairs(self) -> list[tuple[int, int]]:
        return [(u, v) for u, v, _ in self.edges]


@dataclass(frozen=True)
class MetricInstance:
    """Complete cost matrix: symmetric, zero diagonal, nonnegative entries."""

    n: int
    cost: tuple[tuple[float, ...], ...]

    kind = "metric"


@dataclass(frozen=True)
class SubsetSumInstance:
    """Positive integers plus a target; the empty set is legal."""

    values: tuple[int, ...]
    target: int

    kind = "subset_sum"

    @property
    def n(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class KnapsackInstance:
    """Items with positive integer value and weight, nonnegative capacity."""

    items: tuple[tuple[int, int], ...]
    capacity: int

    kind = "knapsack"

    @property
    def n(self) -> int:
        return len(self.items)


Instance = Union[WeightedGraph, MetricInstance, SubsetSumInstance, KnapsackInstance]


@dataclass(frozen=True)
class SolveOutcome:
    """Solution value plus certificate and algorithm metadata.

    ``certificate`` is a small JSON-able dict whose shape depends on the
    problem (cover vertex list, tour order, chosen indices).  It is None
    for algorithms that prove a value without a witness.  ``bound`` is the
    proven worst-case ratio; ``guaranteed`` is False when the caller
    forced a run outside the guarantee's precondition.
    """

    problem: str
    algorithm: str
    value: float
    certificate: dict[str, Any] | None
    is_exact: bool
    bound: float | None = None
    guaranteed: bool = True

    def to_document(self) -> dict[str, Any]:
        return {
            "problem": self.problem,
            "algorithm": self.algorithm,
            "value": self.value,
            "certificate": self.certificate,
            "is_exact": self.is_exact,
            "bound": self.bound,
            "guaranteed": self.guaranteed,
        }


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise InvalidInstanceError(message)


def _check_int(value: Any, name: str) -> int:
    # bool is an int subclass but never a legal quantity here
    _require(isinstance(value, int) and not isinstance(value, bool), f"{name} must be an integer")
    return value


def validate_instance(instance: Instance) -> Instance:
    """Return the instance iff every type invariant holds.

    Raises InvalidInstanceError naming the first violated invariant and
    the offending field.
    """
    if isinstance(instance, WeightedGraph):
        _require(instance.n >= 0, f"vertex count must be nonnegative, got {instance.n}")
        seen: set[tuple[int, int]] = set()
        for u, v, w in instance.edges:
            _require(
                0 <= u < instance.n and 0 <= v < instance.n,
                f"edge ({u},{v}) has a vertex id out of range [0,{instance.n})",
            )
            _require(u != v, f"self-loop at vertex {u}")
            key = (min(u, v), max(u, v))
            _require(key not in seen, f"duplicate edge {{{key[0]},{key[1]}}}")
            seen.add(key)
            _require(
                isinstance(w, (int, float)) and not isinstance(w, bool) and math.isfinite(w),
                f"edge ({u},{v}) cost must be a finite number",
            )
            _require(w >= 0, f"edge ({u},{v}) has negative cost {w}")
        return instance

    if isinstance(instance, MetricInstance):
        _require(instance.n >= 0, f"vertex count must be nonnegative, got {instance.n}")
        _require(
            len(instance.cost) == instance.n,
            f"cost matrix has {len(instance.cost)} rows, expected {instance.n}",
        )
        for i, row in enumerate(instance.cost):
            _require(
                len(row) == instance.n,
                f"cost row {i} has {len(row)} entries, expected {instance.n}",
            )
            for j, c in enumerate(row):
                _require(
                    isinstance(c, (int, float)) and not isinstance(c, bool) and math.isfinite(c),
                    f"cost[{i}][{j}] must be a finite number",
                )
                _require(c >= 0, f"cost[{i}][{j}] is negative")
        for i in range(instance.n):
            _require(instance.cost[i][i] == 0, f"cost[{i}][{i}] must be zero")
            for j in range(i + 1, instance.n):
                _require(
                    instance.cost[i][j] == instance.cost[j][i],
                    f"asymmetric matrix: cost[{i}][{j}] != cost[{j}][{i}]",
                )
        return instance

    if isinstance(instance, SubsetSumInstance):
        for i, x in enumerate(instance.values):
            _check_int(x, f"set element {i}")
            _require(x >= 1, f"set element {i} must be positive, got {x}")
        _check_int(instance.target, "target")
        _require(instance.target >= 1, f"target must be positive, got {instance.target}")
        _require(
            sum(instance.values) < _INT_SUM_LIMIT,
            "sum of set elements exceeds the 63-bit range",
        )
        return instance

    if isinstance(instance, KnapsackInstance):
        for i, (value, weight) in enumerate(instance.items):
            _check_int(value, f"item {i} value")
            _check_int(weight, f"item {i} weight")
            _require(value >= 1, f"item {i} value must be positive, got {value}")
            _require(weight >= 1, f"item {i} weight must be positive, got {weight}")
        _check_int(instance.capacity, "capacity")
        _require(instance.capacity >= 0, f"capacity must be nonnegative, got {instance.capacity}")
        return instance

    raise InvalidInstanceError(f"unknown instance type {type(instance).__name__}")


def make_graph(n: int, edges: list[tuple[int, int, float]] | list[list[float]]) -> WeightedGraph:
    """Canonicalize (u < v, sorted) and validate a weighted graph."""
    canonical = []
    for e in edges:
        if len(e) != 3:
            raise InvalidInstanceError(f"edge {e!r} must be [u, v, w]")
        u, v, w = e
        u = _check_int(u, "edge endpoint")
        v = _check_int(v, "edge endpoint")
        if u > v:
            u, v = v, u
        canonical.append((u, v, float(w)))
    canonical.sort(key=lambda e: (e[0], e[1]))
    graph = WeightedGraph(n=_check_int(n, "n"), edges=tuple(canonical))
    validate_instance(graph)
    return graph


def make_metric(n: int, cost: list[list[float]]) -> MetricInstance:
    metric = MetricInstance(
        n=_check_int(n, "n"),
        cost=tuple(tuple(float(c) for c in row) for row in cost),
    )
    validate_instance(metric)
    return metric


def make_subset_sum(values: list[int], target: int) -> SubsetSumInstance:
    instance = SubsetSumInstance(values=tuple(sorted(values)), target=target)
    validate_instance(instance)
    return instance


def make_knapsack(items: list[tuple[int, int]] | list[list[int]], capacity: int) -> KnapsackInstance:
    packed = []
    for item in items:
        if len(item) != 2:
            raise InvalidInstanceError(f"item {item!r} must be [value, weight]")
        packed.append((item[0], item[1]))
    instance = KnapsackInstance(items=tuple(packed), capacity=capacity)
    validate_instance(instance)
    return instance


def euclidean_metric(points: list[tuple[float, float]]) -> MetricInstance:
    """Metric from 2D points; always satisfies the triangle inequality."""
    n = len(points)
    cost = [[0.0] * n for _ in range(n)]
    for i in range(n):
        xi, yi = points[i]
        for j in range(i + 1, n):
            xj, yj = points[j]
            d = math.hypot(xi - xj, yi - yj)
            cost[i][j] = cost[j][i] = d
    return make_metric(n, cost)


def parse_instance(text: str) -> Instance:
    """Parse one instance document from text; validates before returning."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInstanceError(f"malformed instance document: {exc}") from None
    if not isinstance(doc, dict):
        raise InvalidInstanceError("instance document must be a JSON object")
    kind = doc.get("kind")
    try:
        if kind == "graph":
            return make_graph(doc["n"], doc["edges"])
        if kind == "metric":
            return make_metric(doc["n"], doc["cost"])
        if kind == "subset_sum":
            return make_subset_sum(doc["set"], doc["t"])
        if kind == "knapsack":
            return make_knapsack(doc["items"], doc["capacity"])
    except KeyError as exc:
        raise InvalidInstanceError(f"missing field {exc} for kind '{kind}'") from None
    except (TypeError, ValueError) as exc:
        raise InvalidInstanceError(f"bad field value: {exc}") from None
    raise InvalidInstanceError(f"unknown problem kind {kind!r}")


def read_instance(source: str | Path) -> Instance:
    """Read an instance from a file path or directly from document text."""
    if isinstance(source, Path):
        return parse_instance(source.read_text(encoding="utf-8"))
    if source.lstrip().startswith("{"):
        return parse_instance(source)
    if not os.path.exists(source):
        raise InvalidInstanceError(f"no such instance file: {source}")
    with open(source, encoding="utf-8") as fh:
        return parse_instance(fh.read())


def _num(x: float) -> float | int:
    # integral floats print as ints so documents stay compact and stable
    if isinstance(x, float) and x.is_integer():
        return int(x)
    return x


def write_instance(instance: Instance) -> str:
    """Canonical single-line document text; read_instance inverts it."""
    validate_instance(instance)
    doc: dict[str, Any]
    if isinstance(instance, WeightedGraph):
        doc = {
            "kind": "graph",
            "n": instance.n,
            "edges": [[u, v, _num(w)] for u, v, w in instance.edges],
        }
    elif isinstance(instance, MetricInstance):
        doc = {
            "kind": "metric",
            "n": instance.n,
            "cost": [[_num(c) for c in row] for row in instance.cost],
        }
    elif isinstance(instance, SubsetSumInstance):
        doc = {"kind": "subset_sum", "set": sorted(instance.values), "t": instance.target}
    else:
        doc = {
            "kind": "knapsack",
            "items": [[v, w] for v, w in instance.items],
            "capacity": instance.capacity,
        }
    return json.dumps(doc, separators=(",", ":"))


def instances_equal(a: Instance, b: Instance) -> bool:
    """Structural equality modulo canonical ordering."""
    return write_instance(a) == write_instance(b)
