"""0/1 knapsack solvers: exact dynamic program, greedy 2-approximation,
and a value-scaling FPTAS.

The exact solver tabulates over weights (pseudo-polynomial in capacity);
the FPTAS tabulates over scaled values, keeping feasibility exact while
rounding only the objective.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import CapExceededError
from .instances import KnapsackInstance
from .trace import TraceRecorder

EXACT_CELL_CAP = 10**8


@dataclass(frozen=True)
class KnapsackSolution:
    chosen: tuple[int, ...]
    total_value: int
    total_weight: int

    def to_certificate(self) -> dict:
        return {"items": list(self.chosen)}


def _totals(instance: KnapsackInstance, chosen: list[int]) -> KnapsackSolution:
    value = sum(instance.items[i][0] for i in chosen)
    weight = sum(instance.items[i][1] for i in chosen)
    return KnapsackSolution(chosen=tuple(sorted(chosen)), total_value=value, total_weight=weight)


def knapsack_exact(
    instance: KnapsackInstance,
    cell_cap: int = EXACT_CELL_CAP,
    trace: TraceRecorder | None = None,
) -> KnapsackSolution:
    """Maximum total value; the witness prefers excluding the
    highest-index item on ties."""
    n = instance.n
    capacity = instance.capacity
    if n * (capacity + 1) > cell_cap:
        raise CapExceededError(
            f"DP needs {n * (capacity + 1)} cells; cap is {cell_cap}", cap=cell_cap
        )

    rows = [[0] * (capacity + 1)]
    for i, (value, weight) in enumerate(instance.items):
        prev = rows[-1]
        row = prev.copy()
        for w in range(weight, capacity + 1):
            cand = prev[w - weight] + value
            if cand > row[w]:
                row[w] = cand
        rows.append(row)
        if trace is not None:
            trace.emit("dp-cell-set", item=i, capacity=capacity, value=row[capacity])

    chosen: list[int] = []
    w = capacity
    for i in range(n - 1, -1, -1):
        # equal cells mean item i is unnecessary: exclusion wins ties
        if rows[i + 1][w] == rows[i][w]:
            continue
        chosen.append(i)
        w -= instance.items[i][1]
    solution = _totals(instance, chosen)
    if trace is not None:
        for i in solution.chosen:
            trace.emit("item-taken", index=i, value=instance.items[i][0])
    return solution


def knapsack_greedy(
    instance: KnapsackInstance, trace: TraceRecorder | None = None
) -> KnapsackSolution:
    """Better of the density-ordered greedy fill and the single most
    valuable fitting item; total value is at least half the optimum."""
    capacity = instance.capacity
    fitting = [i for i in range(instance.n) if instance.items[i][1] <= capacity]
    if not fitting:
        return KnapsackSolution(chosen=(), total_value=0, total_weight=0)

    # density descending, ties to the lower index
    by_density = sorted(
        fitting, key=lambda i: (-(instance.items[i][0] / instance.items[i][1]), i)
    )
    prefix: list[int] = []
    room = capacity
    for i in by_density:
        weight = instance.items[i][1]
        if weight <= room:
            prefix.append(i)
            room -= weight
    prefix_solution = _totals(instance, prefix)

    best_single = min(fitting, key=lambda i: (-instance.items[i][0], i))
    single_solution = _totals(instance, [best_single])

    solution = (
        prefix_solution
        if prefix_solution.total_value >= single_solution.total_value
        else single_solution
    )
    if trace is not None:
        for i in solution.chosen:
            trace.emit("item-taken", index=i, value=instance.items[i][0])
    return solution


def knapsack_fptas(
    instance: KnapsackInstance,
    epsilon: float,
    trace: TraceRecorder | None = None,
) -> KnapsackSolution:
    """Total value at least (1 - eps) times the optimum.

    Values are scaled down by mu = eps * v_max / n and a min-weight table
    runs over scaled-value sums; weights are never scaled, so the chosen
    set is always feasible.
    """
    if not 0 < epsilon < 1:
        raise ValueError(f"epsilon must be in (0,1), got {epsilon}")
    capacity = instance.capacity
    fitting = [i for i in range(instance.n) if instance.items[i][1] <= capacity]
    if not fitting:
        return KnapsackSolution(chosen=(), total_value=0, total_weight=0)

    n = len(fitting)
    v_max = max(instance.items[i][0] for i in fitting)
    mu = epsilon * v_max / n
    if mu <= 1:
        # the unscaled table is already polynomial-size here, and keeping
        # exact values makes the answer optimal, not just (1-eps)-optimal
        scaled = [instance.items[i][0] for i in fitting]
    else:
        scaled = [math.floor(instance.items[i][0] / mu) for i in fitting]
    total_scaled = sum(scaled)

    INF = float("inf")
    # rows[k][s]: minimum weight achieving scaled value exactly s with the
    # first k fitting items
    rows = [[0] + [INF] * total_scaled]
    for k, i in enumerate(fitting):
        weight = instance.items[i][1]
        sv = scaled[k]
        prev = rows[-1]
        row = prev.copy()
        if sv == 0:
            # zero scaled value never improves a min-weight cell
            rows.append(row)
            continue
        for s in range(sv, total_scaled + 1):
            cand = prev[s - sv] + weight
            if cand < row[s]:
                row[s] = cand
        rows.append(row)
        if trace is not None:
            trace.emit("dp-cell-set", item=i, scaled_value=sv, best=row[total_scaled])

    last = rows[-1]
    best_s = max(s for s in range(total_scaled + 1) if last[s] <= capacity)

    chosen: list[int] = []
    s = best_s
    for k in range(n - 1, -1, -1):
        if rows[k + 1][s] == rows[k][s]:
            continue
        chosen.append(fitting[k])
        s -= scaled[k]
    solution = _totals(instance, chosen)
    if trace is not None:
        for i in solution.chosen:
            trace.emit("item-taken", index=i, value=instance.items[i][0])
    return solution
