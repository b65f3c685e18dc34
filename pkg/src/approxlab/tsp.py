"""Metric TSP: the MST-preorder 2-approximation, a Held-Karp exact
oracle, and tour evaluation.

The approximation refuses non-metric inputs because its guarantee only
holds under the triangle inequality; ``force=True`` runs anyway and marks
the outcome as unguaranteed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapExceededError, MetricViolationError
from .graphs import check_triangle_inequality, mst_prim, preorder_walk
from .instances import MetricInstance
from .trace import TraceRecorder

HELD_KARP_CAP = 18


@dataclass(frozen=True)
class Tour:
    order: tuple[int, ...]
    cost: float

    def to_certificate(self) -> dict:
        return {"order": list(self.order)}


def evaluate_tour(metric: MetricInstance, order: list[int] | tuple[int, ...]) -> float:
    """Closed-cycle cost; invariant under rotation and reversal."""
    n = metric.n
    if sorted(order) != list(range(n)):
        raise ValueError(f"order {order!r} is not a permutation of 0..{n - 1}")
    if n == 1:
        return 0.0
    cost = metric.cost
    total = 0.0
    for i in range(n):
        total += cost[order[i]][order[(i + 1) % n]]
    return total


def approx_tsp_tour(
    metric: MetricInstance,
    root: int = 0,
    force: bool = False,
    trace: TraceRecorder | None = None,
) -> Tour:
    """Preorder walk of the Prim MST; cost at most twice the optimum when
    the triangle inequality holds.  Runs in O(n^2)."""
    if not 0 <= root < metric.n:
        raise ValueError(f"root {root} out of range [0,{metric.n})")
    if not force:
        violation = check_triangle_inequality(metric)
        if violation is not None:
            raise MetricViolationError(violation)
    tree = mst_prim(metric, root, trace=trace)
    order = preorder_walk(tree, trace=trace)
    return Tour(order=tuple(order), cost=evaluate_tour(metric, order))


def held_karp(
    metric: MetricInstance,
    cap: int = HELD_KARP_CAP,
    trace: TraceRecorder | None = None,
) -> Tour:
    """Exact minimum-cost tour via the bitmask dynamic program.

    DP ties prefer the lower vertex id, so reconstruction is
    deterministic.  Desk-scale only: O(n^2 2^n) time.
    """
    n = metric.n
    if n < 1:
        raise ValueError("need at least one vertex")
    if n > cap:
        raise CapExceededError(f"instance has {n} vertices; Held-Karp cap is {cap}", cap=cap)
    if n == 1:
        if trace is not None:
            trace.emit("preorder-visit", vertex=0)
        return Tour(order=(0,), cost=0.0)

    cost = [list(row) for row in metric.cost]
    size = 1 << n
    INF = float("inf")
    # dp[mask * n + j]: cheapest path from 0 covering mask, ending at j
    dp = [INF] * (size * n)
    parent = [-1] * (size * n)
    dp[(1 << 0) * n + 0] = 0.0

    sample_stride = max(1, (size * n) // 64)
    cells_set = 0

    for mask in range(size):
        if not mask & 1:
            continue
        base = mask * n
        for j in range(n):
            cur = dp[base + j]
            if cur == INF:
                continue
            row = cost[j]
            for k in range(n):
                if mask >> k & 1:
                    continue
                nmask = mask | (1 << k)
                idx = nmask * n + k
                cand = cur + row[k]
                # strict < keeps the smallest predecessor j on ties
                if cand < dp[idx]:
                    dp[idx] = cand
                    parent[idx] = j
                    cells_set += 1
                    if trace is not None and cells_set % sample_stride == 0:
                        trace.emit("dp-cell-set", mask=nmask, vertex=k, cost=cand)

    full = size - 1
    best_cost = INF
    best_end = -1
    for j in range(1, n):
        total = dp[full * n + j] + cost[j][0]
        if total < best_cost:
            best_cost = total
            best_end = j

    order_rev = []
    mask, j = full, best_end
    while j != -1:
        order_rev.append(j)
        prev = parent[mask * n + j]
        mask ^= 1 << j
        j = prev
    order = tuple(reversed(order_rev))
    if trace is not None:
        for v in order:
            trace.emit("preorder-visit", vertex=v)
    return Tour(order=order, cost=best_cost)
