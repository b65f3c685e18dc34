"""Independent brute-force oracles used to verify the real solvers.

Everything here is deliberately naive: full enumeration with no shortcuts,
so a solver and its oracle never share a code path.
"""

from __future__ import annotations

from itertools import combinations, permutations

from approxlab import MetricInstance, WeightedGraph


def brute_force_vertex_cover(graph: WeightedGraph) -> tuple[int, ...]:
    """Lexicographically smallest minimum cover by subset enumeration."""
    pairs = graph.edge_pairs()
    for size in range(graph.n + 1):
        for combo in combinations(range(graph.n), size):
            members = set(combo)
            if all(u in members or v in members for u, v in pairs):
                return combo
    raise AssertionError("unreachable: the full vertex set always covers")


def is_cover(graph: WeightedGraph, cover) -> bool:
    members = set(cover)
    return all(u in members or v in members for u, v in graph.edge_pairs())


def brute_force_spanning_tree_cost(graph: WeightedGraph) -> float | None:
    """Minimum spanning-tree cost by trying every edge subset of size n-1."""
    n = graph.n
    if n == 1:
        return 0.0
    best = None
    for subset in combinations(graph.edges, n - 1):
        reach = {0}
        frontier = True
        while frontier:
            frontier = False
            for u, v, _ in subset:
                if (u in reach) != (v in reach):
                    reach.update((u, v))
                    frontier = True
        if len(reach) == n:
            cost = sum(w for _, _, w in subset)
            if best is None or cost < best:
                best = cost
    return best


def brute_force_tsp_cost(metric: MetricInstance) -> float:
    """Optimal tour cost over all (n-1)! orders with vertex 0 fixed."""
    n = metric.n
    if n == 1:
        return 0.0
    cost = metric.cost
    best = float("inf")
    for tail in permutations(range(1, n)):
        order = (0, *tail)
        total = sum(cost[order[i]][order[(i + 1) % n]] for i in range(n))
        best = min(best, total)
    return best


def brute_force_hamiltonian(graph: WeightedGraph) -> bool:
    if graph.n < 3:
        return False
    adj = [set() for _ in range(graph.n)]
    for u, v, _ in graph.edges:
        adj[u].add(v)
        adj[v].add(u)
    for tail in permutations(range(1, graph.n)):
        order = (0, *tail)
        if all(order[(i + 1) % graph.n] in adj[order[i]] for i in range(graph.n)):
            return True
    return False


def brute_force_subset_sum(values, target: int) -> int:
    best = 0
    for size in range(len(values) + 1):
        for combo in combinations(values, size):
            total = sum(combo)
            if total <= target:
                best = max(best, total)
    return best


def brute_force_knapsack(items, capacity: int) -> int:
    best = 0
    n = len(items)
    for mask in range(1 << n):
        value = weight = 0
        for i in range(n):
            if mask >> i & 1:
                value += items[i][0]
                weight += items[i][1]
        if weight <= capacity:
            best = max(best, value)
    return best
