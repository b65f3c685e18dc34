"""Shared graph primitives: Prim's MST, preorder walk, triangle-inequality
check, greedy maximal matching, and exhaustive Hamiltonian-cycle search.

All operations are pure functions of their inputs.  Every tie is broken
by vertex id so runs are reproducible and traceable.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapExceededError, DisconnectedGraphError
from .instances import MetricInstance, WeightedGraph
from .trace import TraceRecorder

TRIANGLE_TOLERANCE = 1e-9
HAMILTONIAN_CAP = 20

_INF = float("inf")


@dataclass(frozen=True)
class SpanningTree:
    """Rooted spanning tree as a child -> parent map (root excluded)."""

    root: int
    parent: dict[int, int]
    total_cost: float

    @property
    def n(self) -> int:
        return len(self.parent) + 1


def _cost_rows(instance: MetricInstance | WeightedGraph) -> list[list[float]]:
    if isinstance(instance, MetricInstance):
        return [list(row) for row in instance.cost]
    rows = [[_INF] * instance.n for _ in range(instance.n)]
    for u, v, w in instance.edges:
        rows[u][v] = w
        rows[v][u] = w
    return rows


def mst_prim(
    instance: MetricInstance | WeightedGraph,
    root: int = 0,
    trace: TraceRecorder | None = None,
) -> SpanningTree:
    """Minimum spanning tree from ``root`` via array-based Prim (O(n^2)).

    Ties between equal-cost frontier edges go to the smallest
    (new-vertex id, tree-vertex id) pair, which makes the tree, and every
    trace built on it, deterministic.
    """
    n = instance.n
    if not 0 <= root < n:
        raise ValueError(f"root {root} out of range [0,{n})")
    cost = _cost_rows(instance)

    in_tree = [False] * n
    best = [_INF] * n
    best_parent = [-1] * n
    best[root] = 0.0
    parent: dict[int, int] = {}
    total = 0.0

    for _ in range(n):
        pick = -1
        for v in range(n):
            if not in_tree[v] and best[v] < _INF and (pick == -1 or best[v] < best[pick]):
                pick = v
        if pick == -1:
            raise DisconnectedGraphError("graph is disconnected; no spanning tree exists")
        in_tree[pick] = True
        if pick != root:
            parent[pick] = best_parent[pick]
            total += best[pick]
            if trace is not None:
                trace.emit("mst-edge-added", u=best_parent[pick], v=pick, w=best[pick])
        row = cost[pick]
        for v in range(n):
            if in_tree[v]:
                continue
            w = row[v]
            if w < best[v] or (w == best[v] and pick < best_parent[v]):
                best[v] = w
                best_parent[v] = pick

    return SpanningTree(root=root, parent=parent, total_cost=total)


def preorder_walk(tree: SpanningTree, trace: TraceRecorder | None = None) -> list[int]:
    """Visit order starting at the root, children in ascending vertex id."""
    children: dict[int, list[int]] = {}
    for child, parent in tree.parent.items():
        children.setdefault(parent, []).append(child)
    for kids in children.values():
        kids.sort(reverse=True)  # stack pops smallest first

    order: list[int] = []
    stack = [tree.root]
    while stack:
        v = stack.pop()
        order.append(v)
        if trace is not None:
            trace.emit("preorder-visit", vertex=v)
        stack.extend(children.get(v, ()))
    return order


def check_triangle_inequality(
    metric: MetricInstance, tolerance: float = TRIANGLE_TOLERANCE
) -> tuple[int, int, int] | None:
    """None if cost[u][v] <= cost[u][w] + cost[w][v] + tolerance for all
    triples, else the lexicographically first violating (u, w, v)."""
    n = metric.n
    cost = metric.cost
    for u in range(n):
        row_u = cost[u]
        for w in range(n):
            uw = row_u[w]
            row_w = cost[w]
            for v in range(n):
                if row_u[v] > uw + row_w[v] + tolerance:
                    return (u, w, v)
    return None


def greedy_maximal_matching(
    graph: WeightedGraph, trace: TraceRecorder | None = None
) -> list[tuple[int, int]]:
    """Maximal matching built by scanning edges in canonical sorted order."""
    matched = [False] * graph.n
    matching: list[tuple[int, int]] = []
    for u, v, _ in graph.edges:
        if matched[u] or matched[v]:
            continue
        matched[u] = True
        matched[v] = True
        matching.append((u, v))
        if trace is not None:
            trace.emit("edge-picked", u=u, v=v)
    return matching


def find_hamiltonian_cycle(
    graph: WeightedGraph,
    cap: int = HAMILTONIAN_CAP,
    trace: TraceRecorder | None = None,
) -> list[int] | None:
    """Exhaustive backtracking search for a Hamiltonian cycle.

    Branches in ascending vertex id from vertex 0, so the first cycle
    found is the lexicographically smallest starting at 0.  Returns None
    when no cycle exists (always for n < 3).
    """
    n = graph.n
    if n > cap:
        raise CapExceededError(
            f"instance has {n} vertices; exhaustive search cap is {cap}", cap=cap
        )
    if n < 3:
        return None

    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v, _ in graph.edges:
        adj[u].add(v)
        adj[v].add(u)

    path = [0]
    on_path = [False] * n
    on_path[0] = True
    if trace is not None:
        trace.emit("preorder-visit", vertex=0)

    def extend() -> bool:
        if len(path) == n:
            return 0 in adj[path[-1]]
        last = path[-1]
        for v in sorted(adj[last]):
            if on_path[v]:
                continue
            path.append(v)
            on_path[v] = True
            if trace is not None:
                trace.emit("preorder-visit", vertex=v)
            if extend():
                return True
            path.pop()
            on_path[v] = False
            if trace is not None:
                trace.emit("backtrack", vertex=v)
        return False

    if extend():
        return list(path)
    if trace is not None:
        trace.emit("backtrack", vertex=0)
    return None
