"""Minimum vertex cover: matching-based 2-approximation and an exact
branch-and-bound oracle.

The approximation repeatedly takes the smallest remaining edge in
canonical order, adds both endpoints, and discards every edge they touch.
Its cover is exactly the endpoint set of a greedy maximal matching, which
is what pins the size to at most twice the optimum.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapExceededError
from .instances import WeightedGraph
from .trace import TraceRecorder

EXACT_COVER_CAP = 25


@dataclass(frozen=True)
class VertexCoverSolution:
    cover: tuple[int, ...]
    size: int

    def to_certificate(self) -> dict:
        return {"cover": list(self.cover)}


def is_vertex_cover(graph: WeightedGraph, cover: set[int] | tuple[int, ...]) -> bool:
    members = set(cover)
    return all(u in members or v in members for u, v, _ in graph.edges)


def approx_vertex_cover(
    graph: WeightedGraph, trace: TraceRecorder | None = None
) -> VertexCoverSolution:
    """Cover of size at most twice the optimum, deterministic under the
    canonical (u, v) edge order."""
    covered = [False] * graph.n
    cover: list[int] = []
    remaining = list(graph.edges)

    while remaining:
        u, v, _ = remaining[0]
        if trace is not None:
            trace.emit("edge-picked", u=u, v=v)
            trace.emit("vertex-added-to-cover", vertex=u)
            trace.emit("vertex-added-to-cover", vertex=v)
        covered[u] = True
        covered[v] = True
        cover.extend((u, v))
        kept = []
        removed = []
        for edge in remaining[1:]:
            if covered[edge[0]] or covered[edge[1]]:
                removed.append([edge[0], edge[1]])
            else:
                kept.append(edge)
        if trace is not None:
            trace.emit("edges-removed", edges=removed)
        remaining = kept

    return VertexCoverSolution(cover=tuple(sorted(cover)), size=len(cover))


def _greedy_matching_size(edges: list[tuple[int, int]], n: int) -> int:
    matched = [False] * n
    size = 0
    for u, v in edges:
        if not matched[u] and not matched[v]:
            matched[u] = True
            matched[v] = True
            size += 1
    return size


def exact_vertex_cover(
    graph: WeightedGraph,
    cap: int = EXACT_COVER_CAP,
    trace: TraceRecorder | None = None,
) -> VertexCoverSolution:
    """Minimum-size cover; among minimum covers, the lexicographically
    smallest vertex set.

    Branch and bound on an endpoint of the first uncovered edge, pruned
    with a greedy-matching lower bound.
    """
    if graph.n > cap:
        raise CapExceededError(
            f"instance has {graph.n} vertices; exact cover cap is {cap}", cap=cap
        )

    edges = [(u, v) for u, v, _ in graph.edges]
    best: list[int] | None = None
    nodes_explored = 0

    def objective(cover: list[int]) -> tuple[int, tuple[int, ...]]:
        return (len(cover), tuple(sorted(cover)))

    def search(remaining: list[tuple[int, int]], chosen: list[int]) -> None:
        nonlocal best, nodes_explored
        nodes_explored += 1
        if not remaining:
            if best is None or objective(chosen) < objective(best):
                best = list(chosen)
                if trace is not None:
                    trace.emit("backtrack", best_size=len(best), nodes=nodes_explored)
            return
        if best is not None:
            lower = len(chosen) + _greedy_matching_size(remaining, graph.n)
            if lower > len(best):
                return
        u, v = remaining[0]
        for pick in (u, v):
            chosen.append(pick)
            search([e for e in remaining if pick not in e], chosen)
            chosen.pop()

    search(edges, [])
    assert best is not None
    cover = tuple(sorted(best))
    if trace is not None:
        for vertex in cover:
            trace.emit("vertex-added-to-cover", vertex=vertex)
    return VertexCoverSolution(cover=cover, size=len(cover))
