"""Replayable step-event recording for every algorithm run.

A recorder belongs to exactly one run.  Algorithms emit small, ordered
events while they work; the log replays into the run's certificate, which
is what the trace player in the companion UI consumes.

Trace document (format version 1):

    {"v": 1, "problem": ..., "algorithm": ..., "digest": ...,
     "truncated": false,
     "events": [{"i": 0, "kind": "...", "payload": {...}}, ...],
     "outcome": {...}}

Event kinds: edge-picked, edges-removed, vertex-added-to-cover,
mst-edge-added, preorder-visit, list-merged, list-trimmed,
element-dropped, dp-cell-set, item-taken, backtrack.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from typing import Any

from .errors import TraceReplayError
from .instances import Instance, SolveOutcome, write_instance

TRACE_FORMAT_VERSION = 1
EVENT_CAP = 10_000
SNAPSHOT_CAP = 64

EVENT_KINDS = frozenset(
    {
        "edge-picked",
        "edges-removed",
        "vertex-added-to-cover",
        "mst-edge-added",
        "preorder-visit",
        "list-merged",
        "list-trimmed",
        "element-dropped",
        "dp-cell-set",
        "item-taken",
        "backtrack",
    }
)


@dataclass(frozen=True)
class TraceEvent:
    index: int
    kind: str
    payload: dict[str, Any]

    def to_document(self) -> dict[str, Any]:
        return {"i": self.index, "kind": self.kind, "payload": self.payload}


class TraceRecorder:
    """Collects events for one run; past the cap it truncates, not fails."""

    def __init__(self, event_cap: int = EVENT_CAP, snapshot_cap: int = SNAPSHOT_CAP):
        self.event_cap = event_cap
        self.snapshot_cap = snapshot_cap
        self.events: list[TraceEvent] = []
        self.truncated = False

    def emit(self, kind: str, **payload: Any) -> None:
        assert kind in EVENT_KINDS, f"unknown event kind {kind!r}"
        if len(self.events) >= self.event_cap:
            self.truncated = True
            return
        self.events.append(TraceEvent(index=len(self.events), kind=kind, payload=payload))

    def snapshot(self, values: list[Any]) -> dict[str, Any]:
        """Clip long list payloads; the elision count marks what was cut."""
        if len(values) <= self.snapshot_cap:
            return {"values": list(values)}
        kept = list(values[: self.snapshot_cap])
        return {"values": kept, "elided": len(values) - self.snapshot_cap}


@dataclass(frozen=True)
class TraceLog:
    problem: str
    algorithm: str
    digest: str
    events: tuple[TraceEvent, ...]
    outcome: SolveOutcome
    truncated: bool = False

    def to_document(self) -> dict[str, Any]:
        return {
            "v": TRACE_FORMAT_VERSION,
            "problem": self.problem,
            "algorithm": self.algorithm,
            "digest": self.digest,
            "truncated": self.truncated,
            "events": [e.to_document() for e in self.events],
            "outcome": self.outcome.to_document(),
        }

    def to_text(self) -> str:
        return json.dumps(self.to_document(), separators=(",", ":"))


def instance_digest(instance: Instance) -> str:
    return hashlib.sha256(write_instance(instance).encode("utf-8")).hexdigest()


def build_log(
    instance: Instance,
    problem: str,
    algorithm: str,
    recorder: TraceRecorder,
    outcome: SolveOutcome,
) -> TraceLog:
    return TraceLog(
        problem=problem,
        algorithm=algorithm,
        digest=instance_digest(instance),
        events=tuple(recorder.events),
        outcome=outcome,
        truncated=recorder.truncated,
    )


def parse_trace(text: str) -> TraceLog:
    doc = json.loads(text)
    outcome = doc["outcome"]
    return TraceLog(
        problem=doc["problem"],
        algorithm=doc["algorithm"],
        digest=doc["digest"],
        events=tuple(
            TraceEvent(index=e["i"], kind=e["kind"], payload=e.get("payload", {}))
            for e in doc["events"]
        ),
        outcome=SolveOutcome(
            problem=outcome["problem"],
            algorithm=outcome["algorithm"],
            value=outcome["value"],
            certificate=outcome["certificate"],
            is_exact=outcome["is_exact"],
            bound=outcome.get("bound"),
            guaranteed=outcome.get("guaranteed", True),
        ),
        truncated=doc["truncated"],
    )


def replay_trace(log: TraceLog) -> dict[str, Any] | None:
    """Reconstruct the run's certificate from its event stream alone.

    Only valid for non-truncated logs; the result equals
    ``log.outcome.certificate`` for every log produced by traced_solve.
    """
    if log.truncated:
        raise TraceReplayError("cannot replay a truncated trace")
    for position, event in enumerate(log.events):
        if event.index != position:
            raise TraceReplayError(
                f"event index gap: expected {position}, found {event.index}"
            )
        if event.kind not in EVENT_KINDS:
            raise TraceReplayError(f"unknown event kind {event.kind!r}")

    if log.problem == "vertex_cover":
        cover = sorted(
            {e.payload["vertex"] for e in log.events if e.kind == "vertex-added-to-cover"}
        )
        return {"cover": cover}

    if log.problem == "tsp":
        order = [e.payload["vertex"] for e in log.events if e.kind == "preorder-visit"]
        return {"order": order}

    if log.problem == "hamiltonian":
        stack: list[int] = []
        for e in log.events:
            if e.kind == "preorder-visit":
                stack.append(e.payload["vertex"])
            elif e.kind == "backtrack":
                if not stack or stack[-1] != e.payload["vertex"]:
                    raise TraceReplayError("backtrack does not match the visit stack")
                stack.pop()
        return {"order": stack} if stack else None

    if log.problem == "subset_sum":
        if log.algorithm == "subset-sum-fptas":
            return None  # the trimmed algorithm proves a value, not a witness
        taken = [e.payload for e in log.events if e.kind == "item-taken"]
        indices = sorted(p["index"] for p in taken)
        by_index = {p["index"]: p["value"] for p in taken}
        return {"indices": indices, "elements": [by_index[i] for i in indices]}

    if log.problem == "knapsack":
        items = sorted(e.payload["index"] for e in log.events if e.kind == "item-taken")
        return {"items": items}

    raise TraceReplayError(f"unknown problem kind {log.problem!r}")


def traced_solve(
    instance: Instance,
    algorithm: str,
    *,
    epsilon: float | None = None,
    root: int | None = None,
    force: bool = False,
) -> tuple[SolveOutcome, TraceLog]:
    """Run ``algorithm`` with a fresh recorder attached.

    The outcome is identical to the untraced run: recording only observes,
    it never steers the algorithm.
    """
    # late imports: the registry depends on the solver modules, which in
    # turn emit events through this module
    from .registry import get_algorithm, run_algorithm

    spec = get_algorithm(algorithm)
    recorder = TraceRecorder()
    outcome = run_algorithm(
        algorithm, instance, epsilon=epsilon, root=root, force=force, trace=recorder
    )
    log = build_log(instance, spec.problem, algorithm, recorder, outcome)
    return outcome, log
