"""Request cores shared by the CLI's file mode and the serve endpoints.

Both transports call exactly these functions, so a POST body and a file
produce identical documents.
"""

from __future__ import annotations

from typing import Any

from .errors import InvalidInstanceError
from .harness import make_record
from .instances import Instance
from .registry import ALGORITHMS, PROBLEM_KINDS, get_algorithm, run_algorithm
from .trace import instance_digest, traced_solve


def problems_document() -> dict[str, Any]:
    problems = []
    for kind in PROBLEM_KINDS:
        specs = [s for s in ALGORITHMS.values() if s.problem == kind]
        problems.append(
            {
                "kind": kind,
                "instance_kind": specs[0].instance_kind,
                "algorithms": sorted(s.name for s in specs),
            }
        )
    return {"problems": problems}


def solve_document(
    algorithm: str,
    instance: Instance,
    *,
    epsilon: float | None = None,
    root: int | None = None,
    force: bool = False,
) -> dict[str, Any]:
    outcome = run_algorithm(algorithm, instance, epsilon=epsilon, root=root, force=force)
    return outcome.to_document()


def trace_document(
    algorithm: str,
    instance: Instance,
    *,
    epsilon: float | None = None,
    root: int | None = None,
    force: bool = False,
) -> dict[str, Any]:
    _, log = traced_solve(instance, algorithm, epsilon=epsilon, root=root, force=force)
    return log.to_document()


def compare_document(
    algorithm: str,
    instance: Instance,
    *,
    epsilon: float | None = None,
    root: int | None = None,
    force: bool = False,
) -> dict[str, Any]:
    spec = get_algorithm(algorithm)
    if spec.oracle is None:
        raise InvalidInstanceError(
            f"{algorithm} is an exact algorithm; compare needs an approximation"
        )
    approx = run_algorithm(algorithm, instance, epsilon=epsilon, root=root, force=force)
    exact = run_algorithm(spec.oracle, instance)
    record = make_record(
        spec.problem,
        instance_digest(instance)[:12],
        None,
        approx.value,
        exact.value,
        spec.bound(epsilon),
    )
    return record.to_document()
