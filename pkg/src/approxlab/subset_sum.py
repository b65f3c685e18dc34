"""Subset sum: the exponential exact list algorithm and its FPTAS.

Both algorithms grow sorted value lists, seeded with <0>, one element of
the input at a time.  The FPTAS thins each list so that successive kept
values differ by a factor greater than 1 + delta with delta = eps/2n,
which caps list length while keeping every achievable sum represented
within that factor.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import CapExceededError
from .instances import SubsetSumInstance
from .trace import TraceRecorder

EXACT_LIST_CAP = 10**6


@dataclass(frozen=True)
class SubsetSumResult:
    value: int
    # chosen element indices into the instance's sorted value tuple;
    # None when the algorithm proves a value without a witness
    indices: tuple[int, ...] | None

    def to_certificate(self, instance: SubsetSumInstance) -> dict | None:
        if self.indices is None:
            return None
        return {
            "indices": list(self.indices),
            "elements": [instance.values[i] for i in self.indices],
        }


def merge_lists(a: list[int], b: list[int]) -> list[int]:
    """Sorted union of two strictly ascending lists, without duplicates."""
    _check_sorted(a, "first")
    _check_sorted(b, "second")
    return _merge_sorted(a, b)


def _merge_sorted(a: list[int], b: list[int]) -> list[int]:
    out: list[int] = []
    i = j = 0
    while i < len(a) and j < len(b):
        x, y = a[i], b[j]
        if x < y:
            out.append(x)
            i += 1
        elif y < x:
            out.append(y)
            j += 1
        else:
            out.append(x)
            i += 1
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return out


def shift_list(a: list[int], x: int) -> list[int]:
    """Element-wise addition; order is preserved."""
    return [v + x for v in a]


def trim(a: list[int], delta: float) -> list[int]:
    """Thin a sorted list: keep the head, then keep y iff it exceeds the
    last kept value by a factor greater than 1 + delta.

    Every dropped y stays represented by a kept z with z <= y <= z*(1+delta).
    delta = 0 keeps everything.
    """
    if not 0 <= delta < 1:
        raise ValueError(f"delta must be in [0,1), got {delta}")
    _check_sorted(a, "trim input")
    return _trim_sorted(a, delta)


def _trim_sorted(a: list[int], delta: float) -> list[int]:
    if not a or delta == 0:
        return list(a)
    kept = [a[0]]
    last = a[0]
    factor = 1 + delta
    for y in a[1:]:
        if y > last * factor:
            kept.append(y)
            last = y
    return kept


def _check_sorted(a: list[int], label: str) -> None:
    for i in range(1, len(a)):
        if a[i] <= a[i - 1]:
            raise ValueError(f"{label} list is not strictly ascending at position {i}")


def exact_subset_sum(
    instance: SubsetSumInstance,
    list_cap: int = EXACT_LIST_CAP,
    trace: TraceRecorder | None = None,
) -> SubsetSumResult:
    """Maximum subset sum not exceeding the target, with one witness.

    Keeps every achievable sum up to the target, so it is exponential in
    the worst case; the list cap guards against runaway instances.  The
    witness prefers excluding the highest-index element on ties.
    """
    values = instance.values
    target = instance.target
    stages: list[list[int]] = [[0]]
    current = [0]
    for i, x in enumerate(values):
        merged = _merge_sorted(current, shift_list(current, x))
        current = [v for v in merged if v <= target]
        if len(current) > list_cap:
            raise CapExceededError(
                f"sum list grew to {len(current)} entries; cap is {list_cap}", cap=list_cap
            )
        stages.append(current)
        if trace is not None:
            trace.emit("list-merged", i=i + 1, size=len(current), **trace.snapshot(current))

    best = current[-1]
    # walk backwards: keep x_i out whenever the remainder was already
    # achievable without it (stages keep every achievable sum <= target)
    chosen: list[int] = []
    remainder = best
    membership = [set(stage) for stage in stages]
    for i in range(len(values) - 1, -1, -1):
        if remainder in membership[i]:
            continue
        chosen.append(i)
        remainder -= values[i]
        if trace is not None:
            trace.emit("item-taken", index=i, value=values[i])
    assert remainder == 0
    return SubsetSumResult(value=best, indices=tuple(sorted(chosen)))


def trimmed_list_bound(n: int, target: int, epsilon: float) -> int:
    """Length every trimmed list must respect: floor(2n ln t / eps) + 2."""
    return math.floor(2 * n * math.log(target) / epsilon) + 2


def approx_subset_sum(
    instance: SubsetSumInstance,
    epsilon: float,
    trace: TraceRecorder | None = None,
) -> SubsetSumResult:
    """Value z* with OPT/(1+eps) <= z* <= OPT, in time polynomial in n
    and 1/eps.  Returns the value alone; trimmed lists keep no witnesses."""
    if not 0 < epsilon < 1:
        raise ValueError(f"epsilon must be in (0,1), got {epsilon}")
    values = instance.values
    target = instance.target
    n = len(values)
    if n == 0:
        return SubsetSumResult(value=0, indices=None)

    delta = epsilon / (2 * n)
    length_bound = trimmed_list_bound(n, target, epsilon)
    current = [0]
    for i, x in enumerate(values):
        merged = _merge_sorted(current, shift_list(current, x))
        if trace is not None:
            trace.emit("list-merged", i=i + 1, size=len(merged), **trace.snapshot(merged))
        trimmed = _trim_sorted(merged, delta)
        if trace is not None:
            dropped = sorted(set(merged) - set(trimmed))
            payload = trace.snapshot(trimmed)
            payload["dropped"] = trace.snapshot(dropped)["values"]
            trace.emit("list-trimmed", i=i + 1, size=len(trimmed), **payload)
        current = [v for v in trimmed if v <= target]
        if trace is not None:
            trace.emit(
                "element-dropped",
                i=i + 1,
                reason="over-target",
                count=len(trimmed) - len(current),
                size=len(current),
            )
        assert len(current) <= length_bound, (
            f"trimmed list length {len(current)} exceeds bound {length_bound}"
        )

    return SubsetSumResult(value=current[-1], indices=None)
