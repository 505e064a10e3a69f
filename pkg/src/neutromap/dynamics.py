"""Iterate a deterministic step function until a state recurs."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Hashable

FIXED_POINT = "FIXED_POINT"
LIMIT_CYCLE = "LIMIT_CYCLE"


class IterationCapExceeded(RuntimeError):
    """Raised when a run visits more states than the theoretical bound allows."""


@dataclass(frozen=True)
class HiddenPattern:
    """Outcome of one inference run.

    ``trace`` holds every visited state in order; its last entry equals
    ``trace[cycle_start]``.  ``raw[k]`` is the pre-threshold vector that
    produced ``trace[k + 1]``.
    """

    seed: Any
    side: str | None
    trace: tuple
    raw: tuple
    cycle_start: int
    meta: dict = field(default_factory=dict, compare=False)

    @property
    def cycle(self) -> tuple:
        return self.trace[self.cycle_start:-1]

    @property
    def period(self) -> int:
        return len(self.cycle)

    @property
    def classification(self) -> str:
        return FIXED_POINT if self.period == 1 else LIMIT_CYCLE

    @property
    def is_fixed_point(self) -> bool:
        return self.period == 1

    @property
    def final(self):
        """The fixed state, or the first state of the cycle."""
        return self.trace[self.cycle_start]

    @property
    def iterations(self) -> int:
        return len(self.trace) - 1


def run_until_recurrence(step: Callable[[Hashable], tuple], start: Hashable, cap: int):
    """Apply ``step`` from ``start`` until a state repeats.

    ``step(state)`` returns ``(raw, next_state)``.  Returns
    ``(trace, raws, cycle_start)``; the recurring state is appended to the
    trace so the loop closure is visible.
    """
    trace = [start]
    raws = []
    seen = {start: 0}
    state = start
    while True:
        if len(raws) >= cap:
            raise IterationCapExceeded(f"no recurrence within {cap} steps")
        raw, state = step(state)
        raws.append(raw)
        trace.append(state)
        if state in seen:
            return tuple(trace), tuple(raws), seen[state]
        seen[state] = len(trace) - 1
