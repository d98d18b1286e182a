"""Gradual approximate h-partition.

Adds a core set ``P`` (a subset of H) on top of :class:`HIndexStructure`.
An element joins the core only once its value reaches ``2 * h``, and leaves
it only when it drops out of H, so core membership churns O(1/h) times per
update on average. Updates are restricted to unit increments/decrements and
insertion/removal at value zero.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Dict, List, Set, Tuple

from .errors import MissingElementError, NonZeroValueError, ValueUnderflowError
from .hindex import HIndexStructure

log = logging.getLogger(__name__)


class CoreEventKind(str, Enum):
    ENTER = "enter-core"
    LEAVE = "leave-core"


@dataclass(frozen=True)
class CoreEvent:
    element: int
    kind: CoreEventKind


@dataclass
class CoreChangeCounters:
    """Instrumentation for the churn bound.

    ``harmonic_sum`` accrues ``1/h`` per update, or 1 when ``h == 0``.
    An epoch closes when h moves a factor of two away from ``epoch_start_h``;
    closed epochs are recorded as ``(start_h, length)``.
    """

    core_additions: int = 0
    core_removals: int = 0
    harmonic_sum: float = 0.0
    epoch_count: int = 1
    epoch_start_h: int = 0
    updates: int = 0
    current_epoch_length: int = 0
    epoch_lengths: List[Tuple[int, int]] = field(default_factory=list)

    @property
    def churn(self) -> int:
        return self.core_additions + self.core_removals

    def churn_ratio(self) -> float:
        if self.harmonic_sum == 0:
            return 0.0
        return self.churn / self.harmonic_sum

    def copy(self) -> "CoreChangeCounters":
        return replace(self, epoch_lengths=list(self.epoch_lengths))


def _factor_two_apart(h: int, start: int) -> bool:
    if start == 0:
        return h > 0
    return h >= 2 * start or 2 * h <= start


class GradualPartition:
    """h-partition plus a slowly changing core ``P`` with membership events."""

    def __init__(self) -> None:
        self._pending: List[CoreEvent] = []
        self._core: Set[int] = set()
        # value -> members of H outside the core holding that value
        self._waiting: Dict[int, Set[int]] = {}
        self._counters = CoreChangeCounters()
        self.base = HIndexStructure(observer=self._on_high_change)

    # ------------------------------------------------------------------ updates

    def insert_zero(self, x: int) -> List[CoreEvent]:
        h_old = self.base.h()
        self.base.insert(x, 0)
        return self._finish(h_old)

    def remove_zero(self, x: int) -> List[CoreEvent]:
        value = self.base.value(x)
        if value != 0:
            raise NonZeroValueError(f"element {x} has value {value}; only value-0 elements may be removed")
        h_old = self.base.h()
        self.base.remove(x)
        return self._finish(h_old)

    def increment(self, x: int) -> List[CoreEvent]:
        return self._step(x, self.base.value(x) + 1)

    def decrement(self, x: int) -> List[CoreEvent]:
        value = self.base.value(x)
        if value == 0:
            raise ValueUnderflowError(f"element {x} is already at value 0")
        return self._step(x, value - 1)

    # ------------------------------------------------------------------ queries

    def h(self) -> int:
        return self.base.h()

    def value(self, x: int) -> int:
        return self.base.value(x)

    def in_high(self, x: int) -> bool:
        return self.base.in_high(x)

    def high_set(self) -> Set[int]:
        return self.base.high_set()

    def in_core(self, x: int) -> bool:
        if x not in self.base:
            raise MissingElementError(f"element {x} not present")
        return x in self._core

    def core_set(self) -> Set[int]:
        return set(self._core)

    def core_size(self) -> int:
        return len(self._core)

    def iter_core(self):
        """Iterate the live core set; callers must not update while iterating."""
        return iter(self._core)

    def waiting_set(self) -> Set[int]:
        return set().union(*self._waiting.values()) if self._waiting else set()

    def counters(self) -> CoreChangeCounters:
        return self._counters.copy()

    def __contains__(self, x: object) -> bool:
        return x in self.base

    def __len__(self) -> int:
        return len(self.base)

    # ------------------------------------------------------------------ internals

    def _step(self, x: int, new: int) -> List[CoreEvent]:
        h_old = self.base.h()
        old = self.base.value(x)
        if x not in self._core and self.base.in_high(x):
            self._waiting_discard(old, x)
        self.base.set_value(x, new)
        if x not in self._core and self.base.in_high(x):
            self._waiting_add(new, x)
        return self._finish(h_old)

    def _on_high_change(self, x: int, value: int, entered: bool) -> None:
        if entered:
            self._waiting_add(value, x)
            return
        if x in self._core:
            self._core.discard(x)
            self._counters.core_removals += 1
            self._pending.append(CoreEvent(x, CoreEventKind.LEAVE))
        else:
            self._waiting_discard(value, x)

    def _finish(self, h_old: int) -> List[CoreEvent]:
        h_new = self.base.h()
        if h_new > 0:
            # Before the update every waiting value was below 2*h_old; the
            # update moved one value by one unit, so these keys cover all
            # candidates at or above the new threshold.
            for key in range(2 * h_new, 2 * max(h_old, h_new) + 2):
                bucket = self._waiting.pop(key, None)
                if not bucket:
                    continue
                for y in bucket:
                    self._core.add(y)
                    self._counters.core_additions += 1
                    self._pending.append(CoreEvent(y, CoreEventKind.ENTER))
        self._record_update(h_new)
        events, self._pending = self._pending, []
        return events

    def _record_update(self, h: int) -> None:
        c = self._counters
        c.updates += 1
        c.harmonic_sum += 1.0 / h if h >= 1 else 1.0
        if _factor_two_apart(h, c.epoch_start_h):
            c.epoch_lengths.append((c.epoch_start_h, c.current_epoch_length))
            log.debug("epoch %d closed after %d updates (h %d -> %d)",
                      c.epoch_count, c.current_epoch_length, c.epoch_start_h, h)
            c.epoch_count += 1
            c.epoch_start_h = h
            c.current_epoch_length = 0
        c.current_epoch_length += 1

    def _waiting_add(self, i: int, x: int) -> None:
        bucket = self._waiting.get(i)
        if bucket is None:
            self._waiting[i] = {x}
        else:
            bucket.add(x)

    def _waiting_discard(self, i: int, x: int) -> None:
        bucket = self._waiting.get(i)
        if bucket is None:
            return
        bucket.discard(x)
        if not bucket:
            del self._waiting[i]


__all__ = ["GradualPartition", "CoreEvent", "CoreEventKind", "CoreChangeCounters"]
