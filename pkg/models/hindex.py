"""Dynamic h-index and h-partition of a set of non-negative integer values.

The structure keeps four containers:

* ``values``   element -> value
* ``high``     the set H, of size h
* ``boundary`` the members of H whose value equals h
* ``buckets``  value -> elements outside ``boundary`` holding that value

Every update performs a constant number of container operations.
"""
from __future__ import annotations

import logging
from typing import Callable, Dict, Iterator, Optional, Set, Tuple

from .errors import DuplicateElementError, MissingElementError, NegativeValueError

log = logging.getLogger(__name__)

# Called as observer(element, value, entered) whenever H gains or loses a member.
HighObserver = Callable[[int, int, bool], None]


class HIndexStructure:
    """Maintain ``h`` and an h-partition ``(high, rest)`` under arbitrary updates."""

    __slots__ = ("_values", "_high", "_boundary", "_buckets", "_observer", "accesses")

    def __init__(self, observer: Optional[HighObserver] = None) -> None:
        self._values: Dict[int, int] = {}
        self._high: Set[int] = set()
        self._boundary: Set[int] = set()
        self._buckets: Dict[int, Set[int]] = {}
        self._observer = observer
        # Number of dictionary/set operations performed so far.
        self.accesses = 0

    # ------------------------------------------------------------------ updates

    def insert(self, x: int, v: int) -> None:
        """Store ``x`` with value ``v``; h grows by at most one."""
        if v < 0:
            raise NegativeValueError(f"value for {x} must be non-negative, got {v}")
        self.accesses += 1
        if x in self._values:
            raise DuplicateElementError(f"element {x} already present")
        self._values[x] = v
        self._bucket_add(v, x)
        self._admit(x, v)

    def remove(self, x: int) -> None:
        """Drop ``x``; h shrinks by at most one."""
        self.accesses += 1
        try:
            v = self._values.pop(x)
        except KeyError:
            raise MissingElementError(f"element {x} not present") from None
        self._evict(x, v)

    def set_value(self, x: int, v: int) -> None:
        """Change the value of ``x``.

        A member of H whose old and new values are both at least h stays in H;
        every other change is a removal followed by a reinsertion.
        """
        if v < 0:
            raise NegativeValueError(f"value for {x} must be non-negative, got {v}")
        old = self.value(x)
        if v == old:
            return
        h = len(self._high)
        self.accesses += 1
        if x in self._high and v >= h:
            self._values[x] = v
            if x in self._boundary:
                self._boundary.discard(x)
            else:
                self._bucket_remove(old, x)
            if v == h:
                self._boundary.add(x)
            else:
                self._bucket_add(v, x)
            return
        del self._values[x]
        self._evict(x, old)
        self._values[x] = v
        self._bucket_add(v, x)
        self._admit(x, v)

    # ------------------------------------------------------------------ queries

    def h(self) -> int:
        return len(self._high)

    def value(self, x: int) -> int:
        self.accesses += 1
        try:
            return self._values[x]
        except KeyError:
            raise MissingElementError(f"element {x} not present") from None

    def in_high(self, x: int) -> bool:
        if x not in self._values:
            raise MissingElementError(f"element {x} not present")
        return x in self._high

    def high_set(self) -> Set[int]:
        return set(self._high)

    def boundary_set(self) -> Set[int]:
        return set(self._boundary)

    def bucket_keys(self) -> Tuple[int, ...]:
        return tuple(sorted(self._buckets))

    def items(self) -> Iterator[Tuple[int, int]]:
        return iter(self._values.items())

    def __len__(self) -> int:
        return len(self._values)

    def __contains__(self, x: object) -> bool:
        return x in self._values

    # ------------------------------------------------------------------ internals

    def _admit(self, x: int, v: int) -> None:
        h = len(self._high)
        if v <= h:
            return
        if self._boundary:
            # Any member of B may give way; take whichever the set yields first.
            y = self._boundary.pop()
            self._leave_high(y, h)
            self._bucket_add(h, y)
            self._enter_high(x, v)
            return
        self._enter_high(x, v)
        self.accesses += 1
        self._boundary = self._buckets.pop(h + 1, set())

    def _evict(self, x: int, v: int) -> None:
        self.accesses += 1
        if x in self._boundary:
            self._boundary.discard(x)
        else:
            self._bucket_remove(v, x)
        if x not in self._high:
            return
        h = len(self._high)
        self._leave_high(x, v)
        z = self._bucket_take(h)
        if z is not None:
            self._boundary.add(z)
            self._enter_high(z, h)
            return
        if self._boundary:
            self.accesses += 1
            self._buckets[h] = self._boundary
        self._boundary = set()

    def _enter_high(self, x: int, v: int) -> None:
        self.accesses += 1
        self._high.add(x)
        if self._observer is not None:
            self._observer(x, v, True)

    def _leave_high(self, x: int, v: int) -> None:
        self.accesses += 1
        self._high.discard(x)
        if self._observer is not None:
            self._observer(x, v, False)

    def _bucket_add(self, i: int, x: int) -> None:
        self.accesses += 1
        bucket = self._buckets.get(i)
        if bucket is None:
            self._buckets[i] = {x}
        else:
            bucket.add(x)

    def _bucket_remove(self, i: int, x: int) -> None:
        self.accesses += 1
        bucket = self._buckets[i]
        bucket.discard(x)
        if not bucket:
            del self._buckets[i]

    def _bucket_take(self, i: int) -> Optional[int]:
        self.accesses += 1
        bucket = self._buckets.get(i)
        if not bucket:
            return None
        z = bucket.pop()
        if not bucket:
            del self._buckets[i]
        return z


__all__ = ["HIndexStructure", "HighObserver"]
