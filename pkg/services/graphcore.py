"""Dynamic undirected simple graph driving the statistics listeners.

The graph owns adjacency, degrees, optional edge weights and vertex colors,
and a :class:`GradualPartition` keyed by vertex with value = degree. Every
public update validates its preconditions before touching any state, then
notifies listeners in registration order.

Edge insertion ``uv``:

1. ``on_edge_pre_insert``  (edge absent; current core and path table)
2. edge stored in ``edges`` and both neighbor sets
3. ``on_edge_post_insert``
4. degree increments at ``u`` then ``v``; each core event forwarded at once

Edge deletion mirrors it: degree decrements first (events forwarded), then
``on_edge_pre_delete``, detach, ``on_edge_post_delete``.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Optional, Set, Tuple

from models.errors import (
    ColorError,
    DuplicateEdgeError,
    DuplicateVertexError,
    FeatureDisabledError,
    InvalidWeightError,
    MissingEdgeError,
    MissingVertexError,
    NonZeroDegreeError,
    SelfLoopError,
)
from models.gradual import CoreEvent, GradualPartition

log = logging.getLogger(__name__)

EdgeKey = Tuple[int, int]


def edge_key(u: int, v: int) -> EdgeKey:
    """Canonical key of the unordered pair ``{u, v}``."""
    return (u, v) if u < v else (v, u)


@dataclass
class VertexRecord:
    neighbors: Set[int] = field(default_factory=set)
    color: Optional[int] = None

    @property
    def degree(self) -> int:
        return len(self.neighbors)


@dataclass
class EdgeRecord:
    weight: float = 1.0


class StatisticsListener:
    """Hooks invoked by :class:`DynamicGraph`; the defaults do nothing."""

    def on_vertex_added(self, v: int) -> None:
        pass

    def on_vertex_removed(self, v: int) -> None:
        pass

    def on_edge_pre_insert(self, u: int, v: int, weight: float) -> None:
        pass

    def on_edge_post_insert(self, u: int, v: int) -> None:
        pass

    def on_edge_pre_delete(self, u: int, v: int) -> None:
        pass

    def on_edge_post_delete(self, u: int, v: int) -> None:
        pass

    def on_core_event(self, event: CoreEvent) -> None:
        pass


class DynamicGraph:
    """Vertex/edge store with degree partition and listener dispatch."""

    def __init__(self, weighted: bool = False, colors: int = 0) -> None:
        if colors < 0:
            raise ValueError("number of colors must be non-negative")
        self.weighted = weighted
        self.colors = colors
        self._vertices: Dict[int, VertexRecord] = {}
        self._edges: Dict[EdgeKey, EdgeRecord] = {}
        self.partition = GradualPartition()
        self._listeners: List[StatisticsListener] = []

    def register(self, listener: StatisticsListener) -> None:
        self._listeners.append(listener)

    # ------------------------------------------------------------------ updates

    def add_vertex(self, v: int, color: Optional[int] = None) -> None:
        if v in self._vertices:
            raise DuplicateVertexError(f"vertex {v} already present")
        color = self._check_color(v, color)
        self._vertices[v] = VertexRecord(color=color)
        self._dispatch_core(self.partition.insert_zero(v))
        for listener in self._listeners:
            listener.on_vertex_added(v)

    def remove_vertex(self, v: int) -> None:
        record = self._record(v)
        if record.neighbors:
            raise NonZeroDegreeError(f"vertex {v} still has {record.degree} incident edges")
        self._dispatch_core(self.partition.remove_zero(v))
        del self._vertices[v]
        for listener in self._listeners:
            listener.on_vertex_removed(v)

    def add_edge(self, u: int, v: int, weight: Optional[float] = None) -> None:
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        ru, rv = self._record(u), self._record(v)
        key = edge_key(u, v)
        if key in self._edges:
            raise DuplicateEdgeError(f"edge {u}-{v} already present")
        weight = self._check_weight(u, v, weight)

        for listener in self._listeners:
            listener.on_edge_pre_insert(u, v, weight)
        self._edges[key] = EdgeRecord(weight)
        ru.neighbors.add(v)
        rv.neighbors.add(u)
        for listener in self._listeners:
            listener.on_edge_post_insert(u, v)
        self._dispatch_core(self.partition.increment(u))
        self._dispatch_core(self.partition.increment(v))

    def remove_edge(self, u: int, v: int) -> None:
        ru, rv = self._record(u), self._record(v)
        key = edge_key(u, v)
        if key not in self._edges:
            raise MissingEdgeError(f"edge {u}-{v} not present")

        self._dispatch_core(self.partition.decrement(u))
        self._dispatch_core(self.partition.decrement(v))
        for listener in self._listeners:
            listener.on_edge_pre_delete(u, v)
        del self._edges[key]
        ru.neighbors.discard(v)
        rv.neighbors.discard(u)
        for listener in self._listeners:
            listener.on_edge_post_delete(u, v)

    # ------------------------------------------------------------------ queries

    def degree(self, v: int) -> int:
        return len(self._record(v).neighbors)

    def has_edge(self, u: int, v: int) -> bool:
        self._record(u)
        self._record(v)
        return edge_key(u, v) in self._edges

    def neighbors(self, v: int) -> Set[int]:
        return set(self._record(v).neighbors)

    def adjacency(self, v: int) -> Set[int]:
        """Live neighbor set of ``v``; read-only for callers."""
        return self._record(v).neighbors

    def color(self, v: int) -> Optional[int]:
        return self._record(v).color

    def weight(self, u: int, v: int) -> float:
        try:
            return self._edges[edge_key(u, v)].weight
        except KeyError:
            raise MissingEdgeError(f"edge {u}-{v} not present") from None

    def n(self) -> int:
        return len(self._vertices)

    def m(self) -> int:
        return len(self._edges)

    def h(self) -> int:
        return self.partition.h()

    def in_core(self, v: int) -> bool:
        return self.partition.in_core(v)

    def vertices(self) -> Iterator[int]:
        return iter(self._vertices)

    def edges(self) -> Iterable[Tuple[int, int, float]]:
        return [(u, v, rec.weight) for (u, v), rec in self._edges.items()]

    def __contains__(self, v: object) -> bool:
        return v in self._vertices

    # ------------------------------------------------------------------ internals

    def _record(self, v: int) -> VertexRecord:
        try:
            return self._vertices[v]
        except KeyError:
            raise MissingVertexError(f"vertex {v} not present") from None

    def _check_color(self, v: int, color: Optional[int]) -> Optional[int]:
        if not self.colors:
            if color is not None:
                raise ColorError(f"color given for vertex {v} but coloring is disabled")
            return None
        if color is None:
            return 0
        if not 0 <= color < self.colors:
            raise ColorError(f"color {color} for vertex {v} outside 0..{self.colors - 1}")
        return color

    def _check_weight(self, u: int, v: int, weight: Optional[float]) -> float:
        if weight is None:
            return 1.0
        if not self.weighted:
            raise FeatureDisabledError(f"weight given for edge {u}-{v} but weights are disabled")
        weight = float(weight)
        if not math.isfinite(weight):
            raise InvalidWeightError(f"weight {weight} for edge {u}-{v} is not finite")
        return weight

    def _dispatch_core(self, events: List[CoreEvent]) -> None:
        for event in events:
            log.debug("core %s: %s", event.kind.value, event.element)
            for listener in self._listeners:
                listener.on_core_event(event)


__all__ = [
    "DynamicGraph",
    "VertexRecord",
    "EdgeRecord",
    "StatisticsListener",
    "edge_key",
]
