"""Dynamic triangle counting with optional edge weights and vertex colors.

Triangles through a new or departing edge ``uv`` are split by their third
vertex ``w``: core vertices are tested one by one, non-core vertices are
summed by a single lookup of the two-path cell ``{u, v}``. The path table
only stores two-paths whose middle vertex is outside the core, and every
non-core vertex has fewer than ``2h`` neighbors, so each update touches
O(h) cells. Core changes rebuild the contributions of one middle vertex.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from math import comb
from typing import Dict, List, NamedTuple, Optional, Tuple

from models.errors import FeatureDisabledError, InternalInconsistencyError
from models.gradual import CoreEvent, CoreEventKind

from .graphcore import DynamicGraph, EdgeKey, StatisticsListener, edge_key

log = logging.getLogger(__name__)

ColorTriple = Tuple[int, int, int]


@dataclass
class PathCell:
    count: int = 0
    weight_sum: float = 0.0
    colors: Optional[List[int]] = None
    color_weights: Optional[List[float]] = None


class EdgeTriangles(NamedTuple):
    """Common-neighbor tally for one vertex pair.

    ``weight`` is the summed two-path weight ``w_uw * w_wv``; the triangle
    weight is that times ``w_uv``.
    """

    count: int
    weight: float
    by_color: Optional[List[int]]
    weight_by_color: Optional[List[float]]


@dataclass
class PathTable:
    """Unordered vertex pair -> two-paths through non-core middle vertices."""

    weighted: bool = False
    colors: int = 0
    entries: Dict[EdgeKey, PathCell] = field(default_factory=dict)

    def get(self, u: int, v: int) -> Optional[PathCell]:
        return self.entries.get(edge_key(u, v))

    def add_path(self, a: int, b: int, weight: float, color: Optional[int]) -> None:
        key = edge_key(a, b)
        cell = self.entries.get(key)
        if cell is None:
            cell = PathCell()
            if self.colors:
                cell.colors = [0] * self.colors
                if self.weighted:
                    cell.color_weights = [0.0] * self.colors
            self.entries[key] = cell
        cell.count += 1
        if self.weighted:
            cell.weight_sum += weight
        if self.colors:
            cell.colors[color] += 1
            if self.weighted:
                cell.color_weights[color] += weight

    def remove_path(self, a: int, b: int, weight: float, color: Optional[int]) -> None:
        key = edge_key(a, b)
        cell = self.entries.get(key)
        if cell is None:
            raise InternalInconsistencyError(f"no two-path cell for {a}-{b}")
        if cell.count == 1:
            # Deletion is keyed on the count; zero-weight paths still occupy cells.
            del self.entries[key]
            return
        cell.count -= 1
        if self.weighted:
            cell.weight_sum -= weight
        if self.colors:
            if cell.colors[color] <= 0:
                raise InternalInconsistencyError(f"color {color} count underflow in cell {a}-{b}")
            cell.colors[color] -= 1
            if self.weighted:
                cell.color_weights[color] -= weight

    def __len__(self) -> int:
        return len(self.entries)


class TriangleCounter(StatisticsListener):
    """Maintain c3, the total triangle weight and the colored triangle census."""

    def __init__(self, graph: DynamicGraph) -> None:
        self.graph = graph
        self.weighted = graph.weighted
        self.colors = graph.colors
        self.table = PathTable(weighted=graph.weighted, colors=graph.colors)
        self.c3 = 0
        self._total_weight = 0.0
        self._color_counts: Dict[ColorTriple, int] = {}
        self._color_weights: Dict[ColorTriple, float] = {}
        # Core membership tests performed while counting.
        self.probe_counter = 0

    # ------------------------------------------------------------------ counting

    def count_for_edge(self, u: int, v: int) -> EdgeTriangles:
        """Count common neighbors of ``u`` and ``v`` without mutating state."""
        g = self.graph
        nu, nv = g.adjacency(u), g.adjacency(v)
        k = self.colors
        count = 0
        weight = 0.0
        by_color = [0] * k if k else None
        weight_by_color = [0.0] * k if k and self.weighted else None

        partition = g.partition
        self.probe_counter += partition.core_size() + 1
        for w in partition.iter_core():
            if w in nu and w in nv:
                count += 1
                path_weight = g.weight(u, w) * g.weight(w, v) if self.weighted else 1.0
                weight += path_weight
                if k:
                    c = g.color(w)
                    by_color[c] += 1
                    if weight_by_color is not None:
                        weight_by_color[c] += path_weight

        cell = self.table.get(u, v)
        if cell is not None:
            count += cell.count
            weight += cell.weight_sum if self.weighted else cell.count
            if k:
                for i in range(k):
                    by_color[i] += cell.colors[i]
                    if weight_by_color is not None:
                        weight_by_color[i] += cell.color_weights[i]
        return EdgeTriangles(count, weight, by_color, weight_by_color)

    # ------------------------------------------------------------------ listener hooks

    def on_edge_pre_insert(self, u: int, v: int, weight: float) -> None:
        self._apply(u, v, weight, self.count_for_edge(u, v), +1)

    def on_edge_post_insert(self, u: int, v: int) -> None:
        self._update_paths(u, v, self.table.add_path)

    def on_edge_pre_delete(self, u: int, v: int) -> None:
        self._apply(u, v, self.graph.weight(u, v), self.count_for_edge(u, v), -1)
        self._update_paths(u, v, self.table.remove_path)

    def on_core_event(self, event: CoreEvent) -> None:
        v = event.element
        g = self.graph
        nbrs = list(g.adjacency(v))
        if len(nbrs) < 2:
            return
        update = self.table.remove_path if event.kind is CoreEventKind.ENTER else self.table.add_path
        color = g.color(v)
        for i, a in enumerate(nbrs):
            wa = g.weight(v, a) if self.weighted else 1.0
            for b in nbrs[i + 1:]:
                wb = g.weight(v, b) if self.weighted else 1.0
                update(a, b, wa * wb, color)

    # ------------------------------------------------------------------ queries

    def triangle_count(self) -> int:
        return self.c3

    def total_weight(self) -> float:
        if not self.weighted:
            raise FeatureDisabledError("edge weights are disabled")
        return self._total_weight

    def color_census(self) -> Dict[ColorTriple, int]:
        if not self.colors:
            raise FeatureDisabledError("vertex colors are disabled")
        return dict(sorted(self._color_counts.items()))

    def weighted_color_census(self) -> Dict[ColorTriple, float]:
        if not (self.colors and self.weighted):
            raise FeatureDisabledError("weighted color census needs both weights and colors")
        return dict(sorted(self._color_weights.items()))

    def cell_count(self) -> int:
        return len(self.table)

    def space_bound(self) -> int:
        """Sum of C(deg(w), 2) over non-core vertices; the cell count never exceeds it."""
        g = self.graph
        return sum(comb(g.degree(w), 2) for w in g.vertices() if not g.in_core(w))

    def fingerprint(self) -> tuple:
        return (self.c3, tuple(sorted(self._color_counts.items())))

    def table_fingerprint(self) -> tuple:
        """Exact cell contents (counts and color vectors; weights excluded)."""
        return tuple(sorted((key, cell.count, tuple(cell.colors or ())) for key, cell in self.table.entries.items()))

    # ------------------------------------------------------------------ internals

    def _update_paths(self, u: int, v: int, update) -> None:
        g = self.graph
        for a, b in ((u, v), (v, u)):
            if g.in_core(a):
                continue
            w_ab = g.weight(a, b) if self.weighted else 1.0
            color = g.color(a)
            for w in g.adjacency(a):
                if w == b:
                    continue
                w_aw = g.weight(a, w) if self.weighted else 1.0
                update(b, w, w_ab * w_aw, color)

    def _apply(self, u: int, v: int, w_uv: float, tally: EdgeTriangles, sign: int) -> None:
        if tally.count == 0:
            return
        self.c3 += sign * tally.count
        if self.c3 < 0:
            raise InternalInconsistencyError("triangle count became negative")
        if self.weighted:
            self._total_weight += sign * w_uv * tally.weight
        if self.c3 == 0:
            # No triangles left: drop accumulated rounding error.
            self._total_weight = 0.0
            self._color_counts.clear()
            self._color_weights.clear()
            return
        if not self.colors:
            return
        cu, cv = self.graph.color(u), self.graph.color(v)
        for c, n in enumerate(tally.by_color):
            if not n:
                continue
            key = tuple(sorted((cu, cv, c)))
            total = self._color_counts.get(key, 0) + sign * n
            if total < 0:
                raise InternalInconsistencyError(f"color census for {key} became negative")
            if total:
                self._color_counts[key] = total
            else:
                self._color_counts.pop(key, None)
                self._color_weights.pop(key, None)
                continue
            if tally.weight_by_color is not None:
                self._color_weights[key] = (
                    self._color_weights.get(key, 0.0) + sign * w_uv * tally.weight_by_color[c]
                )


__all__ = ["TriangleCounter", "PathTable", "PathCell", "EdgeTriangles"]
