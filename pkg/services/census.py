"""Three-vertex census, star counts and four-vertex path counts.

All edge deltas are evaluated on the graph as it stands before the update
(degrees ``d_u, d_v`` and endpoint path counts ``P_u, P_v``). ``P_x`` is
stored only for core vertices and computed from the neighborhood otherwise.
"""
from __future__ import annotations

import logging
from math import comb
from typing import Dict, List, NamedTuple, Optional

from models.errors import InternalInconsistencyError
from models.gradual import CoreEvent, CoreEventKind

from .graphcore import DynamicGraph, StatisticsListener
from .settings import MAX_STAR_ORDER
from .triangles import TriangleCounter

log = logging.getLogger(__name__)

DEFAULT_STAR_ORDER = 4


class TriadCensus(NamedTuple):
    g0: int
    g1: int
    g2: int
    g3: int


class NoninducedCounts(NamedTuple):
    triples: int
    one_edge: int
    two_path: int
    triangle: int


class CensusCounter(StatisticsListener):
    """Maintain p2, q, star accumulators and per-core endpoint path counts."""

    def __init__(self, graph: DynamicGraph, triangles: TriangleCounter,
                 k_star: int = DEFAULT_STAR_ORDER) -> None:
        if not 1 <= k_star <= MAX_STAR_ORDER:
            raise ValueError(f"k_star must lie in 1..{MAX_STAR_ORDER}, got {k_star}")
        self.graph = graph
        self.triangles = triangles
        self.k_star = k_star
        self.p2 = 0
        self.q = 0
        self.endpoint_paths: Dict[int, int] = {}
        # star_acc[i] = sum over vertices of C(deg, i); index 0 unused
        self.star_acc: List[int] = [0] * (k_star + 1)

    # ------------------------------------------------------------------ listener hooks

    def on_edge_pre_insert(self, u: int, v: int, weight: float) -> None:
        g = self.graph
        nu, nv = g.adjacency(u), g.adjacency(v)
        du, dv = len(nu), len(nv)
        pu, pv = self._endpoint_paths_of(u), self._endpoint_paths_of(v)

        self.q += du * dv + pu + pv
        self.p2 += du + dv
        for i in range(1, self.k_star + 1):
            self.star_acc[i] += comb(du, i - 1) + comb(dv, i - 1)

        for w in g.partition.iter_core():
            if w == u:
                delta = dv
            elif w == v:
                delta = du
            else:
                delta = (w in nu) + (w in nv)
            if delta:
                self.endpoint_paths[w] += delta

    def on_edge_pre_delete(self, u: int, v: int) -> None:
        g = self.graph
        nu, nv = g.adjacency(u), g.adjacency(v)
        du, dv = len(nu), len(nv)
        pu, pv = self._endpoint_paths_of(u), self._endpoint_paths_of(v)

        self.q -= (du - 1) * (dv - 1) + (pu - dv + 1) + (pv - du + 1)
        self.p2 -= du + dv - 2
        for i in range(1, self.k_star + 1):
            self.star_acc[i] -= comb(du - 1, i - 1) + comb(dv - 1, i - 1)
        if self.q < 0 or self.p2 < 0 or min(self.star_acc) < 0:
            raise InternalInconsistencyError("census accumulator became negative")

        for w in g.partition.iter_core():
            if w == u:
                delta = dv - 1
            elif w == v:
                delta = du - 1
            else:
                delta = (w in nu) + (w in nv)
            if delta:
                self.endpoint_paths[w] -= delta

    def on_core_event(self, event: CoreEvent) -> None:
        v = event.element
        if event.kind is CoreEventKind.ENTER:
            self.endpoint_paths[v] = self._count_endpoint_paths(v)
        else:
            self.endpoint_paths.pop(v, None)

    # ------------------------------------------------------------------ queries

    def induced_census(self) -> TriadCensus:
        n, m = self.graph.n(), self.graph.m()
        g3 = self.triangles.triangle_count()
        g2 = self.p2 - 3 * g3
        g1 = m * (n - 2) - (2 * g2 + 3 * g3) if n >= 2 else 0
        g0 = comb(n, 3) - (g1 + g2 + g3)
        census = TriadCensus(g0, g1, g2, g3)
        if min(census) < 0:
            raise InternalInconsistencyError(f"negative triad census {census}")
        return census

    def noninduced_counts(self) -> NoninducedCounts:
        n, m = self.graph.n(), self.graph.m()
        return NoninducedCounts(
            comb(n, 3),
            m * (n - 2) if n >= 2 else 0,
            self.p2,
            self.triangles.triangle_count(),
        )

    def star_count(self, i: int) -> int:
        if not 1 <= i <= self.k_star:
            raise ValueError(f"star order {i} outside 1..{self.k_star}")
        return self.star_acc[i]

    def path3_count(self) -> int:
        p3 = self.q - 3 * self.triangles.triangle_count()
        if p3 < 0:
            raise InternalInconsistencyError(f"negative four-vertex path count {p3}")
        return p3

    def endpoint_paths_of(self, v: int) -> Optional[int]:
        """Stored value for a core vertex, ``None`` otherwise."""
        return self.endpoint_paths.get(v)

    def fingerprint(self) -> tuple:
        return (self.p2, self.q, tuple(self.star_acc))

    # ------------------------------------------------------------------ internals

    def _endpoint_paths_of(self, v: int) -> int:
        stored = self.endpoint_paths.get(v)
        if stored is not None:
            return stored
        return self._count_endpoint_paths(v)

    def _count_endpoint_paths(self, v: int) -> int:
        g = self.graph
        return sum(g.degree(w) - 1 for w in g.adjacency(v))


__all__ = ["CensusCounter", "TriadCensus", "NoninducedCounts", "DEFAULT_STAR_ORDER"]
