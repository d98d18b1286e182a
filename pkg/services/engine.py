"""Engine wiring and report models."""
from __future__ import annotations

import logging
from typing import Dict, Optional

from pydantic import BaseModel, Field

from .census import CensusCounter
from .graphcore import DynamicGraph
from .settings import get_settings
from .triangles import TriangleCounter

log = logging.getLogger(__name__)


def color_key(triple) -> str:
    return ",".join(str(c) for c in triple)


class StatsSnapshot(BaseModel):
    n: int
    m: int
    h: int
    core_size: int
    c3: int
    g0: Optional[int] = None
    g1: Optional[int] = None
    g2: Optional[int] = None
    g3: Optional[int] = None
    p2: Optional[int] = None
    p3: Optional[int] = None
    s1: Optional[int] = None
    s2: Optional[int] = None
    s3: Optional[int] = None
    s4: Optional[int] = None
    s5: Optional[int] = None
    s6: Optional[int] = None
    s7: Optional[int] = None
    s8: Optional[int] = None
    total_weight: Optional[float] = None
    color_census: Optional[Dict[str, int]] = Field(
        None, description="Triangle counts keyed by sorted color triple, e.g. '0,0,1'"
    )
    weighted_color_census: Optional[Dict[str, float]] = None

    def to_json(self) -> str:
        return self.model_dump_json(exclude_none=True)


class Instrumentation(BaseModel):
    core_additions: int
    core_removals: int
    harmonic_sum: float
    churn_ratio: float
    epochs: int
    updates: int
    probe_counter: int
    path_cells: int
    hindex_accesses: int


class GraphStatsEngine:
    """A :class:`DynamicGraph` with the triangle and census counters attached."""

    def __init__(self, weighted: bool = False, colors: int = 0, census: bool = True,
                 k_star: Optional[int] = None) -> None:
        self.graph = DynamicGraph(weighted=weighted, colors=colors)
        self.triangles = TriangleCounter(self.graph)
        self.graph.register(self.triangles)
        self.census: Optional[CensusCounter] = None
        if census:
            if k_star is None:
                k_star = get_settings().star_order
            self.census = CensusCounter(self.graph, self.triangles, k_star)
            self.graph.register(self.census)

    # Update surface mirrors DynamicGraph.
    def add_vertex(self, v: int, color: Optional[int] = None) -> None:
        self.graph.add_vertex(v, color)

    def remove_vertex(self, v: int) -> None:
        self.graph.remove_vertex(v)

    def add_edge(self, u: int, v: int, weight: Optional[float] = None) -> None:
        self.graph.add_edge(u, v, weight)

    def remove_edge(self, u: int, v: int) -> None:
        self.graph.remove_edge(u, v)

    def snapshot(self) -> StatsSnapshot:
        g = self.graph
        data = {
            "n": g.n(),
            "m": g.m(),
            "h": g.h(),
            "core_size": g.partition.core_size(),
            "c3": self.triangles.triangle_count(),
        }
        if self.census is not None:
            data.update(self.census.induced_census()._asdict())
            data["p2"] = self.census.p2
            data["p3"] = self.census.path3_count()
            for i in range(1, self.census.k_star + 1):
                data[f"s{i}"] = self.census.star_count(i)
        if g.weighted:
            data["total_weight"] = self.triangles.total_weight()
        if g.colors:
            data["color_census"] = {color_key(k): v for k, v in self.triangles.color_census().items()}
            if g.weighted:
                data["weighted_color_census"] = {
                    color_key(k): v for k, v in self.triangles.weighted_color_census().items()
                }
        return StatsSnapshot(**data)

    def instrumentation(self) -> Instrumentation:
        counters = self.graph.partition.counters()
        return Instrumentation(
            core_additions=counters.core_additions,
            core_removals=counters.core_removals,
            harmonic_sum=counters.harmonic_sum,
            churn_ratio=counters.churn_ratio(),
            epochs=counters.epoch_count,
            updates=counters.updates,
            probe_counter=self.triangles.probe_counter,
            path_cells=self.triangles.cell_count(),
            hindex_accesses=self.graph.partition.base.accesses,
        )

    def state_fingerprint(self) -> tuple:
        """Hashable summary of the graph and every maintained statistic.

        Core membership and the structures keyed on it (path table, stored
        endpoint path counts) are history dependent and left out.
        """
        g = self.graph
        adjacency = tuple(sorted((v, tuple(sorted(g.adjacency(v))), g.color(v)) for v in g.vertices()))
        parts = (
            adjacency,
            g.h(),
            self.triangles.fingerprint(),
        )
        if self.census is not None:
            parts += (self.census.fingerprint(),)
        return parts


__all__ = ["GraphStatsEngine", "StatsSnapshot", "Instrumentation", "color_key"]
