"""Service layer: the dynamic graph, its statistics and their frontends."""
from .graphcore import DynamicGraph, StatisticsListener, edge_key
from .triangles import TriangleCounter, PathTable, PathCell
from .census import CensusCounter, TriadCensus, NoninducedCounts
from .engine import GraphStatsEngine, StatsSnapshot, Instrumentation
from .settings import Settings, get_settings

__all__ = [
    "DynamicGraph",
    "StatisticsListener",
    "edge_key",
    "TriangleCounter",
    "PathTable",
    "PathCell",
    "CensusCounter",
    "TriadCensus",
    "NoninducedCounts",
    "GraphStatsEngine",
    "StatsSnapshot",
    "Instrumentation",
    "Settings",
    "get_settings",
]
