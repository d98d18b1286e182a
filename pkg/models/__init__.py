"""Core data structures: the h-index partition and its gradual core."""
from .errors import GraphStatsError
from .gradual import CoreChangeCounters, CoreEvent, CoreEventKind, GradualPartition
from .hindex import HIndexStructure

__all__ = [
    "GraphStatsError",
    "HIndexStructure",
    "GradualPartition",
    "CoreEvent",
    "CoreEventKind",
    "CoreChangeCounters",
]
