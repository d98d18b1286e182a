"""Brute-force reference statistics.

Everything here is computed by exhaustive enumeration over a plain edge
dictionary keyed by ``frozenset`` pairs. Nothing is shared with the dynamic
engine, so agreement between the two is independent evidence.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Set, Tuple

from models.errors import SizeLimitError

from .settings import get_settings


@dataclass
class SimpleGraph:
    colors: Dict[int, Optional[int]] = field(default_factory=dict)
    weights: Dict[FrozenSet[int], float] = field(default_factory=dict)

    def add_vertex(self, v: int, color: Optional[int] = None) -> None:
        self.colors[v] = color

    def remove_vertex(self, v: int) -> None:
        del self.colors[v]

    def add_edge(self, u: int, v: int, weight: float = 1.0) -> None:
        self.weights[frozenset((u, v))] = weight

    def remove_edge(self, u: int, v: int) -> None:
        del self.weights[frozenset((u, v))]

    def has_edge(self, u: int, v: int) -> bool:
        return frozenset((u, v)) in self.weights

    def weight(self, u: int, v: int) -> float:
        return self.weights[frozenset((u, v))]

    @property
    def vertices(self) -> List[int]:
        return sorted(self.colors)

    def neighbors(self, v: int) -> Set[int]:
        return {w for e in self.weights if v in e for w in e if w != v}

    def degree(self, v: int) -> int:
        return sum(1 for e in self.weights if v in e)

    def edge_list(self) -> List[Tuple[int, int]]:
        return sorted(tuple(sorted(e)) for e in self.weights)


def _guard(g: SimpleGraph, limit: Optional[int]) -> None:
    limit = limit if limit is not None else get_settings().oracle_max_vertices
    if len(g.colors) > limit:
        raise SizeLimitError(f"oracle enumeration limited to {limit} vertices, graph has {len(g.colors)}")


def _triangles(g: SimpleGraph) -> Iterable[Tuple[int, int, int]]:
    for a, b, c in itertools.combinations(g.vertices, 3):
        if g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c):
            yield a, b, c


def h_index_brute(g: SimpleGraph) -> int:
    degrees = sorted((g.degree(v) for v in g.vertices), reverse=True)
    h = 0
    for i, d in enumerate(degrees, start=1):
        if d >= i:
            h = i
    return h


def h_index_of_values(values: Iterable[int]) -> int:
    ordered = sorted(values, reverse=True)
    return max((i for i, d in enumerate(ordered, start=1) if d >= i), default=0)


def triangles_brute(g: SimpleGraph, limit: Optional[int] = None) -> int:
    _guard(g, limit)
    return sum(1 for _ in _triangles(g))


def weighted_brute(g: SimpleGraph, limit: Optional[int] = None) -> float:
    _guard(g, limit)
    return sum((g.weight(a, b) * g.weight(b, c) * g.weight(a, c) for a, b, c in _triangles(g)), 0.0)


def colored_brute(g: SimpleGraph, limit: Optional[int] = None) -> Dict[Tuple[int, int, int], int]:
    _guard(g, limit)
    counts = Counter(tuple(sorted(g.colors[x] for x in t)) for t in _triangles(g))
    return dict(sorted(counts.items()))


def weighted_colored_brute(g: SimpleGraph, limit: Optional[int] = None) -> Dict[Tuple[int, int, int], float]:
    _guard(g, limit)
    totals: Dict[Tuple[int, int, int], float] = {}
    for a, b, c in _triangles(g):
        key = tuple(sorted((g.colors[a], g.colors[b], g.colors[c])))
        totals[key] = totals.get(key, 0.0) + g.weight(a, b) * g.weight(b, c) * g.weight(a, c)
    return dict(sorted(totals.items()))


def census_brute(g: SimpleGraph, limit: Optional[int] = None) -> Tuple[int, int, int, int]:
    """Induced three-vertex census ``(g0, g1, g2, g3)``."""
    _guard(g, limit)
    census = [0, 0, 0, 0]
    for a, b, c in itertools.combinations(g.vertices, 3):
        census[g.has_edge(a, b) + g.has_edge(b, c) + g.has_edge(a, c)] += 1
    return tuple(census)


def noninduced_brute(g: SimpleGraph, limit: Optional[int] = None) -> Tuple[int, int, int, int]:
    """Per-triple tallies of (triples, edges, two-paths, triangles) contained in each triple."""
    _guard(g, limit)
    triples = edges = paths = tris = 0
    for a, b, c in itertools.combinations(g.vertices, 3):
        e = g.has_edge(a, b) + g.has_edge(b, c) + g.has_edge(a, c)
        triples += 1
        edges += e
        paths += e * (e - 1) // 2
        tris += e == 3
    return triples, edges, paths, tris


def p2_brute(g: SimpleGraph) -> int:
    """Pairs of distinct edges sharing exactly one endpoint."""
    return sum(1 for e, f in itertools.combinations(g.weights, 2) if len(e & f) == 1)


def stars_brute(g: SimpleGraph, i: int) -> int:
    """Number of ``K_{1,i}`` subgraphs, by enumerating leaf sets at every center."""
    return sum(
        sum(1 for _ in itertools.combinations(sorted(g.neighbors(v)), i))
        for v in g.vertices
    )


def p3_brute(g: SimpleGraph, limit: Optional[int] = None) -> int:
    """Simple paths on four vertices, each counted once."""
    _guard(g, limit)
    total = 0
    for quad in itertools.combinations(g.vertices, 4):
        for a, b, c, d in itertools.permutations(quad):
            if a < d and g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(c, d):
                total += 1
    return total


def q_brute(g: SimpleGraph, max_edges: int = 120) -> int:
    """Three-edge subsets forming a path (counted once) or a triangle (counted three times)."""
    if len(g.weights) > max_edges:
        raise SizeLimitError(f"q enumeration limited to {max_edges} edges")
    total = 0
    for trio in itertools.combinations(g.weights, 3):
        touched = Counter(v for e in trio for v in e)
        shape = sorted(touched.values())
        if shape == [2, 2, 2]:
            total += 3
        elif shape == [1, 1, 2, 2]:
            total += 1
    return total


def c4_brute(g: SimpleGraph, limit: Optional[int] = None) -> int:
    _guard(g, limit)
    total = 0
    for a, b, c, d in itertools.combinations(g.vertices, 4):
        for w, x, y, z in ((a, b, c, d), (a, b, d, c), (a, c, b, d)):
            if g.has_edge(w, x) and g.has_edge(x, y) and g.has_edge(y, z) and g.has_edge(z, w):
                total += 1
    return total


def p4_brute(g: SimpleGraph, limit: Optional[int] = None) -> int:
    """Simple paths on five vertices, each counted once."""
    _guard(g, limit)
    adjacency = {v: g.neighbors(v) for v in g.vertices}

    def extend(path: List[int]) -> int:
        if len(path) == 5:
            return 1
        return sum(extend(path + [w]) for w in adjacency[path[-1]] if w not in path)

    return sum(extend([v]) for v in g.vertices) // 2


def paw_brute(g: SimpleGraph, limit: Optional[int] = None) -> int:
    """Triangles with one pendant edge attached (not necessarily induced)."""
    _guard(g, limit)
    total = 0
    for tri in _triangles(g):
        for t in tri:
            total += sum(1 for w in g.neighbors(t) if w not in tri)
    return total


def endpoint_paths_brute(g: SimpleGraph, v: int) -> int:
    """Two-edge paths having ``v`` as an endpoint."""
    return sum(1 for w in g.neighbors(v) for x in g.neighbors(w) if x != v)


def path_square_identity(g: SimpleGraph, limit: Optional[int] = None) -> Tuple[int, int]:
    """Both sides of the sum-of-squares relation for endpoint path counts.

    ``sum_v P_v**2 = 2 p4 + 2 p2 + 6 s3 + 8 c4 + 6 c3 + 4 paws``
    """
    lhs = sum(endpoint_paths_brute(g, v) ** 2 for v in g.vertices)
    rhs = (
        2 * p4_brute(g, limit)
        + 2 * p2_brute(g)
        + 6 * stars_brute(g, 3)
        + 8 * c4_brute(g, limit)
        + 6 * triangles_brute(g, limit)
        + 4 * paw_brute(g, limit)
    )
    return lhs, rhs


def is_h_partition(values: Mapping[int, int], high: Set[int]) -> bool:
    h = len(high)
    if any(values[x] < h for x in high):
        return False
    return all(values[x] <= h for x in values if x not in high)


def gradual_replay(steps: Iterable[Tuple[Mapping[int, int], Set[int]]]) -> List[Set[int]]:
    """Replay the core rules over a sequence of ``(values, high)`` states.

    A member stays in the core while it stays in ``high``; a member of
    ``high`` joins the core in the first state where its value reaches
    ``2 * len(high)``.
    """
    core: Set[int] = set()
    history: List[Set[int]] = []
    for values, high in steps:
        threshold = 2 * len(high)
        core = {x for x in core if x in high}
        core |= {x for x in high if values[x] >= threshold}
        history.append(set(core))
    return history


def oracle_statistics(g: SimpleGraph, k_star: int = 4, weighted: bool = False,
                      colors: int = 0, census: bool = True,
                      limit: Optional[int] = None) -> dict:
    """All engine statistics, brute forced, keyed like the engine snapshot."""
    data = {
        "n": len(g.colors),
        "m": len(g.weights),
        "h": h_index_brute(g),
        "c3": triangles_brute(g, limit),
    }
    if census:
        data.update(zip(("g0", "g1", "g2", "g3"), census_brute(g, limit)))
        data["p2"] = p2_brute(g)
        data["p3"] = p3_brute(g, limit)
        for i in range(1, k_star + 1):
            data[f"s{i}"] = stars_brute(g, i)
    if weighted:
        data["total_weight"] = weighted_brute(g, limit)
    if colors:
        data["color_census"] = {",".join(map(str, k)): v for k, v in colored_brute(g, limit).items()}
    return data


__all__ = [
    "SimpleGraph",
    "h_index_brute",
    "h_index_of_values",
    "triangles_brute",
    "weighted_brute",
    "colored_brute",
    "weighted_colored_brute",
    "census_brute",
    "noninduced_brute",
    "p2_brute",
    "stars_brute",
    "p3_brute",
    "q_brute",
    "c4_brute",
    "p4_brute",
    "paw_brute",
    "endpoint_paths_brute",
    "path_square_identity",
    "is_h_partition",
    "gradual_replay",
    "oracle_statistics",
]
