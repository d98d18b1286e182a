"""Synthetic graphs and operation streams.

Random models come from networkx; the extremal constructions are built
directly on ``nx.Graph`` so every generator returns the same type.
"""
from __future__ import annotations

import logging
import random
from typing import Iterator, List, Optional, Sequence, TextIO, Tuple

import networkx as nx

from .ingest import OperationRecord, OpKind

log = logging.getLogger(__name__)

MODELS = ("ba", "split", "clique-plus-isolates", "gnp")


def barabasi_albert(n: int, attach: int, seed: Optional[int] = None) -> nx.Graph:
    """Preferential attachment with ``attach`` edges per new vertex (degree exponent about 3)."""
    if attach < 1 or attach >= n:
        raise ValueError(f"ba needs 1 <= attach < n, got attach={attach}, n={n}")
    return nx.barabasi_albert_graph(n, attach, seed=seed)


def gnp(n: int, p: float, seed: Optional[int] = None) -> nx.Graph:
    if n < 0 or not 0.0 <= p <= 1.0:
        raise ValueError(f"gnp needs n >= 0 and 0 <= p <= 1, got n={n}, p={p}")
    return nx.gnp_random_graph(n, p, seed=seed)


def split_graph(h: int, n: int) -> nx.Graph:
    """Clique on ``0..h-1`` plus ``n - h`` independent vertices joined to every clique vertex.

    Clique vertices have degree ``n - 1`` and the others degree ``h``, so the
    h-index is exactly ``h``.
    """
    if h < 1 or n <= h:
        raise ValueError(f"split needs 1 <= h < n, got h={h}, n={n}")
    graph = nx.complete_graph(h)
    graph.add_nodes_from(range(h, n))
    graph.add_edges_from((u, c) for u in range(h, n) for c in range(h))
    return graph


def clique_plus_isolates(c: int, n: int) -> nx.Graph:
    """``K_c`` on ``0..c-1`` and ``n - c`` isolated vertices; the h-index is ``c - 1``."""
    if c < 1 or n < c:
        raise ValueError(f"clique-plus-isolates needs 1 <= c <= n, got c={c}, n={n}")
    graph = nx.complete_graph(c)
    graph.add_nodes_from(range(c, n))
    return graph


def assign_weights(graph: nx.Graph, seed: Optional[int] = None) -> nx.Graph:
    """Attach uniform [0, 1) weights under the ``weight`` edge attribute."""
    rng = random.Random(seed)
    for u, v in sorted(graph.edges(), key=lambda e: (min(e), max(e))):
        graph.edges[u, v]["weight"] = rng.random()
    return graph


def write_edge_list(out: TextIO, graph: nx.Graph, header: Sequence[str] = ()) -> None:
    """Write ``U V [W]`` lines, isolated vertices as lone tokens, after ``#`` header lines."""
    for line in header:
        out.write(f"# {line}\n")
    out.write(f"# {graph.number_of_nodes()} {graph.number_of_edges()}\n")
    for node in sorted(graph.nodes()):
        if graph.degree(node) == 0:
            out.write(f"{node}\n")
    weighted = any("weight" in data for _, _, data in graph.edges(data=True))
    for line in nx.generate_edgelist(graph, data=["weight"] if weighted else False):
        out.write(f"{line}\n")


def insertion_order(graph: nx.Graph) -> List[Tuple[int, int]]:
    """Edges ordered as if vertices arrived by increasing id."""
    return sorted(
        ((min(u, v), max(u, v)) for u, v in graph.edges()),
        key=lambda e: (e[1], e[0]),
    )


def insertion_operations(graph: nx.Graph, query_every: int = 0) -> Iterator[OperationRecord]:
    """Replay ``graph`` as a vertex-arrival stream ending in one query."""
    added = set()
    emitted = 0
    for node in sorted(n for n in graph.nodes() if graph.degree(n) == 0):
        added.add(node)
        yield OperationRecord(OpKind.ADD_VERTEX, (str(node),))
    for u, v in insertion_order(graph):
        for x in (u, v):
            if x not in added:
                added.add(x)
                yield OperationRecord(OpKind.ADD_VERTEX, (str(x),))
        weight = graph.edges[u, v].get("weight")
        yield OperationRecord(OpKind.ADD_EDGE, (str(u), str(v)), weight=weight)
        emitted += 1
        if query_every and emitted % query_every == 0:
            yield OperationRecord(OpKind.QUERY)
    yield OperationRecord(OpKind.QUERY)


def random_operation_stream(n_vertices: int, length: int, seed: Optional[int] = None,
                            weighted: bool = False, colors: int = 0,
                            query_every: int = 0) -> List[OperationRecord]:
    """A feasible mixed update stream over at most ``n_vertices`` vertices.

    Every operation is legal when applied in order. Edge insertions are
    favored over deletions so the graph stays reasonably dense.
    """
    if n_vertices < 2:
        raise ValueError("random streams need at least two vertices")
    rng = random.Random(seed)
    present: List[int] = []
    edges: set = set()
    degree = {}
    ops: List[OperationRecord] = []

    while len(ops) < length:
        roll = rng.random()
        absent = [v for v in range(n_vertices) if v not in degree]
        if absent and (roll < 0.15 or len(present) < 2):
            v = rng.choice(absent)
            present.append(v)
            degree[v] = 0
            color = rng.randrange(colors) if colors else None
            ops.append(OperationRecord(OpKind.ADD_VERTEX, (str(v),), color=color))
        elif roll < 0.2:
            isolated = [v for v in present if degree[v] == 0]
            if not isolated:
                continue
            v = rng.choice(isolated)
            present.remove(v)
            del degree[v]
            ops.append(OperationRecord(OpKind.REMOVE_VERTEX, (str(v),)))
        elif roll < 0.65 or not edges:
            if len(present) < 2:
                continue
            u, v = rng.sample(present, 2)
            key = (min(u, v), max(u, v))
            if key in edges:
                continue
            edges.add(key)
            degree[u] += 1
            degree[v] += 1
            weight = rng.random() if weighted else None
            ops.append(OperationRecord(OpKind.ADD_EDGE, (str(u), str(v)), weight=weight))
        else:
            u, v = rng.choice(sorted(edges))
            edges.discard((u, v))
            degree[u] -= 1
            degree[v] -= 1
            ops.append(OperationRecord(OpKind.REMOVE_EDGE, (str(u), str(v))))
        if query_every and len(ops) % query_every == 0:
            ops.append(OperationRecord(OpKind.QUERY))
    ops.append(OperationRecord(OpKind.QUERY))
    log.debug("generated %d operations over %d vertices (seed=%s)", len(ops), n_vertices, seed)
    return ops


def build_model(model: str, n: int, seed: Optional[int] = None, attach: int = 3,
                h: int = 4, c: int = 10, p: float = 0.1) -> nx.Graph:
    if model == "ba":
        return barabasi_albert(n, attach, seed)
    if model == "split":
        return split_graph(h, n)
    if model == "clique-plus-isolates":
        return clique_plus_isolates(c, n)
    if model == "gnp":
        return gnp(n, p, seed)
    raise ValueError(f"unknown model {model!r}; expected one of {', '.join(MODELS)}")


__all__ = [
    "MODELS",
    "barabasi_albert",
    "gnp",
    "split_graph",
    "clique_plus_isolates",
    "assign_weights",
    "write_edge_list",
    "insertion_order",
    "insertion_operations",
    "random_operation_stream",
    "build_model",
]
