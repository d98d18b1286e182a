"""Insertion-stream timing with engine instrumentation."""
from __future__ import annotations

import logging
import time
from typing import Dict, Optional

from pydantic import BaseModel

from services.engine import GraphStatsEngine
from services.generators import build_model, insertion_order

log = logging.getLogger("hstat.bench")

SPEC_KEYS = ("n", "seed", "attach", "h", "c", "p")


class BenchReport(BaseModel):
    spec: str
    n: int
    ops: int
    wall_seconds: float
    per_op_seconds: float
    per_op: str
    h: int
    c3: int
    max_core_size: int
    probe_counter: int
    probes_per_update: float
    core_additions: int
    core_removals: int
    harmonic_sum: float
    churn_ratio: float
    epochs: int
    path_cells: int
    space_bound: int
    hindex_accesses: int


def format_dt(dt: float, sign: bool = False) -> str:
    if abs(dt) > 10e-3:
        return ("%+.1f ms" if sign else "%.1f ms") % (dt * 1e3)
    if abs(dt) > 10e-6:
        return ("%+.1f us" if sign else "%.1f us") % (dt * 1e6)
    return ("%+.0f ns" if sign else "%.0f ns") % (dt * 1e9)


def parse_generator_spec(spec: str) -> Dict[str, object]:
    """``"ba:n=10000,attach=3,seed=1"`` -> ``{"model": "ba", "n": 10000, ...}``."""
    model, _, rest = spec.partition(":")
    params: Dict[str, object] = {"model": model.strip()}
    for item in filter(None, (p.strip() for p in rest.split(","))):
        key, sep, raw = item.partition("=")
        if not sep:
            raise ValueError(f"generator parameter {item!r} is not key=value")
        key = key.strip()
        if key not in SPEC_KEYS:
            raise ValueError(f"unknown generator parameter {key!r}")
        params[key] = float(raw) if key == "p" else int(raw)
    if "n" not in params:
        raise ValueError("generator spec needs n=")
    return params


def run_bench(spec: str, ops: Optional[int] = None, census: bool = True) -> BenchReport:
    """Insert the generated graph edge by edge (vertices first) and time the edge updates."""
    params = parse_generator_spec(spec)
    graph = build_model(**params)
    order = insertion_order(graph)
    if ops is not None:
        order = order[:ops]

    engine = GraphStatsEngine(census=census)
    for v in sorted(graph.nodes()):
        engine.add_vertex(v)

    partition = engine.graph.partition
    max_core = partition.core_size()
    started = time.perf_counter()
    for u, v in order:
        engine.add_edge(u, v)
        size = partition.core_size()
        if size > max_core:
            max_core = size
    wall = time.perf_counter() - started

    done = len(order)
    inst = engine.instrumentation()
    per_op = wall / done if done else 0.0
    report = BenchReport(
        spec=spec,
        n=graph.number_of_nodes(),
        ops=done,
        wall_seconds=wall,
        per_op_seconds=per_op,
        per_op=format_dt(per_op),
        h=engine.graph.h(),
        c3=engine.triangles.triangle_count(),
        max_core_size=max_core,
        probe_counter=inst.probe_counter,
        probes_per_update=inst.probe_counter / done if done else 0.0,
        core_additions=inst.core_additions,
        core_removals=inst.core_removals,
        harmonic_sum=inst.harmonic_sum,
        churn_ratio=inst.churn_ratio,
        epochs=inst.epochs,
        path_cells=inst.path_cells,
        space_bound=engine.triangles.space_bound(),
        hindex_accesses=inst.hindex_accesses,
    )
    log.info("%s: %d insertions in %s (%s per op)", spec, done, format_dt(wall), report.per_op)
    return report


__all__ = ["BenchReport", "format_dt", "parse_generator_spec", "run_bench"]
