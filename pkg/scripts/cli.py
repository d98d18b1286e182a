#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""hstat command line: static statistics, stream replay, synthetic graphs,
h-scaling reports and benchmarks.

Results are JSON lines (or CSV) on standard output; diagnostics go to
standard error. Exit codes: 0 ok, 1 check failure or internal error,
2 input error.
"""
from __future__ import annotations

import argparse
import json
import logging
import math
import sys
from typing import List, Optional, TextIO

from models.errors import (
    GraphStatsError,
    InternalInconsistencyError,
    MissingVertexError,
    ParseError,
    SizeLimitError,
)
from services.engine import GraphStatsEngine
from services.generators import (
    MODELS,
    assign_weights,
    build_model,
    insertion_operations,
    random_operation_stream,
    write_edge_list,
)
from services.ingest import OpKind, VertexInterner, iter_operations, read_edge_list, write_operations
from services.oracle import SimpleGraph, oracle_statistics
from services.reports import render_csv, scan_directory
from services.settings import MAX_STAR_ORDER, get_settings
from scripts.bench import run_bench

log = logging.getLogger("hstat.cli")

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2


def _configure_logging(level: str) -> None:
    logging.basicConfig(
        format="%(asctime)s | %(levelname)s | hstat | %(message)s",
        level=getattr(logging, level, logging.INFO),
        stream=sys.stderr,
    )


def _emit(payload: dict, out: Optional[TextIO] = None) -> None:
    (out or sys.stdout).write(json.dumps(payload, sort_keys=False) + "\n")


# ---------------------------------------------------------------------- stats

def cmd_stats(args: argparse.Namespace) -> int:
    try:
        edges = read_edge_list(args.file)
    except ParseError as exc:
        log.error("%s: %s", args.file, exc)
        return EXIT_INPUT_ERROR
    except OSError as exc:
        log.error("Cannot read %s: %s", args.file, exc)
        return EXIT_INPUT_ERROR

    engine = GraphStatsEngine(weighted=args.weighted, census=True, k_star=args.k_star)
    for v in range(edges.n):
        engine.add_vertex(v)
    for u, v, weight in edges.edges:
        engine.add_edge(u, v, weight if args.weighted else None)
    _emit(engine.snapshot().model_dump(exclude_none=True))
    return EXIT_OK


# ---------------------------------------------------------------------- stream

def _compare(engine_stats: dict, oracle: dict) -> List[str]:
    problems = []
    for key, expected in oracle.items():
        actual = engine_stats.get(key)
        if isinstance(expected, float) or isinstance(actual, float):
            numeric = isinstance(actual, (int, float)) and isinstance(expected, (int, float))
            ok = numeric and math.isclose(actual, expected, rel_tol=1e-9, abs_tol=1e-12)
        else:
            ok = actual == expected
        if not ok:
            problems.append(f"{key}: engine={actual!r} oracle={expected!r}")
    return problems


def cmd_stream(args: argparse.Namespace) -> int:
    engine = GraphStatsEngine(
        weighted=args.weighted, colors=args.colors, census=args.census, k_star=args.k_star
    )
    interner = VertexInterner()
    mirror = SimpleGraph() if args.check else None
    skipped = 0

    def resolve(token: str) -> int:
        vid = interner.lookup(token)
        if vid is None:
            raise MissingVertexError(f"vertex {token} was never added")
        return vid

    try:
        with open(args.file, "r", encoding="utf-8") as handle:
            for op in iter_operations(handle):
                if op.kind is OpKind.QUERY:
                    stats = engine.snapshot().model_dump(exclude_none=True)
                    if mirror is not None:
                        oracle = oracle_statistics(
                            mirror,
                            k_star=engine.census.k_star if engine.census else 0,
                            weighted=args.weighted,
                            colors=args.colors,
                            census=args.census,
                        )
                        problems = _compare(stats, oracle)
                        if problems:
                            _emit(stats)
                            log.error("line %d: oracle mismatch: %s", op.line_no, "; ".join(problems))
                            return EXIT_CHECK_FAILED
                    _emit(stats)
                    continue
                try:
                    if op.kind is OpKind.ADD_VERTEX:
                        v = interner.intern(op.ids[0])
                        engine.add_vertex(v, op.color)
                        if mirror is not None:
                            mirror.add_vertex(v, engine.graph.color(v))
                    elif op.kind is OpKind.REMOVE_VERTEX:
                        v = resolve(op.ids[0])
                        engine.remove_vertex(v)
                        if mirror is not None:
                            mirror.remove_vertex(v)
                    elif op.kind is OpKind.ADD_EDGE:
                        u, v = resolve(op.ids[0]), resolve(op.ids[1])
                        engine.add_edge(u, v, op.weight)
                        if mirror is not None:
                            mirror.add_edge(u, v, engine.graph.weight(u, v))
                    else:
                        u, v = resolve(op.ids[0]), resolve(op.ids[1])
                        engine.remove_edge(u, v)
                        if mirror is not None:
                            mirror.remove_edge(u, v)
                except InternalInconsistencyError:
                    raise
                except GraphStatsError as exc:
                    if not args.lenient:
                        log.error("line %d: %s: %s", op.line_no, op.to_line(), exc)
                        return EXIT_INPUT_ERROR
                    skipped += 1
                    log.warning("line %d: skipped %s: %s", op.line_no, op.to_line(), exc)
    except ParseError as exc:
        log.error("%s: %s", args.file, exc)
        return EXIT_INPUT_ERROR
    except SizeLimitError as exc:
        log.error("--check unavailable: %s", exc)
        return EXIT_INPUT_ERROR
    except InternalInconsistencyError as exc:
        log.error("internal inconsistency: %s", exc)
        return EXIT_CHECK_FAILED
    except OSError as exc:
        log.error("Cannot read %s: %s", args.file, exc)
        return EXIT_INPUT_ERROR

    final = engine.snapshot().model_dump(exclude_none=True)
    final.update(engine.instrumentation().model_dump())
    final["skipped"] = skipped
    _emit(final)
    return EXIT_OK


# ---------------------------------------------------------------------- synth

def cmd_synth(args: argparse.Namespace) -> int:
    try:
        if args.model == "ops":
            records = random_operation_stream(
                args.n, args.length, seed=args.seed, weighted=args.weighted,
                colors=args.colors, query_every=args.query_every,
            )
            graph = None
        else:
            graph = build_model(args.model, args.n, seed=args.seed, attach=args.attach,
                                h=args.h, c=args.c, p=args.p)
            if args.weighted:
                assign_weights(graph, args.seed)
    except ValueError as exc:
        log.error("synth %s: %s", args.model, exc)
        return EXIT_INPUT_ERROR

    out = open(args.out, "w", encoding="utf-8") if args.out else sys.stdout
    try:
        if graph is None:
            write_operations(records, out)
        elif args.format == "stream":
            write_operations(insertion_operations(graph, args.query_every), out)
        else:
            header = [f"created by hstat synth {args.model}", f"seed {args.seed}"]
            write_edge_list(out, graph, header)
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


# ---------------------------------------------------------------------- hscaling

def cmd_hscaling(args: argparse.Namespace) -> int:
    workers = args.workers or get_settings().scaling_workers
    try:
        rows, failures = scan_directory(args.directory, workers)
    except OSError as exc:
        log.error("Cannot list %s: %s", args.directory, exc)
        return EXIT_INPUT_ERROR
    text = render_csv(rows)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    if failures:
        log.warning("%d file(s) skipped", len(failures))
    return EXIT_OK


# ---------------------------------------------------------------------- bench

def cmd_bench(args: argparse.Namespace) -> int:
    try:
        report = run_bench(args.spec, args.ops, census=not args.no_census)
    except (ValueError, TypeError) as exc:
        log.error("bench %s: %s", args.spec, exc)
        return EXIT_INPUT_ERROR
    _emit(report.model_dump())
    return EXIT_OK


# ---------------------------------------------------------------------- parser

def _star_order(raw: str) -> int:
    value = int(raw)
    if not 1 <= value <= MAX_STAR_ORDER:
        raise argparse.ArgumentTypeError(f"star order must lie in 1..{MAX_STAR_ORDER}")
    return value


def _color_count(raw: str) -> int:
    value = int(raw)
    if value < 0:
        raise argparse.ArgumentTypeError("number of colors must be non-negative")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hstat", description="Dynamic h-index and subgraph statistics.")
    sub = parser.add_subparsers(dest="command", required=True)

    stats = sub.add_parser("stats", help="statistics of a static edge-list file")
    stats.add_argument("file")
    stats.add_argument("--weighted", action="store_true", help="use the third column as edge weight")
    stats.add_argument("--k-star", type=_star_order, default=None, help="largest star order reported")
    stats.set_defaults(func=cmd_stats)

    stream = sub.add_parser("stream", help="replay an operation stream")
    stream.add_argument("file")
    stream.add_argument("--lenient", action="store_true", help="skip illegal operations instead of aborting")
    stream.add_argument("--colors", type=_color_count, default=0, metavar="K", help="number of vertex colors")
    stream.add_argument("--weighted", action="store_true")
    stream.add_argument("--census", action="store_true", help="maintain the triad census, stars and paths")
    stream.add_argument("--k-star", type=_star_order, default=None)
    stream.add_argument("--check", action="store_true", help="compare every query with brute force")
    stream.set_defaults(func=cmd_stream)

    synth = sub.add_parser("synth", help="generate a synthetic graph or operation stream")
    synth.add_argument("model", choices=MODELS + ("ops",))
    synth.add_argument("--n", type=int, required=True, help="vertex count")
    synth.add_argument("--attach", type=int, default=3, help="ba: edges per new vertex")
    synth.add_argument("--h", type=int, default=4, help="split: clique size")
    synth.add_argument("--c", type=int, default=10, help="clique-plus-isolates: clique size")
    synth.add_argument("--p", type=float, default=0.1, help="gnp: edge probability")
    synth.add_argument("--length", type=int, default=1000, help="ops: number of operations")
    synth.add_argument("--colors", type=_color_count, default=0, help="ops: number of vertex colors")
    synth.add_argument("--query-every", type=int, default=0)
    synth.add_argument("--seed", type=int, default=None)
    synth.add_argument("--weighted", action="store_true")
    synth.add_argument("--format", choices=("edges", "stream"), default="edges")
    synth.add_argument("--out", default=None)
    synth.set_defaults(func=cmd_synth)

    scaling = sub.add_parser("hscaling", help="n, h and log ratios for every file in a directory")
    scaling.add_argument("directory")
    scaling.add_argument("--out", default=None)
    scaling.add_argument("--workers", type=int, default=None)
    scaling.set_defaults(func=cmd_hscaling)

    bench = sub.add_parser("bench", help="time an insertion stream")
    bench.add_argument("spec", help='generator spec, e.g. "ba:n=10000,attach=3,seed=1"')
    bench.add_argument("--ops", type=int, default=None, help="limit the number of insertions")
    bench.add_argument("--no-census", action="store_true")
    bench.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    settings = get_settings()
    _configure_logging(settings.log_level)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT_ERROR
    try:
        return args.func(args)
    except InternalInconsistencyError as exc:
        log.error("internal inconsistency: %s", exc)
        return EXIT_CHECK_FAILED


if __name__ == "__main__":
    sys.exit(main())
