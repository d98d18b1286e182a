"""h-scaling rows and CSV rendering for corpora of edge-list files."""
from __future__ import annotations

import csv
import io
import logging
import math
import os
from concurrent.futures import ThreadPoolExecutor
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel

from models.errors import GraphStatsError
from models.hindex import HIndexStructure

from .ingest import read_edge_list

log = logging.getLogger(__name__)

CSV_COLUMNS = ("name", "n", "h", "log_n", "log_h", "log_h_over_log_n")
SUMMARY_LABELS = ("min", "median", "mean", "max")


class ScalingRow(BaseModel):
    name: str
    n: int
    h: int
    log_n: Optional[float] = None
    log_h: Optional[float] = None
    ratio: Optional[float] = None


def scaling_row(name: str, n: int, h: int) -> ScalingRow:
    """Natural-log columns; the ratio is left empty when ``h <= 1`` or ``n <= 1``."""
    log_n = math.log(n) if n > 0 else None
    log_h = math.log(h) if h > 0 else None
    ratio = log_h / log_n if h > 1 and n > 1 else None
    return ScalingRow(name=name, n=n, h=h, log_n=log_n, log_h=log_h, ratio=ratio)


def h_index_of_degrees(degrees: Iterable[int]) -> int:
    index = HIndexStructure()
    for i, d in enumerate(degrees):
        index.insert(i, d)
    return index.h()


def compute_h_for_file(path: str) -> ScalingRow:
    edges = read_edge_list(path)
    degree = [0] * edges.n
    for u, v, _ in edges.edges:
        degree[u] += 1
        degree[v] += 1
    return scaling_row(os.path.basename(path), edges.n, h_index_of_degrees(degree))


def scan_directory(directory: str, workers: int = 4) -> Tuple[List[ScalingRow], List[Tuple[str, str]]]:
    """Rows for every regular file in ``directory`` (sorted by name) and per-file failures."""
    paths = sorted(
        os.path.join(directory, name)
        for name in os.listdir(directory)
        if os.path.isfile(os.path.join(directory, name)) and not name.startswith(".")
    )
    rows: List[ScalingRow] = []
    failures: List[Tuple[str, str]] = []

    def _one(path: str):
        try:
            return compute_h_for_file(path), None
        except (GraphStatsError, OSError, UnicodeDecodeError) as exc:
            return None, str(exc)

    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        for path, (row, error) in zip(paths, pool.map(_one, paths)):
            if error is not None:
                log.error("Skipping %s: %s", path, error)
                failures.append((os.path.basename(path), error))
            else:
                rows.append(row)
    return rows, failures


def _summary(values: Sequence[Optional[float]]) -> List[Optional[float]]:
    present = np.array([v for v in values if v is not None], dtype=float)
    if present.size == 0:
        return [None] * len(SUMMARY_LABELS)
    return [float(np.min(present)), float(np.median(present)), float(np.mean(present)), float(np.max(present))]


def summary_rows(rows: Sequence[ScalingRow]) -> List[List[Optional[float]]]:
    """Per-column min/median/mean/max over the numeric columns, one list per statistic."""
    columns = [
        [float(r.n) for r in rows],
        [float(r.h) for r in rows],
        [r.log_n for r in rows],
        [r.log_h for r in rows],
        [r.ratio for r in rows],
    ]
    per_column = [_summary(c) for c in columns]
    return [[col[i] for col in per_column] for i in range(len(SUMMARY_LABELS))]


def _fmt(value: Optional[float]) -> str:
    return "" if value is None else f"{value:.4f}"


def render_csv(rows: Sequence[ScalingRow], summary: bool = True) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow([row.name, row.n, row.h, _fmt(row.log_n), _fmt(row.log_h), _fmt(row.ratio)])
    if summary and rows:
        for label, stats in zip(SUMMARY_LABELS, summary_rows(rows)):
            writer.writerow([label, *(_fmt(v) for v in stats)])
    return buffer.getvalue()


__all__ = [
    "ScalingRow",
    "scaling_row",
    "h_index_of_degrees",
    "compute_h_for_file",
    "scan_directory",
    "summary_rows",
    "render_csv",
    "CSV_COLUMNS",
]
