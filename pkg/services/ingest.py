"""Edge-list and operation-stream parsing.

Vertex tokens are arbitrary non-whitespace strings, interned to integer ids
in order of first appearance. ``#`` starts a comment anywhere on a line.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterable, Iterator, List, Optional, Set, TextIO, Tuple

from models.errors import ParseError

log = logging.getLogger(__name__)


class VertexInterner:
    """Bidirectional token <-> id map; ids are dense and start at 0."""

    def __init__(self) -> None:
        self._ids: Dict[str, int] = {}
        self._tokens: List[str] = []

    def intern(self, token: str) -> int:
        vid = self._ids.get(token)
        if vid is None:
            vid = len(self._tokens)
            self._ids[token] = vid
            self._tokens.append(token)
        return vid

    def lookup(self, token: str) -> Optional[int]:
        return self._ids.get(token)

    def token(self, vid: int) -> str:
        return self._tokens[vid]

    def __len__(self) -> int:
        return len(self._tokens)


def _tokens(line: str) -> List[str]:
    return line.split("#", 1)[0].split()


def _parse_weight(raw: str, line_no: int) -> float:
    try:
        weight = float(raw)
    except ValueError:
        raise ParseError(f"weight {raw!r} is not a number", line_no) from None
    if not math.isfinite(weight):
        raise ParseError(f"weight {raw!r} is not finite", line_no)
    return weight


def _parse_color(raw: str, line_no: int) -> int:
    try:
        color = int(raw)
    except ValueError:
        raise ParseError(f"color {raw!r} is not an integer", line_no) from None
    if color < 0:
        raise ParseError(f"color {color} is negative", line_no)
    return color


@dataclass
class EdgeList:
    """A static graph read from an edge-list file."""

    interner: VertexInterner = field(default_factory=VertexInterner)
    edges: List[Tuple[int, int, Optional[float]]] = field(default_factory=list)
    duplicates: int = 0
    self_loops: int = 0

    @property
    def n(self) -> int:
        return len(self.interner)

    @property
    def m(self) -> int:
        return len(self.edges)


def parse_edge_list(lines: Iterable[str]) -> EdgeList:
    """Parse ``U V [W]`` lines; a lone token declares an isolated vertex.

    Duplicate edges keep their first occurrence and self-loops are dropped;
    both are logged as warnings.
    """
    result = EdgeList()
    seen: Set[Tuple[int, int]] = set()
    for line_no, line in enumerate(lines, start=1):
        parts = _tokens(line)
        if not parts:
            continue
        if len(parts) > 3:
            raise ParseError(f"expected 'U V [WEIGHT]', got {len(parts)} tokens", line_no)
        u = result.interner.intern(parts[0])
        if len(parts) == 1:
            continue
        weight = _parse_weight(parts[2], line_no) if len(parts) == 3 else None
        v = result.interner.intern(parts[1])
        if u == v:
            result.self_loops += 1
            log.warning("line %d: self-loop at %s dropped", line_no, parts[0])
            continue
        key = (u, v) if u < v else (v, u)
        if key in seen:
            result.duplicates += 1
            log.warning("line %d: duplicate edge %s-%s ignored", line_no, parts[0], parts[1])
            continue
        seen.add(key)
        result.edges.append((u, v, weight))
    return result


def read_edge_list(path: str) -> EdgeList:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_edge_list(handle)


class OpKind(str, Enum):
    ADD_VERTEX = "+v"
    REMOVE_VERTEX = "-v"
    ADD_EDGE = "+e"
    REMOVE_EDGE = "-e"
    QUERY = "?"


_ARITY = {
    OpKind.ADD_VERTEX: (1, 2),
    OpKind.REMOVE_VERTEX: (1, 1),
    OpKind.ADD_EDGE: (2, 3),
    OpKind.REMOVE_EDGE: (2, 2),
    OpKind.QUERY: (0, 0),
}


@dataclass(frozen=True)
class OperationRecord:
    kind: OpKind
    ids: Tuple[str, ...] = ()
    weight: Optional[float] = None
    color: Optional[int] = None
    line_no: int = 0

    def to_line(self) -> str:
        parts = [self.kind.value, *self.ids]
        if self.kind is OpKind.ADD_VERTEX and self.color is not None:
            parts.append(str(self.color))
        if self.kind is OpKind.ADD_EDGE and self.weight is not None:
            parts.append(repr(self.weight))
        return " ".join(parts)


def parse_operation(line: str, line_no: int = 0) -> Optional[OperationRecord]:
    """Parse one stream line; blank and comment-only lines give ``None``."""
    parts = _tokens(line)
    if not parts:
        return None
    try:
        kind = OpKind(parts[0])
    except ValueError:
        raise ParseError(f"unknown operation {parts[0]!r}", line_no) from None
    args = parts[1:]
    low, high = _ARITY[kind]
    if not low <= len(args) <= high:
        raise ParseError(f"{kind.value} takes {low}..{high} arguments, got {len(args)}", line_no)
    if kind is OpKind.ADD_VERTEX:
        color = _parse_color(args[1], line_no) if len(args) == 2 else None
        return OperationRecord(kind, (args[0],), color=color, line_no=line_no)
    if kind is OpKind.ADD_EDGE:
        weight = _parse_weight(args[2], line_no) if len(args) == 3 else None
        return OperationRecord(kind, (args[0], args[1]), weight=weight, line_no=line_no)
    return OperationRecord(kind, tuple(args), line_no=line_no)


def iter_operations(lines: Iterable[str]) -> Iterator[OperationRecord]:
    for line_no, line in enumerate(lines, start=1):
        record = parse_operation(line, line_no)
        if record is not None:
            yield record


def write_operations(records: Iterable[OperationRecord], out: TextIO) -> int:
    count = 0
    for record in records:
        out.write(record.to_line() + "\n")
        count += 1
    return count


__all__ = [
    "VertexInterner",
    "EdgeList",
    "parse_edge_list",
    "read_edge_list",
    "OpKind",
    "OperationRecord",
    "parse_operation",
    "iter_operations",
    "write_operations",
]
