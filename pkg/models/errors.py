"""Exception hierarchy shared by the statistics engine and its frontends."""
from __future__ import annotations

from typing import Optional


class GraphStatsError(RuntimeError):
    """Base class for every error raised by the engine."""


class DuplicateElementError(GraphStatsError):
    """Raised when an element is inserted twice."""


class MissingElementError(GraphStatsError):
    """Raised when an operation names an element that is not stored."""


class NegativeValueError(GraphStatsError):
    """Raised when a value would be negative."""


class NonZeroValueError(GraphStatsError):
    """Raised when a value-zero removal targets an element with a nonzero value."""


class ValueUnderflowError(GraphStatsError):
    """Raised when decrementing an element whose value is already zero."""


class DuplicateVertexError(DuplicateElementError):
    """Raised when a vertex is added twice."""


class MissingVertexError(MissingElementError):
    """Raised when an operation names an unknown vertex."""


class NonZeroDegreeError(NonZeroValueError):
    """Raised when removing a vertex that still has incident edges."""


class SelfLoopError(GraphStatsError):
    """Raised when an edge would join a vertex to itself."""


class DuplicateEdgeError(DuplicateElementError):
    """Raised when an edge is inserted twice."""


class MissingEdgeError(MissingElementError):
    """Raised when removing an edge that is not stored."""


class ColorError(GraphStatsError):
    """Raised for colors outside ``0..k-1`` or colors given while coloring is off."""


class InvalidWeightError(GraphStatsError):
    """Raised for non-finite edge weights."""


class FeatureDisabledError(GraphStatsError):
    """Raised when querying a statistic the engine was built without."""


class InternalInconsistencyError(GraphStatsError):
    """Raised when a maintained counter would leave its valid range."""


class SizeLimitError(GraphStatsError):
    """Raised when a brute-force oracle is asked to enumerate a graph that is too large."""


class ParseError(GraphStatsError):
    """Raised for malformed edge-list or operation-stream input."""

    def __init__(self, message: str, line_no: Optional[int] = None) -> None:
        self.line_no = line_no
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)


__all__ = [
    "GraphStatsError",
    "DuplicateElementError",
    "MissingElementError",
    "NegativeValueError",
    "NonZeroValueError",
    "ValueUnderflowError",
    "DuplicateVertexError",
    "MissingVertexError",
    "NonZeroDegreeError",
    "SelfLoopError",
    "DuplicateEdgeError",
    "MissingEdgeError",
    "ColorError",
    "InvalidWeightError",
    "FeatureDisabledError",
    "InternalInconsistencyError",
    "SizeLimitError",
    "ParseError",
]
