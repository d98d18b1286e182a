"""Command-line frontends."""

from . import bench
from . import cli

__all__ = ["bench", "cli"]
