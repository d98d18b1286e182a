"""Console entry point for the hstat command line."""
import sys

from scripts.cli import main

__all__ = ("main",)

if __name__ == "__main__":
    sys.exit(main())
