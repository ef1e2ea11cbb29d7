"""Exact Fuss-Catalan combinatorics for crystallographic root systems."""
from __future__ import annotations

__version__ = "0.1.0"

from .rootsys import TypeSpec, build_root_system  # noqa: F401
