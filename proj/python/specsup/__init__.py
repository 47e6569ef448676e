"""Spectral supersaturation toolkit for triangles and bowties."""

from ._specsup import *  # noqa: F401,F403
from ._specsup import Error, Graph

__all__ = [name for name in dir() if not name.startswith("_")]
