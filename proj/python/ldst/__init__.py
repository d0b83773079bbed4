"""Linear-time low-degree spanning trees of 2-edge-connected graphs."""

from ._core import *  # noqa: F401,F403
from . import _core as _core

__all__ = [name for name in dir(_core) if not name.startswith("_")]
__version__ = "0.1.0"
