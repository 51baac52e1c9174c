"""Seidel switching toolkit."""

from ._core import *  # noqa: F401,F403
from ._core import Graph, NaeFormula, SwitchkitError, TooLarge

__all__ = [name for name in dir() if not name.startswith("_")]
