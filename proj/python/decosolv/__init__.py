"""Decoherence and short-time solvation timescales for solute/bath systems."""

from ._decosolv import *  # noqa: F401,F403
from ._decosolv import __version__  # noqa: F401
