"""Exact checking of multiplier infinitesimal bialgebras and derivator Lie bialgebras."""

from .algebra import Vec, flip, cycle, orbit_sum, tensor
from .checks import CheckReport

__all__ = ["Vec", "flip", "cycle", "orbit_sum", "tensor", "CheckReport"]
