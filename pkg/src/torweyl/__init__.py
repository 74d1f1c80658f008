"""Exact computations for level-one Weyl modules over toroidal Lie algebras."""

from torweyl.rootdata import RootSystem, build_root_system, parse_type
from torweyl.torlie import TorElt

__all__ = ["RootSystem", "build_root_system", "parse_type", "TorElt"]
__version__ = "0.1.0"
