"""Exact l-affine Weyl combinatorics, Jantzen sums and GKM checks."""

from .root_data import RootDatum, build_root_datum

__all__ = ["RootDatum", "build_root_datum"]
__version__ = "0.1.0"
