"""Exact invariants of reduced plane curves: Tjurina numbers, syzygies, Poincaré and Betti
polynomials, freeness, and the addition identities for unions of curves."""

from .arrgeo import Curve, classify_singularities, intersection_count_resultant
from .invariants import QuadraticPoly, betti_poly, dpw_freeness, poincare_poly, split_poincare
from .lattice import LineArrangement, pi_poly
from .milnor import mdr, total_tjurina
from .qpoly import TriPoly, parse_poly

__all__ = [
    "Curve",
    "LineArrangement",
    "QuadraticPoly",
    "TriPoly",
    "betti_poly",
    "classify_singularities",
    "dpw_freeness",
    "intersection_count_resultant",
    "mdr",
    "parse_poly",
    "pi_poly",
    "poincare_poly",
    "split_poincare",
    "total_tjurina",
]

__version__ = "0.1.0"
