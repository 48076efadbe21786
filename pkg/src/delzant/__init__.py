"""Exact-arithmetic toolkit for reflexive Delzant polytopes and reflexive
GKM graphs: edge-length sums, normal contributions, f/h-vector identities,
index bounds, and Weyl-orbit graph constructions."""

from .polytope import Halfspace, Polytope, cube, cross_polytope, simplex_cpn
from .gkm import GkmGraph
from .report import VerificationReport

__all__ = [
    "Halfspace",
    "Polytope",
    "GkmGraph",
    "VerificationReport",
    "cube",
    "cross_polytope",
    "simplex_cpn",
]

__version__ = "0.1.0"
