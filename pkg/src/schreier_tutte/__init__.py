"""Tutte polynomials of the Schreier graphs of the Grigorchuk and Basilica groups."""
from .bipoly import BiPoly, LaurentPoly, UniPoly, cycle_poly
from .multigraph import MultiGraph, block_decompose, build
from .schreier import BASILICA, GRIGORCHUK, schreier_graph
from .tutte import TutteMethod, tutte

__all__ = [
    "BiPoly", "LaurentPoly", "UniPoly", "cycle_poly", "MultiGraph", "block_decompose", "build",
    "BASILICA", "GRIGORCHUK", "schreier_graph", "TutteMethod", "tutte",
]
__version__ = "0.1.0"
