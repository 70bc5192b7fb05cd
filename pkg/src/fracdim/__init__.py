"""Exact fractional metric dimension of graphs, corona products and lexicographic products."""

from .graph_core import UNREACHABLE, Graph, generate
from .products import corona, lexicographic
from .ratlp import CoveringLP, LPSolution, WeightFunction, solve_covering_lp, verify_certificates
from .theorems import dim_f, l_f, verify

__version__ = "0.1.0"

__all__ = [
    "UNREACHABLE",
    "CoveringLP",
    "Graph",
    "LPSolution",
    "WeightFunction",
    "corona",
    "dim_f",
    "generate",
    "l_f",
    "lexicographic",
    "solve_covering_lp",
    "verify",
    "verify_certificates",
]
