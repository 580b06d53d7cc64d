"""Vertex-weighted H-chromatic functions, their p-basis expansions and complete invariants."""

from .graphs import Dag, Poset, SimpleGraph, WeightedGraph
from .invariants import HostSpec, chromatic_function, power_sum_expansion
from .polynomials import Poly, VarRegistry

__version__ = "0.1.0"

__all__ = [
    "Dag",
    "HostSpec",
    "Poly",
    "Poset",
    "SimpleGraph",
    "VarRegistry",
    "WeightedGraph",
    "chromatic_function",
    "power_sum_expansion",
]
