"""Finite transit functions, betweenness axioms and convex geometries."""

from ._backend import BACKEND
from .core import (
    AxiomVerdict,
    Betweenness,
    GroundSet,
    Subset,
    TransitFunction,
    make_transit_function,
    minimal_transit_function,
    random_transit_function,
    to_betweenness,
    transit_set,
)

__all__ = [
    "AxiomVerdict",
    "BACKEND",
    "Betweenness",
    "GroundSet",
    "Subset",
    "TransitFunction",
    "make_transit_function",
    "minimal_transit_function",
    "random_transit_function",
    "to_betweenness",
    "transit_set",
]

__version__ = "0.1.0"
