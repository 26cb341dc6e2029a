"""Planar regular and biregular cages: constructions, bounds, certification and exhaustive search."""

from __future__ import annotations

from .bounds import BoundReport, CageParams, InfeasibleTriplet
from .graph import GraphError, SimpleGraph, from_edge_list

__all__ = ["BoundReport", "CageParams", "GraphError", "InfeasibleTriplet", "SimpleGraph", "from_edge_list"]
