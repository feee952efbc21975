"""Exact Ore-degree laboratory for extremal hypergraph problems."""

__version__ = "0.1.0"
