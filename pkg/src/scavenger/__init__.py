"""Exact rational toolkit for 4-chromatic distance subgraph hunts in Q^3."""

__version__ = "0.1.0"
