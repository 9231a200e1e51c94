"""Presentation layer for tomolight CSV outputs."""

from .render import IncompleteGrid, PlotSpec, SchemaMismatch, read_table, render

__version__ = "0.1.0"

__all__ = [
    "IncompleteGrid",
    "PlotSpec",
    "SchemaMismatch",
    "read_table",
    "render",
]
