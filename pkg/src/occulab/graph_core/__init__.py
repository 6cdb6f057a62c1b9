"""Graphs, graph6, named constructions, canonical forms and generation."""

from .canonical import canonical_form, canonical_labeling, is_isomorphic
from .generate import generate_regular
from .graph import INFINITE, Graph, girth, regular_degree
from .graph6 import Graph6Error, parse_graph6, read_graph6_lines, write_graph6
from .named import named_graph, parse_graph_spec

__all__ = [
    "Graph", "INFINITE", "girth", "regular_degree",
    "Graph6Error", "parse_graph6", "write_graph6", "read_graph6_lines",
    "named_graph", "parse_graph_spec",
    "canonical_form", "canonical_labeling", "is_isomorphic",
    "generate_regular",
]
