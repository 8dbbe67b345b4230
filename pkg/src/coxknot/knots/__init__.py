"""Knot identification: exact projection, diagrams, invariants."""

from .polygon import PolygonalKnot, reduce_polygon
from .projection import project
from .diagram import CrossingDiagram, simplify
from .alexander import alexander, determinant, NotAKnot
from .bracket import kauffman_bracket, TooManyCrossings
from .laurent import LaurentPolynomial
from .identify import identify, identify_diagram, KnotName, knot_table

__all__ = [
    "PolygonalKnot", "reduce_polygon", "project", "CrossingDiagram",
    "simplify", "alexander", "determinant", "NotAKnot", "kauffman_bracket",
    "TooManyCrossings", "LaurentPolynomial", "identify", "identify_diagram",
    "KnotName", "knot_table",
]
