"""Identify polygonal knots against the built-in invariant table."""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .alexander import alexander, determinant
from .bracket import kauffman_bracket, MAX_CROSSINGS
from .diagram import CrossingDiagram, simplify
from .laurent import LaurentPolynomial
from .polygon import PolygonalKnot, reduce_polygon
from .projection import project

KNOWN_LABELS = ("0_1", "3_1", "4_1", "9_35", "9_40", "9_41", "9_47", "12_503")

_EXTRA_SEED_TRIES = 6  # extra projections before giving up on an unknot


@dataclass(frozen=True)
class KnotName:
    label: str
    certainty: str  # "certified" or "alexander-match-only"
    candidates: tuple = ()

    def __str__(self):
        return self.label


class KnotTable:
    """Alexander (and optional bracket) values for the known knots."""

    def __init__(self, entries):
        self.entries = entries

    @staticmethod
    def load() -> "KnotTable":
        text = resources.files("coxknot").joinpath(
            "data/alexander_table.json").read_text()
        raw = json.loads(text)
        entries = {}
        for label, rec in raw["knots"].items():
            if rec.get("alexander") is None:
                entries[label] = None  # label known, invariant unavailable
                continue
            alex = LaurentPolynomial({int(e): c
                                      for e, c in rec["alexander"].items()})
            brackets = tuple(LaurentPolynomial({int(e): c for e, c in b.items()})
                             for b in rec.get("brackets", []))
            entries[label] = {
                "alexander": alex,
                "determinant": rec["determinant"],
                "brackets": brackets,
            }
        return KnotTable(entries)

    def alexander_matches(self, poly: LaurentPolynomial):
        return [label for label, rec in self.entries.items()
                if rec is not None and rec["alexander"] == poly]


_table = None


def knot_table() -> KnotTable:
    global _table
    if _table is None:
        _table = KnotTable.load()
    return _table


def identify_diagram(diagram: CrossingDiagram, simplified=None) -> KnotName:
    """Name a knot diagram via Alexander, bracket as tie-breaker."""
    table = knot_table()
    d = simplified if simplified is not None else simplify(diagram)
    if len(d) == 0:
        return KnotName("0_1", "certified")
    poly = alexander(d)
    matches = table.alexander_matches(poly)
    if poly == LaurentPolynomial.constant(1):
        # Alexander triviality never certifies the unknot by itself
        return KnotName("unknown", "alexander-match-only", ("0_1",))
    if not matches:
        return KnotName("unknown", "alexander-match-only")
    if len(matches) == 1:
        return KnotName(matches[0], "certified")
    if len(d) <= MAX_CROSSINGS:
        b = kauffman_bracket(d)
        narrowed = [m for m in matches
                    if table.entries[m]["brackets"] and
                    b in table.entries[m]["brackets"]]
        if len(narrowed) == 1:
            return KnotName(narrowed[0], "certified")
    return KnotName(matches[0], "alexander-match-only", tuple(matches))


def identify(knot: PolygonalKnot, seed: int = 0) -> KnotName:
    """project -> simplify -> alexander pipeline with table lookup.

    The polygon is first reduced by exact triangle moves (type-preserving);
    an unknot is certified only by simplification to zero crossings.
    """
    knot.validate()
    reduced = reduce_polygon(knot)
    d = simplify(project(reduced, seed))
    if len(d) == 0:
        return KnotName("0_1", "certified")
    poly = alexander(d)
    if poly == LaurentPolynomial.constant(1):
        # try harder to expose the unknot before reporting unknown
        for k in range(1, _EXTRA_SEED_TRIES + 1):
            d2 = simplify(project(reduced, seed + 1000 * k))
            if len(d2) == 0:
                return KnotName("0_1", "certified")
        return KnotName("unknown", "alexander-match-only", ("0_1",))
    return identify_diagram(d, simplified=d)
