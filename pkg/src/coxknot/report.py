"""Gallery reports and geometry documents shared by the CLI and service."""

from __future__ import annotations

from . import coxeter as cx
from .knots import PolygonalKnot, identify


def gallery_report(word: str, repeat: int = 1, seed: int = 0) -> dict:
    """Diagnostics for a word and its repetition, as a JSON-ready dict."""
    cx.check_word(word)
    if repeat < 1:
        raise ValueError("repeat must be a positive integer")
    full = word * repeat
    order = cx.element_order(word)
    closed = cx.is_closed(full)
    self_avoiding = cx.is_self_avoiding(full)
    knot = None
    certainty = None
    if closed and self_avoiding and len(full) >= 3:
        pts = cx.centroid_path(full)
        name = identify(PolygonalKnot(tuple(pts[:-1])), seed=seed)
        knot = name.label
        certainty = name.certainty
    return {
        "word": word,
        "repeat": repeat,
        "is_closed": closed,
        "order": order,
        "is_self_avoiding": self_avoiding,
        "d_count": cx.d_count(full),
        "cube_visits": cx.cube_visits(full),
        "knot": knot,
        "knot_certainty": certainty,
        "reduced_word": cx.reduce_word(word),
    }


def geometry_document(word: str, repeat: int = 1, seed: int = 0) -> dict:
    """Chamber tetrahedra and centroid polyline for the repeated gallery.

    All coordinates are integers; chamber count is len(word)*repeat + 1.
    """
    report = gallery_report(word, repeat, seed)
    gallery = cx.gallery_of(word * repeat)
    chambers = []
    for ch in gallery.chambers:
        verts = ch.vertices()
        chambers.append({
            "vertices": {lbl: list(v) for lbl, v in verts.items()},
            "centroid": list(ch.centroid()),
        })
    return {
        "word": word,
        "repeat": repeat,
        "chambers": chambers,
        "path": [list(ch.centroid()) for ch in gallery.chambers],
        "diagnostics": report,
    }
