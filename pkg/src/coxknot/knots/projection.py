"""Exact generic projection of a polygonal knot to a crossing diagram.

Directions are drawn from a deterministic seeded sequence of integer
vectors; a direction is accepted only if the projection is generic (no
segment parallel to it, all crossings proper and distinct, no vertex on a
foreign segment), verified with exact integer/rational predicates.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .polygon import PolygonalKnot
from .diagram import CrossingDiagram

MAX_ATTEMPTS = 1000

_BASE_DIRECTIONS = [
    (1, 2, 5), (2, 5, 1), (5, 1, 2), (1, 3, 7), (3, 7, 1), (7, 1, 3),
    (2, 3, 7), (1, 4, 9), (3, 5, 11), (2, 7, 11),
]


def direction_sequence(seed: int):
    """Deterministic stream of candidate projection directions."""
    yield from _BASE_DIRECTIONS
    rng = random.Random(seed)
    while True:
        d = (rng.randint(-29, 29), rng.randint(-29, 29), rng.randint(-29, 29))
        if d != (0, 0, 0):
            yield d


def _cross3(a, b):
    return (a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0])


def _dot3(a, b):
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def _plane_basis(d):
    """Integer u, v with u.d = v.d = 0 and det(u, v, d) > 0."""
    axis = min(range(3), key=lambda i: abs(d[i]))
    e = tuple(1 if i == axis else 0 for i in range(3))
    u = _cross3(d, e)
    v = _cross3(d, u)
    if _dot3(_cross3(u, v), d) < 0:
        u, v = v, u
    return u, v


def _cross2(a, b):
    return a[0] * b[1] - a[1] * b[0]


def _dot2(a, b):
    return a[0] * b[0] + a[1] * b[1]


class NotGeneric(Exception):
    pass


def _project_along(knot: PolygonalKnot, d):
    """Crossing data for direction d, or raise NotGeneric."""
    verts = knot.vertices
    n = len(verts)
    u, v = _plane_basis(d)
    q = [(_dot3(u, p), _dot3(v, p)) for p in verts]
    h = [_dot3(d, p) for p in verts]

    for i in range(n):
        if q[i] == q[(i + 1) % n]:
            raise NotGeneric("segment parallel to direction")
    if len(set(q)) != n:
        raise NotGeneric("vertices project together")
    # no vertex strictly inside a foreign projected segment
    for j in range(n):
        a, b = q[j], q[(j + 1) % n]
        r = (b[0] - a[0], b[1] - a[1])
        for k in range(n):
            if k in (j, (j + 1) % n):
                continue
            w = (q[k][0] - a[0], q[k][1] - a[1])
            if _cross2(r, w) == 0 and 0 < _dot2(r, w) < _dot2(r, r):
                raise NotGeneric("vertex on a segment")

    crossings = []  # (segment i, param on i, segment j, param on j, i over)
    seen_points: dict = {}
    for i in range(n):
        a, b = q[i], q[(i + 1) % n]
        r = (b[0] - a[0], b[1] - a[1])
        for j in range(i + 1, n):
            if j == i + 1 or (i == 0 and j == n - 1):
                continue  # adjacent: only the shared vertex, by the checks above
            c, e = q[j], q[(j + 1) % n]
            s = (e[0] - c[0], e[1] - c[1])
            denom = _cross2(r, s)
            ca = (c[0] - a[0], c[1] - a[1])
            if denom == 0:
                if _cross2(r, ca) == 0:
                    # same line: any range overlap is non-generic
                    pr = [_dot2(r, (x - a[0], y - a[1])) for x, y in (c, e)]
                    if max(min(pr), 0) <= min(max(pr), _dot2(r, r)):
                        raise NotGeneric("collinear overlap")
                continue
            t = Fraction(_cross2(ca, s), denom)
            w = Fraction(_cross2(ca, r), denom)
            if t <= 0 or t >= 1 or w <= 0 or w >= 1:
                if (0 <= t <= 1) and (0 <= w <= 1):
                    raise NotGeneric("crossing at a vertex")
                continue
            px = Fraction(a[0]) + t * r[0]
            py = Fraction(a[1]) + t * r[1]
            if (px, py) in seen_points:
                raise NotGeneric("triple point")
            seen_points[(px, py)] = (i, j)
            h1 = Fraction(h[i]) + t * (h[(i + 1) % n] - h[i])
            h2 = Fraction(h[j]) + w * (h[(j + 1) % n] - h[j])
            if h1 == h2:
                raise NotGeneric("height tie at crossing")
            crossings.append((i, t, j, w, h1 > h2))
    return q, crossings


def project(knot: PolygonalKnot, seed: int = 0) -> CrossingDiagram:
    """Project along the first generic direction of the seeded sequence.

    The same knot and seed always give the identical diagram.
    """
    knot.validate()
    verts = knot.vertices
    n = len(verts)
    attempts = 0
    for d in direction_sequence(seed):
        attempts += 1
        if attempts > MAX_ATTEMPTS:
            raise RuntimeError("genericity search exhausted")
        try:
            q, crossings = _project_along(knot, d)
        except NotGeneric:
            continue
        return _build_diagram(q, crossings, n)
    raise RuntimeError("genericity search exhausted")  # pragma: no cover


def _build_diagram(q, crossings, n) -> CrossingDiagram:
    if not crossings:
        return CrossingDiagram([])
    # passages in traversal order: walk segments, crossings sorted by param
    per_segment: dict[int, list] = {}
    for cid, (i, t, j, w, i_over) in enumerate(crossings):
        per_segment.setdefault(i, []).append((t, cid, True))
        per_segment.setdefault(j, []).append((w, cid, False))
    passages = []  # (crossing id, is_first_strand)
    for i in range(n):
        for t, cid, first in sorted(per_segment.get(i, [])):
            passages.append((cid, first))

    def seg_dir(i):
        a, b = q[i], q[(i + 1) % n]
        return (b[0] - a[0], b[1] - a[1])

    signs = {}
    over_flags = {}  # (cid, is_first) -> strand is over
    for cid, (i, t, j, w, i_over) in enumerate(crossings):
        d_i, d_j = seg_dir(i), seg_dir(j)
        d_over, d_under = (d_i, d_j) if i_over else (d_j, d_i)
        signs[cid] = 1 if _cross2(d_over, d_under) > 0 else -1
        over_flags[(cid, True)] = i_over
        over_flags[(cid, False)] = not i_over
    pass_over = [over_flags[(cid, first)] for cid, first in passages]
    return CrossingDiagram.from_passages(
        [c for c, _ in passages], pass_over, signs)
