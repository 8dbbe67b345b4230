"""Closed integer polygons in 3-space with exact predicates.

All tests here are integer-exact (orientation determinants only, no
division), so embeddedness and triangle-move legality are decided without
rounding error.  Coordinates stay well inside int64 for every polygon this
package produces, which is what the numba kernel in ``_kernels`` relies on.
"""

from __future__ import annotations

from dataclasses import dataclass


def _sub(a, b):
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2])


def _cross(a, b):
    return (a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0])


def _dot(a, b):
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def orient3d(a, b, c, d) -> int:
    """Sign of det(b-a, c-a, d-a)."""
    v = _dot(_cross(_sub(b, a), _sub(c, a)), _sub(d, a))
    return (v > 0) - (v < 0)


def collinear(a, b, c) -> bool:
    return _cross(_sub(b, a), _sub(c, a)) == (0, 0, 0)


def _between(a, b, p) -> bool:
    """p on the closed segment [a, b], assuming a, b, p collinear."""
    return all(min(a[i], b[i]) <= p[i] <= max(a[i], b[i]) for i in range(3))


def segments_intersect(p1, q1, p2, q2) -> bool:
    """Do closed 3D segments [p1,q1] and [p2,q2] share a point?"""
    d1, d2 = _sub(q1, p1), _sub(q2, p2)
    n = _cross(d1, d2)
    if n != (0, 0, 0):
        # Skew or properly crossing in a common plane.
        if _dot(n, _sub(p2, p1)) != 0:
            return False  # skew lines
        # Coplanar, non-parallel: intersect iff each segment straddles the
        # other's supporting line (closed test).
        m1 = _cross(d1, _sub(p2, p1))
        m2 = _cross(d1, _sub(q2, p1))
        if _dot(m1, m2) > 0:
            return False
        m3 = _cross(d2, _sub(p1, p2))
        m4 = _cross(d2, _sub(q1, p2))
        if _dot(m3, m4) > 0:
            return False
        return True
    # Parallel directions.
    if _cross(d1, _sub(p2, p1)) != (0, 0, 0):
        return False  # distinct parallel lines
    return (_between(p1, q1, p2) or _between(p1, q1, q2)
            or _between(p2, q2, p1) or _between(p2, q2, q1))


def point_in_triangle(p, a, b, c) -> bool:
    """p inside the closed triangle abc; all four points must be coplanar
    and the triangle non-degenerate."""
    n = _cross(_sub(b, a), _sub(c, a))
    s1 = _dot(_cross(_sub(b, a), _sub(p, a)), n)
    s2 = _dot(_cross(_sub(c, b), _sub(p, b)), n)
    s3 = _dot(_cross(_sub(a, c), _sub(p, c)), n)
    return s1 >= 0 and s2 >= 0 and s3 >= 0


def segment_avoids_triangle(p, q, a, b, c, allowed=None) -> bool:
    """True iff closed segment [p,q] meets closed triangle abc at most in
    the single point ``allowed`` (None: any contact fails).

    The triangle must be non-degenerate.
    """
    d1 = orient3d(a, b, c, p)
    d2 = orient3d(a, b, c, q)
    if d1 != 0 and d2 != 0 and d1 == d2:
        return True  # strictly on one side
    if d1 != 0 and d2 != 0:
        # Proper plane crossing at a point interior to [p,q]; any contact
        # with the triangle there cannot be at an endpoint of the segment.
        s1 = orient3d(p, q, a, b)
        s2 = orient3d(p, q, b, c)
        s3 = orient3d(p, q, c, a)
        hits = (s1 >= 0 and s2 >= 0 and s3 >= 0) or (s1 <= 0 and s2 <= 0 and s3 <= 0)
        return not hits
    if d1 == 0 and d2 == 0:
        return _coplanar_segment_avoids(p, q, a, b, c, allowed)
    # Exactly one endpoint in the plane: contact possible only at it.
    end = p if d1 == 0 else q
    if not point_in_triangle(end, a, b, c):
        return True
    return end == allowed


def _coplanar_segment_avoids(p, q, a, b, c, allowed):
    edges = ((a, b), (b, c), (c, a))
    p_in = point_in_triangle(p, a, b, c)
    q_in = point_in_triangle(q, a, b, c)
    if p_in and q_in:
        return False
    if not p_in and not q_in:
        # Contact iff the segment cuts through; any boundary hit fails.
        return not any(segments_intersect(p, q, u, v) for u, v in edges)
    end, other = (p, q) if p_in else (q, p)
    if end != allowed:
        return False
    # end == allowed is a triangle vertex; the rest of the segment must
    # leave immediately: no contact between the open remainder and the
    # triangle.  The remainder re-enters (or slides along an edge) iff some
    # point of the segment other than `end` lies in the triangle, which for
    # a convex triangle happens iff the far endpoint is inside (ruled out)
    # or the segment hits the boundary at a second point.
    for u, v in edges:
        if not segments_intersect(p, q, u, v):
            continue
        # Allowed only if the contact with this edge is exactly {end}.
        if _edge_contact_is_single_point(p, q, u, v, end):
            continue
        return False
    return True


def _edge_contact_is_single_point(p, q, u, v, pt) -> bool:
    """Closed segments [p,q] and [u,v] (known to intersect) meet exactly
    in {pt}."""
    du = _sub(v, u)
    dp = _sub(q, p)
    if _cross(dp, du) == (0, 0, 0) and _cross(du, _sub(p, u)) == (0, 0, 0):
        # Collinear overlap: a single point only if the segments just touch
        # at pt, i.e. pt is an endpoint of both and they point away.
        touch_pairs = [(x, y) for x in (p, q) for y in (u, v) if x == y == pt]
        if not touch_pairs:
            return False
        far_p = q if p == pt else p
        far_u = v if u == pt else u
        # Opposite directions from pt -> overlap is just the point.
        return _dot(_sub(far_p, pt), _sub(far_u, pt)) <= 0
    # Non-collinear: unique intersection point; check it equals pt, which
    # lies on both segments iff pt is on both supporting lines.
    if _cross(_sub(pt, p), dp) != (0, 0, 0) or not _between(p, q, pt):
        return False
    if _cross(_sub(pt, u), du) != (0, 0, 0) or not _between(u, v, pt):
        return False
    return True


@dataclass(frozen=True)
class PolygonalKnot:
    """Closed polygon given by its cyclic vertex list (integer points)."""

    vertices: tuple

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(tuple(int(x) for x in v)
                                                   for v in self.vertices))

    def __len__(self):
        return len(self.vertices)

    def segments(self):
        n = len(self.vertices)
        for i in range(n):
            yield self.vertices[i], self.vertices[(i + 1) % n]

    def validate(self) -> None:
        """Raise ValueError unless the polygon is a closed embedded curve."""
        verts = self.vertices
        n = len(verts)
        if n < 3:
            raise ValueError("degenerate input: fewer than 3 vertices")
        for i in range(n):
            if verts[i] == verts[(i + 1) % n]:
                raise ValueError(f"degenerate input: repeated vertex at {i}")
        segs = list(self.segments())
        for i in range(n):
            p1, q1 = segs[i]
            for j in range(i + 1, n):
                p2, q2 = segs[j]
                adjacent = (j == i + 1) or (i == 0 and j == n - 1)
                if adjacent:
                    shared = q1 if j == i + 1 else p1
                    # They meet at the shared vertex; forbid extra overlap.
                    other1 = p1 if j == i + 1 else q1
                    far2 = q2 if p2 == shared else p2
                    if collinear(other1, shared, far2) and \
                            _dot(_sub(other1, shared), _sub(far2, shared)) > 0:
                        raise ValueError(
                            f"degenerate input: segments {i},{j} overlap")
                    continue
                if segments_intersect(p1, q1, p2, q2):
                    raise ValueError(
                        f"degenerate input: segments {i} and {j} intersect")


def _vertex_removable(verts, i) -> bool:
    n = len(verts)
    a, b, c = verts[(i - 1) % n], verts[i], verts[(i + 1) % n]
    if a == c:
        return False
    if collinear(a, b, c):
        return True
    for j in range(n):
        if j in ((i - 1) % n, i):
            continue
        p, q = verts[j], verts[(j + 1) % n]
        if j == (i + 1) % n:
            allowed = c  # segment leaving c may touch the triangle at c
        elif (j + 1) % n == (i - 1) % n:
            allowed = a  # segment arriving at a
        else:
            allowed = None
        if not segment_avoids_triangle(p, q, a, b, c, allowed):
            return False
    return True


def reduce_polygon(knot: PolygonalKnot, use_kernel: bool | None = None) -> PolygonalKnot:
    """Shrink the polygon by exact triangle moves; knot type is preserved.

    A vertex is deleted when the triangle spanned with its neighbours meets
    no other part of the polygon, so the deletion is an isotopy across an
    empty disk.  Iterates to a fixpoint.
    """
    from . import _accel
    if use_kernel is None:
        use_kernel = _accel.KERNELS_ENABLED
    verts = list(knot.vertices)
    if use_kernel and _accel.KERNELS_ENABLED:
        verts = _accel.reduce_polygon_kernel(verts)
        return PolygonalKnot(tuple(verts))
    changed = True
    while changed and len(verts) > 3:
        changed = False
        i = 0
        while i < len(verts) and len(verts) > 3:
            if _vertex_removable(verts, i):
                del verts[i]
                changed = True
            else:
                i += 1
    return PolygonalKnot(tuple(verts))
