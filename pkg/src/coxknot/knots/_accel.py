"""Numba kernel for the polygon triangle-move reduction.

The pure fallback is the tuple-based implementation in ``polygon.py``; this
module is an int64 scalar port of the same exact predicates.  Set
``COXKNOT_PURE_PYTHON=1`` to disable the kernel (the benchmark and the
cross-checking tests run both paths).
"""

from __future__ import annotations

import os

import numpy as np

KERNELS_ENABLED = False

if os.environ.get("COXKNOT_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from numba import njit
        KERNELS_ENABLED = True
    except ImportError:  # pragma: no cover - numba is a declared dependency
        def njit(*a, **k):
            def wrap(f):
                return f
            return wrap if not (a and callable(a[0])) else a[0]
else:
    def njit(*a, **k):
        def wrap(f):
            return f
        return wrap if not (a and callable(a[0])) else a[0]


@njit(cache=True)
def _orient3d(ax, ay, az, bx, by, bz, cx, cy, cz, dx, dy, dz):
    b0, b1, b2 = bx - ax, by - ay, bz - az
    c0, c1, c2 = cx - ax, cy - ay, cz - az
    d0, d1, d2 = dx - ax, dy - ay, dz - az
    v = ((b1 * c2 - b2 * c1) * d0 + (b2 * c0 - b0 * c2) * d1
         + (b0 * c1 - b1 * c0) * d2)
    if v > 0:
        return 1
    if v < 0:
        return -1
    return 0


@njit(cache=True)
def _between(ax, ay, az, bx, by, bz, px, py, pz):
    return (min(ax, bx) <= px <= max(ax, bx)
            and min(ay, by) <= py <= max(ay, by)
            and min(az, bz) <= pz <= max(az, bz))


@njit(cache=True)
def _segments_intersect(p1x, p1y, p1z, q1x, q1y, q1z,
                        p2x, p2y, p2z, q2x, q2y, q2z):
    d1x, d1y, d1z = q1x - p1x, q1y - p1y, q1z - p1z
    d2x, d2y, d2z = q2x - p2x, q2y - p2y, q2z - p2z
    nx = d1y * d2z - d1z * d2y
    ny = d1z * d2x - d1x * d2z
    nz = d1x * d2y - d1y * d2x
    wx, wy, wz = p2x - p1x, p2y - p1y, p2z - p1z
    if nx != 0 or ny != 0 or nz != 0:
        if nx * wx + ny * wy + nz * wz != 0:
            return False
        m1x = d1y * wz - d1z * wy
        m1y = d1z * wx - d1x * wz
        m1z = d1x * wy - d1y * wx
        vx, vy, vz = q2x - p1x, q2y - p1y, q2z - p1z
        m2x = d1y * vz - d1z * vy
        m2y = d1z * vx - d1x * vz
        m2z = d1x * vy - d1y * vx
        if m1x * m2x + m1y * m2y + m1z * m2z > 0:
            return False
        ux, uy, uz = p1x - p2x, p1y - p2y, p1z - p2z
        m3x = d2y * uz - d2z * uy
        m3y = d2z * ux - d2x * uz
        m3z = d2x * uy - d2y * ux
        tx, ty, tz = q1x - p2x, q1y - p2y, q1z - p2z
        m4x = d2y * tz - d2z * ty
        m4y = d2z * tx - d2x * tz
        m4z = d2x * ty - d2y * tx
        if m3x * m4x + m3y * m4y + m3z * m4z > 0:
            return False
        return True
    cx = d1y * wz - d1z * wy
    cy = d1z * wx - d1x * wz
    cz = d1x * wy - d1y * wx
    if cx != 0 or cy != 0 or cz != 0:
        return False
    return (_between(p1x, p1y, p1z, q1x, q1y, q1z, p2x, p2y, p2z)
            or _between(p1x, p1y, p1z, q1x, q1y, q1z, q2x, q2y, q2z)
            or _between(p2x, p2y, p2z, q2x, q2y, q2z, p1x, p1y, p1z)
            or _between(p2x, p2y, p2z, q2x, q2y, q2z, q1x, q1y, q1z))


@njit(cache=True)
def _point_in_triangle(px, py, pz, ax, ay, az, bx, by, bz, cx, cy, cz):
    e1x, e1y, e1z = bx - ax, by - ay, bz - az
    e2x, e2y, e2z = cx - ax, cy - ay, cz - az
    nx = e1y * e2z - e1z * e2y
    ny = e1z * e2x - e1x * e2z
    nz = e1x * e2y - e1y * e2x
    # side of edge ab
    vx, vy, vz = px - ax, py - ay, pz - az
    s1 = ((e1y * vz - e1z * vy) * nx + (e1z * vx - e1x * vz) * ny
          + (e1x * vy - e1y * vx) * nz)
    e3x, e3y, e3z = cx - bx, cy - by, cz - bz
    wx, wy, wz = px - bx, py - by, pz - bz
    s2 = ((e3y * wz - e3z * wy) * nx + (e3z * wx - e3x * wz) * ny
          + (e3x * wy - e3y * wx) * nz)
    e4x, e4y, e4z = ax - cx, ay - cy, az - cz
    ux, uy, uz = px - cx, py - cy, pz - cz
    s3 = ((e4y * uz - e4z * uy) * nx + (e4z * ux - e4x * uz) * ny
          + (e4x * uy - e4y * ux) * nz)
    return s1 >= 0 and s2 >= 0 and s3 >= 0


@njit(cache=True)
def _edge_contact_single(px, py, pz, qx, qy, qz, ux, uy, uz, vx, vy, vz,
                         tx, ty, tz):
    dux, duy, duz = vx - ux, vy - uy, vz - uz
    dpx, dpy, dpz = qx - px, qy - py, qz - pz
    crx = dpy * duz - dpz * duy
    cry = dpz * dux - dpx * duz
    crz = dpx * duy - dpy * dux
    wx, wy, wz = px - ux, py - uy, pz - uz
    c2x = duy * wz - duz * wy
    c2y = duz * wx - dux * wz
    c2z = dux * wy - duy * wx
    if crx == 0 and cry == 0 and crz == 0 and c2x == 0 and c2y == 0 and c2z == 0:
        # collinear overlap
        p_is = px == tx and py == ty and pz == tz
        q_is = qx == tx and qy == ty and qz == tz
        u_is = ux == tx and uy == ty and uz == tz
        v_is = vx == tx and vy == ty and vz == tz
        if not ((p_is or q_is) and (u_is or v_is)):
            return False
        fpx, fpy, fpz = (qx, qy, qz) if p_is else (px, py, pz)
        fux, fuy, fuz = (vx, vy, vz) if u_is else (ux, uy, uz)
        return ((fpx - tx) * (fux - tx) + (fpy - ty) * (fuy - ty)
                + (fpz - tz) * (fuz - tz)) <= 0
    # unique intersection; is it exactly t on both?
    apx, apy, apz = tx - px, ty - py, tz - pz
    k1x = apy * dpz - apz * dpy
    k1y = apz * dpx - apx * dpz
    k1z = apx * dpy - apy * dpx
    if k1x != 0 or k1y != 0 or k1z != 0:
        return False
    if not _between(px, py, pz, qx, qy, qz, tx, ty, tz):
        return False
    aux, auy, auz = tx - ux, ty - uy, tz - uz
    k2x = auy * duz - auz * duy
    k2y = auz * dux - aux * duz
    k2z = aux * duy - auy * dux
    if k2x != 0 or k2y != 0 or k2z != 0:
        return False
    return _between(ux, uy, uz, vx, vy, vz, tx, ty, tz)


@njit(cache=True)
def _seg_avoids_tri(px, py, pz, qx, qy, qz,
                    ax, ay, az, bx, by, bz, cx, cy, cz,
                    has_allowed, alx, aly, alz):
    d1 = _orient3d(ax, ay, az, bx, by, bz, cx, cy, cz, px, py, pz)
    d2 = _orient3d(ax, ay, az, bx, by, bz, cx, cy, cz, qx, qy, qz)
    if d1 != 0 and d2 != 0 and d1 == d2:
        return True
    if d1 != 0 and d2 != 0:
        s1 = _orient3d(px, py, pz, qx, qy, qz, ax, ay, az, bx, by, bz)
        s2 = _orient3d(px, py, pz, qx, qy, qz, bx, by, bz, cx, cy, cz)
        s3 = _orient3d(px, py, pz, qx, qy, qz, cx, cy, cz, ax, ay, az)
        hits = ((s1 >= 0 and s2 >= 0 and s3 >= 0)
                or (s1 <= 0 and s2 <= 0 and s3 <= 0))
        return not hits
    if d1 == 0 and d2 == 0:
        p_in = _point_in_triangle(px, py, pz, ax, ay, az, bx, by, bz, cx, cy, cz)
        q_in = _point_in_triangle(qx, qy, qz, ax, ay, az, bx, by, bz, cx, cy, cz)
        if p_in and q_in:
            return False
        if not p_in and not q_in:
            if _segments_intersect(px, py, pz, qx, qy, qz, ax, ay, az, bx, by, bz):
                return False
            if _segments_intersect(px, py, pz, qx, qy, qz, bx, by, bz, cx, cy, cz):
                return False
            if _segments_intersect(px, py, pz, qx, qy, qz, cx, cy, cz, ax, ay, az):
                return False
            return True
        if p_in:
            ex, ey, ez = px, py, pz
        else:
            ex, ey, ez = qx, qy, qz
        if not (has_allowed and ex == alx and ey == aly and ez == alz):
            return False
        for e in range(3):
            if e == 0:
                e1x, e1y, e1z, e2x, e2y, e2z = ax, ay, az, bx, by, bz
            elif e == 1:
                e1x, e1y, e1z, e2x, e2y, e2z = bx, by, bz, cx, cy, cz
            else:
                e1x, e1y, e1z, e2x, e2y, e2z = cx, cy, cz, ax, ay, az
            if not _segments_intersect(px, py, pz, qx, qy, qz,
                                       e1x, e1y, e1z, e2x, e2y, e2z):
                continue
            if not _edge_contact_single(px, py, pz, qx, qy, qz,
                                        e1x, e1y, e1z, e2x, e2y, e2z,
                                        ex, ey, ez):
                return False
        return True
    if d1 == 0:
        ex, ey, ez = px, py, pz
    else:
        ex, ey, ez = qx, qy, qz
    if not _point_in_triangle(ex, ey, ez, ax, ay, az, bx, by, bz, cx, cy, cz):
        return True
    return has_allowed and ex == alx and ey == aly and ez == alz


@njit(cache=True)
def _removable(pts, idx, count, pos):
    ia = idx[(pos - 1) % count]
    ib = idx[pos]
    ic = idx[(pos + 1) % count]
    ax, ay, az = pts[ia, 0], pts[ia, 1], pts[ia, 2]
    bx, by, bz = pts[ib, 0], pts[ib, 1], pts[ib, 2]
    cx, cy, cz = pts[ic, 0], pts[ic, 1], pts[ic, 2]
    if ax == cx and ay == cy and az == cz:
        return False
    u0, u1, u2 = bx - ax, by - ay, bz - az
    v0, v1, v2 = cx - ax, cy - ay, cz - az
    if (u1 * v2 - u2 * v1 == 0 and u2 * v0 - u0 * v2 == 0
            and u0 * v1 - u1 * v0 == 0):
        return True
    for s in range(count):
        sa = idx[s]
        sb = idx[(s + 1) % count]
        if sa == ia or sa == ib:
            continue
        has_allowed = False
        alx = aly = alz = 0
        if sa == ic:
            has_allowed, alx, aly, alz = True, cx, cy, cz
        elif sb == ia:
            has_allowed, alx, aly, alz = True, ax, ay, az
        if not _seg_avoids_tri(pts[sa, 0], pts[sa, 1], pts[sa, 2],
                               pts[sb, 0], pts[sb, 1], pts[sb, 2],
                               ax, ay, az, bx, by, bz, cx, cy, cz,
                               has_allowed, alx, aly, alz):
            return False
    return True


@njit(cache=True)
def _reduce_impl(pts):
    n = pts.shape[0]
    alive = np.ones(n, dtype=np.bool_)
    idx = np.empty(n, dtype=np.int64)
    count = n
    changed = True
    while changed and count > 3:
        changed = False
        k = 0
        for i in range(n):
            if alive[i]:
                idx[k] = i
                k += 1
        pos = 0
        while pos < count and count > 3:
            if _removable(pts, idx, count, pos):
                alive[idx[pos]] = False
                count -= 1
                changed = True
                for t in range(pos, count):
                    idx[t] = idx[t + 1]
            else:
                pos += 1
    out = np.empty((count, 3), dtype=np.int64)
    k = 0
    for i in range(n):
        if alive[i]:
            out[k, 0] = pts[i, 0]
            out[k, 1] = pts[i, 1]
            out[k, 2] = pts[i, 2]
            k += 1
    return out


def reduce_polygon_kernel(verts):
    pts = np.asarray(verts, dtype=np.int64)
    out = _reduce_impl(pts)
    return [tuple(int(x) for x in row) for row in out]
