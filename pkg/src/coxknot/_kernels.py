"""Hot search kernels: numba-compiled gallery enumeration.

The same entry points exist in pure Python (``COXKNOT_PURE_PYTHON=1``), used
as the reference implementation in tests and the benchmark.
"""

from __future__ import annotations

import os

import numpy as np

PURE_PYTHON = os.environ.get("COXKNOT_PURE_PYTHON", "") in ("1", "true", "yes")

try:
    if PURE_PYTHON:
        raise ImportError
    from numba import njit
    KERNELS_ENABLED = True
except ImportError:
    KERNELS_ENABLED = False

    def njit(*args, **kwargs):
        def wrap(f):
            return f
        if args and callable(args[0]):
            return args[0]
        return wrap

# generator isometries, rows: linear row-major then translation
GEN = np.array([
    [0, -1, 0, -1, 0, 0, 0, 0, 1, 8, 8, 0],   # A
    [0, 1, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0],     # B
    [1, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0],     # C
    [1, 0, 0, 0, 1, 0, 0, 0, -1, 0, 0, 0],    # D
], dtype=np.int64)

IDENTITY = np.array([1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0], dtype=np.int64)

MODE_CLOSED = 0
MODE_ORDER3 = 1


@njit(cache=True, nogil=True)
def _compose(a, b, out):
    """out = a o b on 12-int encodings."""
    for i in range(3):
        for j in range(3):
            s = 0
            for k in range(3):
                s += a[3 * i + k] * b[3 * k + j]
            out[3 * i + j] = s
    for i in range(3):
        s = a[9 + i]
        for k in range(3):
            s += a[3 * i + k] * b[9 + k]
        out[9 + i] = s


@njit(cache=True, nogil=True)
def _apply(a, x, y, z):
    px = a[0] * x + a[1] * y + a[2] * z + a[9]
    py = a[3] * x + a[4] * y + a[5] * z + a[10]
    pz = a[6] * x + a[7] * y + a[8] * z + a[11]
    return px, py, pz


@njit(cache=True, nogil=True)
def _is_identity(a):
    for i in range(12):
        if a[i] != IDENTITY[i]:
            return False
    return True


@njit(cache=True, nogil=True)
def _leaf_accepts(letters, L, mode, iso, cents):
    """Full-word checks; cents holds the L prefix centroids (0..L-1)."""
    # canonical: lexicographically least cyclic shift
    for m in range(1, L):
        for i in range(L):
            a = letters[(m + i) % L]
            b = letters[i]
            if a != b:
                if a < b:
                    return False
                break
    if mode == MODE_CLOSED:
        return _is_identity(iso)
    # order 3: iso^3 == 1, iso != 1
    if _is_identity(iso):
        return False
    tmp = np.empty(12, dtype=np.int64)
    tmp2 = np.empty(12, dtype=np.int64)
    _compose(iso, iso, tmp)
    _compose(tmp, iso, tmp2)
    if not _is_identity(tmp2):
        return False
    # triple gallery self-avoiding: centroids of copies 2,3 are the images
    # of the prefix centroids under iso and iso^2
    pts = np.empty((3 * L, 3), dtype=np.int64)
    for j in range(L):
        pts[j, 0] = cents[j, 0]
        pts[j, 1] = cents[j, 1]
        pts[j, 2] = cents[j, 2]
        x, y, z = _apply(iso, cents[j, 0], cents[j, 1], cents[j, 2])
        pts[L + j, 0] = x
        pts[L + j, 1] = y
        pts[L + j, 2] = z
        x, y, z = _apply(tmp, cents[j, 0], cents[j, 1], cents[j, 2])
        pts[2 * L + j, 0] = x
        pts[2 * L + j, 1] = y
        pts[2 * L + j, 2] = z
    for i in range(3 * L):
        for j in range(i + 1, 3 * L):
            if (pts[i, 0] == pts[j, 0] and pts[i, 1] == pts[j, 1]
                    and pts[i, 2] == pts[j, 2]):
                return False
    return True


@njit(cache=True, nogil=True)
def dfs_enumerate(prefix, L, mode, maxd):
    """All survivors of exact length L under the given subtree prefix,
    packed little-endian 2 bits per letter, in DFS (lex) order."""
    out = [np.int64(x) for x in range(0)]
    letters = np.zeros(L, dtype=np.int64)
    isos = np.zeros((L + 1, 12), dtype=np.int64)
    cents = np.zeros((L + 1, 3), dtype=np.int64)
    dcnt = np.zeros(L + 1, dtype=np.int64)
    isos[0] = IDENTITY
    cents[0, 0], cents[0, 1], cents[0, 2] = 4, 2, 1
    np_ = len(prefix)
    if np_ > L:
        return out
    choice = np.zeros(L + 1, dtype=np.int64)
    depth = 0
    while depth >= 0:
        if depth == L:
            if dcnt[L] % 2 == 0 and _leaf_accepts(letters, L, mode,
                                                  isos[L], cents[:L]):
                packed = np.int64(0)
                for i in range(L):
                    packed |= letters[i] << (2 * i)
                out.append(packed)
            depth -= 1
            continue
        g = choice[depth]
        if g > 3 or (depth < np_ and g > prefix[depth]):
            choice[depth] = 0
            depth -= 1
            continue
        choice[depth] = g + 1
        if depth < np_ and g < prefix[depth]:
            choice[depth] = prefix[depth]
            g = prefix[depth]
            choice[depth] = g + 1
        if depth > 0 and letters[depth - 1] == g:
            continue
        nd = dcnt[depth] + (1 if g == 3 else 0)
        if nd > maxd:
            continue
        # parity lookahead on the last letter
        rem = L - depth - 1
        if rem == 0 and nd % 2 != 0:
            continue
        _compose(isos[depth], GEN[g], isos[depth + 1])
        x, y, z = _apply(isos[depth + 1], 4, 2, 1)
        # prefix self-avoidance (closure with the start allowed at the leaf
        # in closed mode only)
        collide = False
        limit = depth + 1
        for i in range(limit):
            if cents[i, 0] == x and cents[i, 1] == y and cents[i, 2] == z:
                collide = True
                break
        if collide:
            if not (mode == MODE_CLOSED and depth + 1 == L
                    and cents[0, 0] == x and cents[0, 1] == y
                    and cents[0, 2] == z):
                continue
            # closed-mode final chamber returning to the start is legal
            coll_ok = True
            for i in range(1, limit):
                if cents[i, 0] == x and cents[i, 1] == y and cents[i, 2] == z:
                    coll_ok = False
                    break
            if not coll_ok:
                continue
        elif mode == MODE_CLOSED and depth + 1 == L:
            continue  # last chamber must close onto the start
        letters[depth] = g
        dcnt[depth + 1] = nd
        cents[depth + 1, 0] = x
        cents[depth + 1, 1] = y
        cents[depth + 1, 2] = z
        depth += 1
        choice[depth] = 0
    return out


def decode_word(packed: int, length: int) -> str:
    return "".join("ABCD"[(int(packed) >> (2 * i)) & 3] for i in range(length))
