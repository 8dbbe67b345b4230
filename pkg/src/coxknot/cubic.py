"""Cubic-lattice knot pieces and their compilation into Coxeter words.

A threefold-symmetric lattice knot is three copies of one cube path
("piece"), each the previous one rotated 120 degrees.  Pieces are codified
two ways: in the static frame (letters F,B,R,L,U,D = fixed axis
directions) and in the moving TNB frame (letters f,u,d,r,l relative to the
transported tangent frame).  A TNB piece with a bar gluing compiles into a
word of the B3-tilde group whose cube is the threefold rotation, so its
triple gallery traces the knot.

Conventions (these make every table below consistent with the geometry):

* frames are right-handed, B = T x N;
* moving in direction v != T rotates the frame 90 degrees about T x v,
  taking T to v; letters read f=+T, u=+N, d=-N, l=+B, r=-B in the frame
  *before* the move's transport;
* the TNB word lists the moves entering the piece's k cubes; the first
  move continues the previous piece's exit, so a shifted (bar-glued) piece
  always starts with 'f';
* the torsion tau maps the transported final frame onto the next piece's
  canonical initial frame; its type s is the complex number of tau^-1 on
  the NB plane (N = 1, B = i).
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from . import coxeter as cx
from .knots import PolygonalKnot

STATIC_LETTERS = "FBRLUD"
DIRECTIONS = {
    "F": (1, 0, 0), "B": (-1, 0, 0),
    "R": (0, 1, 0), "L": (0, -1, 0),
    "U": (0, 0, 1), "D": (0, 0, -1),
}
OPPOSITE = {"F": "B", "B": "F", "R": "L", "L": "R", "U": "D", "D": "U"}
TNB_LETTERS = "fudrl"


class CubicError(ValueError):
    pass


def check_static_word(word: str) -> str:
    if not word or any(ch not in STATIC_LETTERS for ch in word):
        raise CubicError(f"not a static word over {{F,B,R,L,U,D}}: {word!r}")
    for i in range(len(word) - 1):
        if word[i + 1] == OPPOSITE[word[i]]:
            raise CubicError(f"path backtracks at position {i + 1}")
    return word


def static_path(word: str, start=(0, 0, 0)) -> list:
    """Cube centers visited; the first letter steps INTO the first cube."""
    check_static_word(word)
    pts = [tuple(start)]
    for ch in word:
        d = DIRECTIONS[ch]
        p = pts[-1]
        pts.append((p[0] + d[0], p[1] + d[1], p[2] + d[2]))
    return pts


@dataclass(frozen=True)
class StaticRotation:
    """Threefold rotation as a permutation of the six axis letters:
    two disjoint 3-cycles mapping opposite letters to opposite letters."""

    mapping: tuple  # tuple of (letter, image) pairs, frozen

    @staticmethod
    def parse(text: str) -> "StaticRotation":
        cleaned = text.replace(" ", "")
        cycles = re.findall(r"\(([FBRLUD]{3})\)", cleaned)
        if len(cycles) != 2 or "".join(f"({c})" for c in cycles) != cleaned:
            raise CubicError(f"expected two 3-cycles like (FRU)(BLD): {text!r}")
        mapping = {}
        for cyc in cycles:
            for i, ch in enumerate(cyc):
                mapping[ch] = cyc[(i + 1) % 3]
        rot = StaticRotation(tuple(sorted(mapping.items())))
        rot.validate()
        return rot

    def validate(self):
        m = dict(self.mapping)
        if sorted(m) != sorted(STATIC_LETTERS):
            raise CubicError("permutation must cover all six letters")
        for ch in STATIC_LETTERS:
            if m[OPPOSITE[ch]] != OPPOSITE[m[ch]]:
                raise CubicError("rotation must map opposite letters to opposites")
        w = "FRU"
        for _ in range(3):
            w = "".join(m[c] for c in w)
        if w != "FRU":
            raise CubicError("rotation must have order three")
        if any(m[c] == c for c in STATIC_LETTERS):
            raise CubicError("threefold rotation fixes no axis letter")

    def __call__(self, letter: str) -> str:
        return dict(self.mapping)[letter]

    def apply_word(self, word: str) -> str:
        m = dict(self.mapping)
        return "".join(m[c] for c in word)

    def matrix(self):
        """Linear map sending dir(X) to dir(sigma(X))."""
        m = dict(self.mapping)
        cols = [DIRECTIONS[m[ax]] for ax in "FRU"]
        return tuple(tuple(cols[j][i] for j in range(3)) for i in range(3))

    def serialize(self) -> str:
        m = dict(self.mapping)
        seen, cycles = set(), []
        for ch in STATIC_LETTERS:
            if ch in seen:
                continue
            cyc = [ch]
            seen.add(ch)
            while m[cyc[-1]] not in seen:
                cyc.append(m[cyc[-1]])
                seen.add(cyc[-1])
            cycles.append("(" + "".join(cyc) + ")")
        return "".join(cycles)


def apply_sigma(word: str, sigma: StaticRotation) -> str:
    return sigma.apply_word(word)


def assemble_threefold(word: str, sigma: StaticRotation,
                       start=(0, 0, 0)) -> PolygonalKnot:
    """Closed polygon of cube centers traversing word, sigma(word),
    sigma^2(word)."""
    check_static_word(word)
    moves = list(word) + list(sigma.apply_word(word)) \
        + list(sigma.apply_word(sigma.apply_word(word)))
    pts = [tuple(start)]
    seen = {pts[0]: 0}
    for i, ch in enumerate(moves):
        d = DIRECTIONS[ch]
        p = pts[-1]
        q = (p[0] + d[0], p[1] + d[1], p[2] + d[2])
        if i == len(moves) - 1:
            if q != pts[0]:
                raise CubicError(f"does not close: final step {i} "
                                 f"lands at {q}, not {pts[0]}")
            break
        if q in seen:
            raise CubicError(f"self-intersecting at step {i}: cube {q} "
                             f"already visited at step {seen[q]}")
        seen[q] = i + 1
        pts.append(q)
    if len(pts) != len(moves):
        raise CubicError("does not close")
    return PolygonalKnot(tuple(pts))


def loop_moves(word: str, sigma: StaticRotation) -> list:
    """The 3k move directions of the assembled loop."""
    w2 = sigma.apply_word(word)
    w3 = sigma.apply_word(w2)
    return [DIRECTIONS[c] for c in word + w2 + w3]


# --------------------------------------------------------------------------
# Moving frame

def _cross(a, b):
    return (a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0])


def _neg(a):
    return (-a[0], -a[1], -a[2])


@dataclass(frozen=True)
class Frame:
    """Right-handed orthonormal integer frame; B = T x N."""

    T: tuple
    N: tuple
    B: tuple

    @staticmethod
    def make(T, N) -> "Frame":
        return Frame(tuple(T), tuple(N), _cross(T, N))

    def transport(self, v) -> "Frame":
        """Move in direction v: rotate 90 degrees about T x v taking T to v."""
        v = tuple(v)
        if v == self.T:
            return self
        if v == _neg(self.T):
            raise CubicError("path backtracks; frame transport undefined")
        axis = _cross(self.T, v)

        def rot(x):
            # 90-degree rotation about the unit axis: x -> (axis x x) + axis(axis.x)
            ax = _cross(axis, x)
            d = axis[0] * x[0] + axis[1] * x[1] + axis[2] * x[2]
            return (ax[0] + axis[0] * d, ax[1] + axis[1] * d, ax[2] + axis[2] * d)

        return Frame(rot(self.T), rot(self.N), rot(self.B))

    def letter_of(self, v) -> str:
        v = tuple(v)
        if v == self.T:
            return "f"
        if v == self.N:
            return "u"
        if v == _neg(self.N):
            return "d"
        if v == self.B:
            return "l"
        if v == _neg(self.B):
            return "r"
        raise CubicError(f"direction {v} is not a frame axis")

    def dir_of(self, letter: str):
        if letter == "f":
            return self.T
        if letter == "u":
            return self.N
        if letter == "d":
            return _neg(self.N)
        if letter == "l":
            return self.B
        if letter == "r":
            return _neg(self.B)
        raise CubicError(f"unknown TNB letter {letter!r}")


def initial_frame(moves) -> Frame:
    """Canonical frame at a piece start: T along the first move, N along
    the first turn."""
    T = tuple(moves[0])
    for v in moves[1:]:
        if tuple(v) != T:
            return Frame.make(T, v)
    raise CubicError("first turn not found: piece is straight")


@dataclass(frozen=True)
class TorsionMap:
    """tau in frame coordinates (basis T, N, B of the transported final
    frame); maps the final frame onto the next piece's initial frame."""

    matrix: tuple  # 3x3, columns = images of T, N, B

    def is_identity(self) -> bool:
        return self.matrix == ((1, 0, 0), (0, 1, 0), (0, 0, 1))

    def fixes_t(self) -> bool:
        return tuple(row[0] for row in self.matrix) == (1, 0, 0)

    def image(self, axis: int):
        return tuple(self.matrix[i][axis] for i in range(3))

    def describe(self) -> str:
        names = ["T", "N", "B"]
        comps = []
        for j, name in enumerate(names):
            img = self.image(j)
            for i, coef in enumerate(img):
                if coef:
                    comps.append(f"tau({name})={'-' if coef < 0 else ''}{names[i]}")
        return ", ".join(comps)


@dataclass(frozen=True)
class GluingClass:
    kind: str            # "bar" or "corner"
    s: str | None = None  # one of "1", "i", "-1", "-i" when kind == "bar"


def check_tnb_word(word: str) -> str:
    if not word or any(ch not in TNB_LETTERS for ch in word):
        raise CubicError(f"not a TNB word over {{f,u,d,r,l}}: {word!r}")
    if len(word) % 2 != 0:
        raise CubicError("TNB piece length must be even")
    return word


def static_to_tnb(moves, piece_start: int = 0):
    """TNB codification of one piece of a threefold loop.

    ``moves`` is the full 3k-move loop; the piece is moves[t : t+k].
    Returns (TnbWord, initial Frame, TorsionMap).
    """
    n = len(moves)
    if n % 3 != 0:
        raise CubicError("loop length must be a multiple of three")
    k = n // 3
    t = piece_start % n
    piece = [tuple(moves[(t + i) % n]) for i in range(k)]
    nxt = [tuple(moves[(t + k + i) % n]) for i in range(k)]
    frame0 = initial_frame(piece)
    frame = frame0
    letters = []
    for v in piece:
        letters.append(frame.letter_of(v))
        frame = frame.transport(v)
    next0 = initial_frame(nxt)
    # tau in final-frame coordinates: columns are the coordinates of the
    # next initial frame's axes in the transported final frame.
    fin = (frame.T, frame.N, frame.B)
    tgt = (next0.T, next0.N, next0.B)
    mat = tuple(
        tuple(sum(fin[i][c] * tgt[j][c] for c in range(3)) for j in range(3))
        for i in range(3)
    )
    return "".join(letters), frame0, TorsionMap(mat)


def classify_gluing(tau: TorsionMap) -> GluingClass:
    """Bar iff tau fixes T; the type s is tau^-1 restricted to the NB plane
    read as a complex number (N = 1, B = i)."""
    if not tau.fixes_t():
        return GluingClass("corner")
    # tau^-1 = transpose; its image of N in (N, B) coordinates:
    re = tau.matrix[1][1]
    im = tau.matrix[1][2]
    s = {(1, 0): "1", (0, 1): "i", (-1, 0): "-1", (0, -1): "-i"}[(re, im)]
    return GluingClass("bar", s)


def tnb_to_path(word: str, frame: Frame, start=(0, 0, 0)) -> list:
    """Inverse interpreter: cube centers of a TNB word from a start frame."""
    check_tnb_word(word)
    pts = [tuple(start)]
    f = frame
    for ch in word:
        v = f.dir_of(ch)
        p = pts[-1]
        pts.append((p[0] + v[0], p[1] + v[1], p[2] + v[2]))
        f = f.transport(v)
    return pts


def refine_static(word: str, m: int) -> str:
    """Each letter repeated m times: the same path at 1/m cube scale."""
    check_static_word(word)
    if m < 1:
        raise CubicError("refinement must be >= 1")
    return "".join(ch * m for ch in word)


def shift_to_bar(word: str, sigma: StaticRotation, max_refine: int = 4):
    """Smallest piece-start shift (then smallest refinement) giving a bar
    gluing.  Returns (shift, refinement)."""
    check_static_word(word)
    for m in range(1, max_refine + 1):
        w = refine_static(word, m) if m > 1 else word
        moves = loop_moves(w, sigma)
        k = len(moves) // 3
        for t in range(3 * k):
            try:
                _, _, tau = static_to_tnb(moves, t)
            except CubicError:
                continue
            if classify_gluing(tau).kind == "bar":
                return t, m
    raise CubicError("no bar gluing found within the shift/refinement bounds")


# --------------------------------------------------------------------------
# Translation into B3-tilde

# per-letter gallery words; the two columns are the even/odd parity rows
LETTER_WORDS = {
    "f": ("ABCDC", "ABCDC"),
    "u": ("ABCABCDC", "ABCABCDC"),
    "d": ("DC", "DC"),
    "l": ("ACDC", "BCDC"),
    "r": ("BCDC", "ACDC"),
}
TORSION_WORDS = {"1": "ABCDC", "i": "ACBCDC", "-1": "BACABDC", "-i": "BCACDC"}

# blocks with an odd letter count reverse orientation and flip the parity
_FLIPS = {w for w in ("ABCDC", "BACABDC")}


def translate_to_coxeter(word: str, gluing: GluingClass) -> str:
    """Compile a bar-glued TNB piece into an order-3 Coxeter word.

    The leading 'f' (the straight glue move into the piece) is not emitted:
    the appended torsion block T(s) ends with the f-word and performs that
    move when the word repeats.  Parity starts even and flips exactly on
    orientation-reversing blocks.
    """
    check_tnb_word(word)
    if gluing.kind != "bar":
        raise CubicError("corner gluing unsupported -- shift first")
    if word[0] != "f":
        raise CubicError("piece must enter straight -- shift first")
    parity = 0  # 0 = even
    parts = []
    for ch in word[1:]:
        block = LETTER_WORDS[ch][parity]
        parts.append(block)
        if block in _FLIPS:
            parity ^= 1
    tail = TORSION_WORDS[gluing.s]
    parts.append(tail)
    return "".join(parts)


def block_lengths(word: str, gluing: GluingClass) -> list:
    """Letter counts of the emitted blocks (one per cube move)."""
    check_tnb_word(word)
    parity = 0
    out = []
    for ch in word[1:]:
        block = LETTER_WORDS[ch][parity]
        out.append(len(block))
        if block in _FLIPS:
            parity ^= 1
    out.append(len(TORSION_WORDS[gluing.s]))
    return out


def unshift_coxeter(word: str, offset: int) -> str:
    """Undo a piece shift on the compiled word (offset in letters)."""
    return cx.cyclic_shift_piece(word, offset)


def d_count(word: str) -> int:
    return cx.d_count(word)


def cube_visits(word: str) -> int:
    return cx.cube_visits(word)


# --------------------------------------------------------------------------
# Pivot chamber: the geometric anchor of the translation tables

def pivot_chamber(cube, frame: Frame) -> cx.Chamber:
    """The chamber of the given lattice cube (integer cell coordinates)
    whose ABC-face lies on the cube's -N face and whose AB edge lies on the
    -T face.  Cube edge is 8 units."""
    cxr = tuple(8 * c + 4 for c in cube)
    vc = tuple(cxr[i] - 4 * frame.N[i] for i in range(3))
    e1 = tuple(vc[i] - 4 * frame.T[i] + 4 * frame.B[i] for i in range(3))
    e2 = tuple(vc[i] - 4 * frame.T[i] - 4 * frame.B[i] for i in range(3))
    if sum(e1) // 8 % 2 == 0:
        va, vb = e1, e2
    else:
        va, vb = e2, e1
    verts = {"A": va, "B": vb, "C": vc, "D": cxr}
    # solve the affine map sending the fundamental vertices onto these
    a = verts["A"]
    cols = []
    fb = tuple(verts["B"][i] - a[i] for i in range(3))
    col1 = tuple(x // 8 for x in fb)
    fc = tuple(verts["C"][i] - a[i] - 4 * col1[i] for i in range(3))
    col2 = tuple(x // 4 for x in fc)
    fd = tuple(verts["D"][i] - a[i] - 4 * col1[i] - 4 * col2[i] for i in range(3))
    col3 = tuple(x // 4 for x in fd)
    linear = tuple(tuple((col1[i], col2[i], col3[i])[j] for j in range(3))
                   for i in range(3))
    iso = cx.AffineIsometry(linear, a)
    for lbl, v in verts.items():
        if iso.apply(cx.FUNDAMENTAL_VERTICES[lbl]) != v:
            raise CubicError("pivot solve failed; frame is inconsistent")
    return cx.Chamber(iso)


def translate_piece(static_word: str, sigma: StaticRotation,
                    max_refine: int = 4) -> dict:
    """Full compilation pipeline for one static piece.

    assemble -> shift to a bar gluing -> TNB -> translate -> unshift.
    Returns every intermediate stage keyed by name.
    """
    assembly = assemble_threefold(static_word, sigma)
    shift, refinement = shift_to_bar(static_word, sigma, max_refine)
    refined = refine_static(static_word, refinement)
    moves = loop_moves(refined, sigma)
    tnb, frame0, tau = static_to_tnb(moves, shift)
    gluing = classify_gluing(tau)
    word = translate_to_coxeter(tnb, gluing)
    lengths = block_lengths(tnb, gluing)
    k = len(moves) // 3
    # blocks correspond to cube moves m_{t+2} .. m_{t+k+1}; rotating right
    # by the trailing `shift` blocks re-anchors the word at the original
    # piece start (whole blocks only; shift is measured in cube moves)
    if shift % k == 0:
        offset = 0
    else:
        tail = shift % k
        offset = sum(lengths[:len(lengths) - tail])
    unshifted = unshift_coxeter(word, offset) if offset else word
    return {
        "assembly": assembly,
        "shift": shift,
        "refinement": refinement,
        "tnb_word": tnb,
        "initial_frame": frame0,
        "tau": tau,
        "gluing": gluing,
        "coxeter_word": word,
        "unshift_offset": offset,
        "unshifted_word": unshifted,
    }
