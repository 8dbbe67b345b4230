"""Exact geometric realization of the affine Coxeter group B3-tilde.

Euclidean space is tessellated by cubes of edge 8 (so that every chamber
vertex and every chamber centroid is an integer point), each cube cut into
24 pyramids joining the cube center to its vertices and face centers.
Vertices carry colors: D is the cube center, C a face center, A and B the
cube corners in alternating pattern.  The four reflections across the faces
of the fundamental chamber generate the full symmetry group of the colored
tessellation; chambers are in bijection with group elements.

Words over {A, B, C, D} are plain Python strings; they codify galleries by
listing, left to right, the color behind each face crossed.  Composition is
``iso(w) = iso(w[0]) o iso(w[1]) o ...`` so the first letter acts last on
points.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


GENERATORS = "ABCD"

# Fundamental chamber: one pyramid of the cube [0,8]^3.
FUNDAMENTAL_VERTICES = {
    "A": (0, 0, 0),
    "B": (8, 0, 0),
    "C": (4, 4, 0),
    "D": (4, 4, 4),
}
FUNDAMENTAL_CENTROID = (4, 2, 1)

Matrix = tuple[tuple[int, int, int], ...]
Vector = tuple[int, int, int]

_IDENTITY_LINEAR: Matrix = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def _mat_mul(a: Matrix, b: Matrix) -> Matrix:
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3))
        for i in range(3)
    )


def _mat_vec(a: Matrix, v) -> Vector:
    return tuple(sum(a[i][k] * v[k] for k in range(3)) for i in range(3))


@dataclass(frozen=True)
class AffineIsometry:
    """Exact symmetry of the colored tessellation: ``p -> linear @ p + translation``.

    ``linear`` is a signed permutation matrix; all entries are integers.
    """

    linear: Matrix = _IDENTITY_LINEAR
    translation: Vector = (0, 0, 0)

    def apply(self, point) -> Vector:
        m = _mat_vec(self.linear, point)
        return (m[0] + self.translation[0],
                m[1] + self.translation[1],
                m[2] + self.translation[2])

    def compose(self, other: "AffineIsometry") -> "AffineIsometry":
        """Return self o other (other acts first on points)."""
        return AffineIsometry(
            _mat_mul(self.linear, other.linear),
            tuple(a + b for a, b in zip(_mat_vec(self.linear, other.translation),
                                        self.translation)),
        )

    def __mul__(self, other: "AffineIsometry") -> "AffineIsometry":
        return self.compose(other)

    def inverse(self) -> "AffineIsometry":
        inv = tuple(tuple(self.linear[j][i] for j in range(3)) for i in range(3))
        return AffineIsometry(inv, tuple(-x for x in _mat_vec(inv, self.translation)))

    @property
    def is_identity(self) -> bool:
        return self.linear == _IDENTITY_LINEAR and self.translation == (0, 0, 0)

    def det(self) -> int:
        m = self.linear
        return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))

    def serialize(self) -> list[int]:
        """Twelve integers: row-major linear part, then translation."""
        return [x for row in self.linear for x in row] + list(self.translation)

    @staticmethod
    def deserialize(values) -> "AffineIsometry":
        v = [int(x) for x in values]
        if len(v) != 12:
            raise ValueError("isometry serialization needs 12 integers")
        return AffineIsometry((tuple(v[0:3]), tuple(v[3:6]), tuple(v[6:9])),
                              tuple(v[9:12]))


IDENTITY = AffineIsometry()

# Reflections across the fundamental chamber's faces, each named after the
# vertex behind the face:  A: (x,y,z) -> (8-y, 8-x, z);  B: swap x,y;
# C: swap y,z;  D: negate z.
GENERATOR_ISOMETRIES = {
    "A": AffineIsometry(((0, -1, 0), (-1, 0, 0), (0, 0, 1)), (8, 8, 0)),
    "B": AffineIsometry(((0, 1, 0), (1, 0, 0), (0, 0, 1)), (0, 0, 0)),
    "C": AffineIsometry(((1, 0, 0), (0, 0, 1), (0, 1, 0)), (0, 0, 0)),
    "D": AffineIsometry(((1, 0, 0), (0, 1, 0), (0, 0, -1)), (0, 0, 0)),
}

# Walls of the four generators as affine forms f(p); the fundamental chamber
# sits on the side where sign(f) equals _CHAMBER_SIDE.
_WALL_FORMS = {
    "A": lambda p: p[0] + p[1] - 8,
    "B": lambda p: p[0] - p[1],
    "C": lambda p: p[1] - p[2],
    "D": lambda p: p[2],
}
_CHAMBER_SIDE = {"A": -1, "B": 1, "C": 1, "D": 1}


class WordError(ValueError):
    """Raised for strings that are not words over A, B, C, D."""


def check_word(word: str) -> str:
    if not isinstance(word, str) or any(ch not in GENERATORS for ch in word):
        raise WordError(f"not a word over {{A,B,C,D}}: {word!r}")
    return word


def generator_isometry(g: str) -> AffineIsometry:
    """The reflection across the fundamental-chamber face opposite vertex g."""
    if g not in GENERATOR_ISOMETRIES:
        raise WordError(f"unknown generator {g!r}")
    return GENERATOR_ISOMETRIES[g]


def word_to_isometry(word: str) -> AffineIsometry:
    """Left-to-right composition: the first letter is applied last to points."""
    check_word(word)
    iso = IDENTITY
    for ch in word:
        iso = iso * GENERATOR_ISOMETRIES[ch]
    return iso


@dataclass(frozen=True)
class Chamber:
    """A pyramid of the tessellation, identified with the unique symmetry
    mapping the fundamental chamber onto it."""

    element: AffineIsometry = IDENTITY

    def vertices(self) -> dict[str, Vector]:
        return {lbl: self.element.apply(v) for lbl, v in FUNDAMENTAL_VERTICES.items()}

    def centroid(self) -> Vector:
        return self.element.apply(FUNDAMENTAL_CENTROID)


FUNDAMENTAL_CHAMBER = Chamber()


@dataclass(frozen=True)
class Gallery:
    """A path of chambers sharing consecutive faces, codified by a word."""

    word: str
    chambers: tuple[Chamber, ...]

    def __len__(self) -> int:
        return len(self.chambers)


def gallery_of(word: str) -> Gallery:
    check_word(word)
    iso = IDENTITY
    chambers = [FUNDAMENTAL_CHAMBER]
    for ch in word:
        iso = iso * GENERATOR_ISOMETRIES[ch]
        chambers.append(Chamber(iso))
    return Gallery(word, tuple(chambers))


def is_closed(word: str) -> bool:
    return word_to_isometry(word).is_identity


def centroid_path(word: str) -> list[Vector]:
    """Centroids of the gallery's chambers; closed words end where they start."""
    check_word(word)
    iso = IDENTITY
    points = [FUNDAMENTAL_CENTROID]
    for ch in word:
        iso = iso * GENERATOR_ISOMETRIES[ch]
        points.append(iso.apply(FUNDAMENTAL_CENTROID))
    return points


def is_self_avoiding(word: str) -> bool:
    """True iff the gallery never revisits a chamber.

    A closed gallery may (and must) end at its starting chamber; all other
    chambers must be distinct, and a closed two-letter backtrack does not
    count (it traces a doubled segment, not a polygon).
    """
    points = centroid_path(word)
    if not word:
        return True
    if points[-1] == points[0]:
        if len(word) < 3:
            return False
        interior = points[:-1]
        return len(set(interior)) == len(interior)
    return len(set(points)) == len(points)


# ---------------------------------------------------------------------------
# Orders and classification

ORDER_BOUND = 12  # finite orders in B3-tilde are 1,2,3,4,6; 12 leaves slack


def isometry_order(iso: AffineIsometry):
    """Smallest k <= ORDER_BOUND with iso^k = 1, else the string "infinite"."""
    power = iso
    for k in range(1, ORDER_BOUND + 1):
        if power.is_identity:
            return k
        power = power * iso
    return "infinite"


def element_order(word: str):
    return isometry_order(word_to_isometry(word))


def _fixed_point_exists(iso: AffineIsometry) -> bool:
    """Exact solvability of (L - I) x = -t by fraction-free elimination."""
    rows = [
        [Fraction(iso.linear[i][j] - (1 if i == j else 0)) for j in range(3)]
        + [Fraction(-iso.translation[i])]
        for i in range(3)
    ]
    rank_pos = 0
    for col in range(3):
        pivot = next((r for r in range(rank_pos, 3) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank_pos], rows[pivot] = rows[pivot], rows[rank_pos]
        for r in range(3):
            if r != rank_pos and rows[r][col] != 0:
                factor = rows[r][col] / rows[rank_pos][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[rank_pos])]
        rank_pos += 1
    # Inconsistent iff a zero row has nonzero rhs.
    return all(any(row[:3]) or row[3] == 0 for row in rows)


def _linear_is_reflection(linear: Matrix) -> bool:
    # eigenvalues (1, 1, -1): involutive with trace +1
    return _mat_mul(linear, linear) == _IDENTITY_LINEAR and \
        linear[0][0] + linear[1][1] + linear[2][2] == 1


@dataclass(frozen=True)
class IsometryClass:
    kind: str
    order: int | str


def classify(iso: AffineIsometry) -> IsometryClass:
    """Name the isometry type and compute its order.

    Kinds: identity, translation, rotation, screw-displacement, reflection,
    glide-reflection, rotary-reflection.
    """
    order = isometry_order(iso)
    if iso.is_identity:
        return IsometryClass("identity", 1)
    if iso.det() == 1:
        if iso.linear == _IDENTITY_LINEAR:
            return IsometryClass("translation", order)
        if _fixed_point_exists(iso):
            return IsometryClass("rotation", order)
        return IsometryClass("screw-displacement", order)
    if _fixed_point_exists(iso):
        if _linear_is_reflection(iso.linear):
            return IsometryClass("reflection", order)
        return IsometryClass("rotary-reflection", order)
    return IsometryClass("glide-reflection", order)


# ---------------------------------------------------------------------------
# Word combinatorics

def repeat_word(word: str, k: int) -> str:
    check_word(word)
    if k < 1:
        raise ValueError("repeat count must be positive")
    return word * k


def cyclic_shift_piece(word: str, m: int) -> str:
    """Split an order-3 word at position m and swap the halves.

    The result is conjugate to the input, so it still has order 3, and its
    tripled gallery traverses the same closed loop started elsewhere.
    """
    check_word(word)
    if element_order(word) != 3:
        raise ValueError("cyclic_shift_piece requires a word of order 3")
    m %= len(word)
    return word[m:] + word[:m]


def d_count(word: str) -> int:
    check_word(word)
    return word.count("D")


def chamber_cube(chamber: Chamber) -> Vector:
    """Integer cell of the cube containing the chamber (via its D vertex)."""
    d = chamber.element.apply(FUNDAMENTAL_VERTICES["D"])
    return ((d[0] - 4) // 8, (d[1] - 4) // 8, (d[2] - 4) // 8)


def cube_visits(word: str) -> int:
    """Number of distinct cubes met by the gallery's chambers."""
    return len({chamber_cube(c) for c in gallery_of(word).chambers})


# ---------------------------------------------------------------------------
# Reduction (ShortLex normal form)

def _descends(letter: str, iso: AffineIsometry) -> bool:
    """True iff the generator's wall separates the fundamental chamber from
    iso(fundamental chamber); equivalently l(letter * iso) < l(iso)."""
    value = _WALL_FORMS[letter](iso.apply(FUNDAMENTAL_CENTROID))
    return (value > 0) != (_CHAMBER_SIDE[letter] > 0)


def reduce_word(word: str) -> str:
    """The lexicographically least reduced word for the element of ``word``.

    Walks a minimal gallery toward the fundamental chamber, always crossing
    the least-lettered separating wall; by the exchange property this is the
    ShortLex normal form, which is the lex-least word in the element's
    T2-orbit of reduced words.
    """
    iso = word_to_isometry(word)
    letters: list[str] = []
    while not iso.is_identity:
        for g in GENERATORS:
            if _descends(g, iso):
                letters.append(g)
                iso = GENERATOR_ISOMETRIES[g] * iso
                break
        else:  # unreachable: every non-identity element has a descent
            raise RuntimeError("no descent found; geometry is inconsistent")
    return "".join(letters)


# ---------------------------------------------------------------------------
# Coxeter matrices

class CoxeterMatrix:
    """Orders m_XY of pairwise generator products, keyed by unordered pairs."""

    def __init__(self, orders: dict[frozenset, int]):
        self._m = dict(orders)
        for g in GENERATORS:
            self._m[frozenset((g,))] = 1

    def order(self, x: str, y: str) -> int:
        return self._m[frozenset((x, y))]

    def pairs(self):
        for i, x in enumerate(GENERATORS):
            for y in GENERATORS[i + 1:]:
                yield x, y, self.order(x, y)


def derived_b3_matrix() -> CoxeterMatrix:
    """B3-tilde orders computed from the generator geometry itself."""
    orders = {}
    for i, x in enumerate(GENERATORS):
        for y in GENERATORS[i + 1:]:
            product = GENERATOR_ISOMETRIES[x] * GENERATOR_ISOMETRIES[y]
            k = isometry_order(product)
            if not isinstance(k, int):
                raise RuntimeError(f"product {x}{y} has infinite order")
            orders[frozenset((x, y))] = k
    return CoxeterMatrix(orders)


def _matrix_from_pairs(pairs) -> CoxeterMatrix:
    return CoxeterMatrix({frozenset(k): v for k, v in pairs.items()})


# Presentations of the other two rank-4 affine groups, stored as data only
# (no geometric realization); values transcribed from the source presentation.
A3_TILDE_MATRIX = _matrix_from_pairs({
    ("A", "B"): 4, ("A", "C"): 2, ("A", "D"): 2,
    ("B", "C"): 3, ("B", "D"): 2, ("C", "D"): 4,
})
C3_TILDE_MATRIX = _matrix_from_pairs({
    ("A", "B"): 2, ("A", "C"): 3, ("A", "D"): 3,
    ("B", "C"): 3, ("B", "D"): 3, ("C", "D"): 2,
})

B3_TILDE_MATRIX = derived_b3_matrix()


def point_class(point) -> str:
    """corner / face-center / cube-center / other, from coordinates mod 8."""
    fours = sum(1 for x in point if x % 8 == 4)
    zeros = sum(1 for x in point if x % 8 == 0)
    if zeros == 3:
        return "corner"
    if fours == 3:
        return "cube-center"
    if fours == 2 and zeros == 1:
        return "face-center"
    return "other"
