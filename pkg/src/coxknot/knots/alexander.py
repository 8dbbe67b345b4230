"""Alexander polynomial from a knot diagram.

Arc/crossing relations from the Wirtinger presentation give an n x n matrix
over Z[t, 1/t]; any (n-1)-minor is the Alexander polynomial up to a unit.
The determinant is computed exactly by integer evaluation at deg+1 points
(fraction-free Bareiss) and Lagrange interpolation, then normalized to the
palindromic representative with Delta(1) = 1.
"""

from __future__ import annotations

from fractions import Fraction

from .diagram import CrossingDiagram
from .laurent import LaurentPolynomial


class NotAKnot(ValueError):
    pass


def _arc_relations(diagram: CrossingDiagram):
    """Rows (coeff dict arc -> Laurent poly in t as {exp: c}) per crossing."""
    passages = diagram.passage_list()  # raises on multi-component
    m = len(passages)
    # arcs are delimited by under-passages; arc id per passage-gap edge
    under_positions = [k for k, (_, over) in enumerate(passages) if not over]
    n_arcs = len(under_positions)
    arc_of_edge = {}
    # edge k sits between passage k-1 and passage k
    arc = 0
    for k in range(m):
        arc_of_edge[k] = arc
        if not passages[k][1]:  # under passage ends the arc
            arc = (arc + 1) % n_arcs if n_arcs else 0
    # re-normalize so arcs are numbered consistently from edge 0
    rows = []
    for c in diagram.crossings:
        # find this crossing's under in/out and over edges via passages
        under_k = next(k for k, (cc, over) in enumerate(passages)
                       if cc is c and not over)
        over_k = next(k for k, (cc, over) in enumerate(passages)
                      if cc is c and over)
        arc_in = arc_of_edge[under_k]
        arc_out = arc_of_edge[(under_k + 1) % m]
        arc_over = arc_of_edge[over_k]
        row: dict[int, LaurentPolynomial] = {}

        def add(a, poly):
            row[a] = row.get(a, LaurentPolynomial()) + poly

        if c.sign > 0:
            # x_out = x_over x_in x_over^-1 :  (1-t) o + t i - out
            add(arc_over, LaurentPolynomial({0: 1, 1: -1}))
            add(arc_in, LaurentPolynomial({1: 1}))
            add(arc_out, LaurentPolynomial({0: -1}))
        else:
            # x_out = x_over^-1 x_in x_over :  (t-1) o + i - t out
            add(arc_over, LaurentPolynomial({1: 1, 0: -1}))
            add(arc_in, LaurentPolynomial({0: 1}))
            add(arc_out, LaurentPolynomial({1: -1}))
        rows.append(row)
    return rows, n_arcs


def _bareiss_det(matrix) -> int:
    """Exact determinant of a square integer matrix."""
    m = [row[:] for row in matrix]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _interpolate(points) -> list[Fraction]:
    """Coefficients (ascending) of the poly through (x, y) pairs."""
    n = len(points)
    coeffs = [Fraction(0)] * n
    for i, (xi, yi) in enumerate(points):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            new = [Fraction(0)] * (len(basis) + 1)
            for k, b in enumerate(basis):
                new[k] += b * (-xj)
                new[k + 1] += b
            basis = new
            denom *= xi - xj
        scale = Fraction(yi) / denom
        for k, b in enumerate(basis):
            coeffs[k] += scale * b
    return coeffs


def alexander(diagram: CrossingDiagram) -> LaurentPolynomial:
    """Normalized Alexander polynomial: palindromic with Delta(1) = 1."""
    n = len(diagram)
    if n == 0:
        if diagram.components() > 1:
            raise NotAKnot("not a knot: multiple components")
        return LaurentPolynomial.constant(1)
    rows, n_arcs = _arc_relations(diagram)
    if n_arcs != n:
        raise NotAKnot("arc/crossing count mismatch")
    if n == 1:
        return LaurentPolynomial.constant(1)
    # delete last row and last column, evaluate at integer points
    size = n - 1
    degree = size  # each entry has degree <= 1 in t
    xs = list(range(2, 2 + degree + 1))
    evals = []
    for t in xs:
        mat = [[0] * size for _ in range(size)]
        for r in range(size):
            for a, poly in rows[r].items():
                if a < size:
                    mat[r][a] = int(poly.evaluate(t))
        evals.append((t, _bareiss_det(mat)))
    coeffs = _interpolate(evals)
    poly = LaurentPolynomial()
    for k, c in enumerate(coeffs):
        if c != 0:
            if c.denominator != 1:
                raise RuntimeError("interpolation left a fraction")
            poly += LaurentPolynomial.monomial(k, int(c))
    return _normalize(poly)


def _normalize(poly: LaurentPolynomial) -> LaurentPolynomial:
    if not poly:
        raise NotAKnot("vanishing Alexander determinant (not a knot)")
    lo, hi = poly.min_exp(), poly.max_exp()
    if (lo + hi) % 2 != 0:
        raise RuntimeError("Alexander span is odd; diagram is inconsistent")
    poly = poly.shift(-(lo + hi) // 2)
    at_one = poly.evaluate(1)
    if at_one == -1:
        poly = -poly
    elif at_one != 1:
        raise NotAKnot(f"Delta(1) = {at_one}, not a knot diagram")
    if not poly.is_palindromic():
        raise RuntimeError("Alexander polynomial failed palindromy")
    return poly


def determinant(diagram: CrossingDiagram) -> int:
    """|Delta(-1)|, computed by a single integer determinant."""
    n = len(diagram)
    if n == 0:
        if diagram.components() > 1:
            raise NotAKnot("not a knot: multiple components")
        return 1
    rows, n_arcs = _arc_relations(diagram)
    if n <= 1:
        return 1
    size = n - 1
    mat = [[0] * size for _ in range(size)]
    for r in range(size):
        for a, poly in rows[r].items():
            if a < size:
                mat[r][a] = int(poly.evaluate(-1))
    return abs(_bareiss_det(mat))
