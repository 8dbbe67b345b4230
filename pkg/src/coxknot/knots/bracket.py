"""Kauffman bracket state sum and its writhe normalization.

The normalized bracket f(A) = (-A^3)^{-w} <D> is the Jones polynomial in
the bracket variable (V(t) under t = A^-4), and distinguishes mirror
images.  The state sum is exponential, so the crossing count is capped.
"""

from __future__ import annotations

from .diagram import CrossingDiagram
from .laurent import LaurentPolynomial

MAX_CROSSINGS = 18


class TooManyCrossings(ValueError):
    pass


def _edges(diagram):
    """Edge index per (crossing id, slot)."""
    index = {}
    count = 0
    for c in diagram.crossings:
        for s in range(4):
            if (id(c), s) in index:
                continue
            o, os = c.adjacent[s]
            index[(id(c), s)] = count
            index[(id(o), os)] = count
            count += 1
    return index, count


def kauffman_bracket(diagram: CrossingDiagram) -> LaurentPolynomial:
    """Writhe-normalized bracket polynomial in the variable A."""
    n = len(diagram)
    if n > MAX_CROSSINGS:
        raise TooManyCrossings(f"too many crossings: {n} > {MAX_CROSSINGS}")
    if n == 0:
        return LaurentPolynomial.constant(1)
    index, n_edges = _edges(diagram)
    # A-smoothing always joins slots (0,1) and (2,3): the over strand lies
    # on the 1-3 line, and rotating it counterclockwise onto the under
    # strand sweeps the regions those arcs open.
    pairings = []
    for c in diagram.crossings:
        e0, e1, e2, e3 = (index[(id(c), 0)], index[(id(c), 1)],
                          index[(id(c), 2)], index[(id(c), 3)])
        pairings.append((((e0, e1), (e2, e3)), ((e0, e3), (e1, e2))))

    parent = list(range(n_edges))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    bracket = LaurentPolynomial()
    delta = LaurentPolynomial({2: -1, -2: -1})
    for state in range(1 << n):
        for i in range(n_edges):
            parent[i] = i
        a_count = 0
        for k in range(n):
            use_a = not (state >> k) & 1
            a_count += use_a
            for x, y in pairings[k][0 if use_a else 1]:
                rx, ry = find(x), find(y)
                if rx != ry:
                    parent[rx] = ry
        loops = len({find(i) for i in range(n_edges)})
        term = LaurentPolynomial.monomial(a_count - (n - a_count))
        for _ in range(loops - 1):
            term = term * delta
        bracket = bracket + term
    w = diagram.writhe()
    sign = -1 if w % 2 else 1
    return LaurentPolynomial({-3 * w: sign}) * bracket
