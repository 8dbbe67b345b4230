"""Programmatic diagram constructions: braid closures and pretzel knots.

These are independent sources of reference diagrams for the invariant
table and its tests (a braid word or twist vector is much harder to
mistype than a PD code).
"""

from __future__ import annotations

from .diagram import Crossing, CrossingDiagram

# Port layout for a downward-flowing braid crossing (see diagram.py for the
# slot convention):
#   positive (right strand over): UL,UR,DL,DR -> slots 0,3,1,2
#   negative (left strand over):  UL,UR,DL,DR -> slots 1,0,2,3
_POS_PORTS = {"UL": 0, "UR": 3, "DL": 1, "DR": 2}
_NEG_PORTS = {"UL": 1, "UR": 0, "DL": 2, "DR": 3}


def _ports(sign):
    return _POS_PORTS if sign > 0 else _NEG_PORTS


def _connect(a, b):
    (c1, s1), (c2, s2) = a, b
    c1.adjacent[s1] = (c2, s2)
    c2.adjacent[s2] = (c1, s1)


def braid_closure(word, strands: int) -> CrossingDiagram:
    """Close the braid given by ``word`` (list of nonzero ints, sign =
    crossing sign, |k| = position) on ``strands`` strands."""
    if any(k == 0 or abs(k) >= strands for k in word):
        raise ValueError("braid letters must be nonzero and < strand count")
    crossings = []
    loose = [None] * strands   # dangling (crossing, slot) per position
    tops = [None] * strands    # first entry port per position
    for n, k in enumerate(word):
        sign = 1 if k > 0 else -1
        pos = abs(k) - 1
        x = Crossing(sign, n)
        crossings.append(x)
        p = _ports(sign)
        for side, position in (("UL", pos), ("UR", pos + 1)):
            port = (x, p[side])
            if loose[position] is None:
                tops[position] = port
            else:
                _connect(loose[position], port)
        loose[pos] = (x, p["DL"])
        loose[pos + 1] = (x, p["DR"])
    free = 0
    for i in range(strands):
        if loose[i] is None:
            free += 1
        else:
            _connect(loose[i], tops[i])
    return CrossingDiagram(crossings, free_loops=free)


def pretzel(twists) -> CrossingDiagram:
    """Standard pretzel diagram P(p1, p2, ...): vertical twist bands side
    by side, joined cyclically along the top and along the bottom."""
    bands = []
    crossings = []
    for p in twists:
        if p == 0:
            raise ValueError("zero twist bands are not supported")
        sign = 1 if p > 0 else -1
        band = [Crossing(sign, len(crossings) + j) for j in range(abs(p))]
        crossings.extend(band)
        ports = _ports(sign)
        for upper, lower in zip(band, band[1:]):
            _connect((upper, ports["DL"]), (lower, ports["UL"]))
            _connect((upper, ports["DR"]), (lower, ports["UR"]))
        bands.append({
            "TL": (band[0], ports["UL"]), "TR": (band[0], ports["UR"]),
            "BL": (band[-1], ports["DL"]), "BR": (band[-1], ports["DR"]),
        })
    for i, band in enumerate(bands):
        nxt = bands[(i + 1) % len(bands)]
        _connect(band["TR"], nxt["TL"])
        _connect(band["BR"], nxt["BL"])
    return CrossingDiagram(crossings)
