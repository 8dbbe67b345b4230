"""Knot diagrams as 4-valent planar graphs with over/under data.

Each crossing has four slots in counterclockwise planar order:

    slot 0: incoming under-strand      slot 2: outgoing under-strand
    slots 1 and 3: the over-strand; it flows 3 -> 1 at a positive
    crossing and 1 -> 3 at a negative one.

``adjacent[slot]`` holds the ``(crossing, slot)`` at the far end of the edge
leaving that slot.  A strand entering any slot s leaves through (s + 2) % 4,
so orientation is recovered by traversal.  Reidemeister moves are in-place
surgeries on the adjacency, in the style of the classical link calculators.
"""

from __future__ import annotations


class Crossing:
    __slots__ = ("sign", "adjacent", "label")

    def __init__(self, sign: int, label: int = 0):
        self.sign = sign
        self.adjacent = [None, None, None, None]
        self.label = label

    def __repr__(self):
        return f"<X{self.label}{'+' if self.sign > 0 else '-'}>"


class CrossingDiagram:
    """A knot- (or link-) diagram; possibly with crossing-free loops."""

    def __init__(self, crossings, free_loops: int = 0):
        self.crossings = list(crossings)
        self.free_loops = free_loops

    # -- construction --------------------------------------------------

    @staticmethod
    def from_passages(passage_crossings, passage_over, signs) -> "CrossingDiagram":
        """Build from a traversal: crossing id and over-flag per passage,
        and a sign per crossing id."""
        ids = sorted(set(passage_crossings))
        xs = {i: Crossing(signs[i], k) for k, i in enumerate(ids)}
        m = len(passage_crossings)
        slot_of = []  # (in slot, out slot) per passage
        for cid, over in zip(passage_crossings, passage_over):
            sign = signs[cid]
            if not over:
                slot_of.append((0, 2))
            elif sign > 0:
                slot_of.append((3, 1))
            else:
                slot_of.append((1, 3))
        for k in range(m):
            c1 = xs[passage_crossings[k]]
            c2 = xs[passage_crossings[(k + 1) % m]]
            out_slot = slot_of[k][1]
            in_slot = slot_of[(k + 1) % m][0]
            c1.adjacent[out_slot] = (c2, in_slot)
            c2.adjacent[in_slot] = (c1, out_slot)
        return CrossingDiagram([xs[i] for i in ids])

    @staticmethod
    def from_pd(code) -> "CrossingDiagram":
        """Build from a planar-diagram code: one 4-tuple of edge ids per
        crossing, slots in CCW order starting at the incoming under-edge.

        Edge ids must run 1..2n along the traversal, so orientation and
        signs are implied (under goes a -> c with c = a+1 cyclically).
        """
        code = [tuple(t) for t in code]
        n = len(code)
        if n == 0:
            return CrossingDiagram([])
        ends: dict[int, list] = {}
        xs = []
        m = 2 * n

        def follows(e2, e1):  # e2 comes right after e1 along the traversal
            return e2 == e1 % m + 1

        for k, (a, b, c, d) in enumerate(code):
            if not follows(c, a):
                raise ValueError(f"PD tuple {k}: under strand must run a -> c")
            if follows(d, b):
                sign = -1  # over flows slot 1 -> slot 3
            elif follows(b, d):
                sign = 1   # over flows slot 3 -> slot 1
            else:
                raise ValueError(f"PD tuple {k}: over edges not consecutive")
            x = Crossing(sign, k)
            xs.append(x)
            for slot, e in enumerate((a, b, c, d)):
                ends.setdefault(e, []).append((x, slot))
        for e, ps in ends.items():
            if len(ps) != 2:
                raise ValueError(f"edge {e} appears {len(ps)} times in PD code")
            (x1, s1), (x2, s2) = ps
            x1.adjacent[s1] = (x2, s2)
            x2.adjacent[s2] = (x1, s1)
        return CrossingDiagram(xs)

    def copy(self) -> "CrossingDiagram":
        clones = {id(c): Crossing(c.sign, c.label) for c in self.crossings}
        for c in self.crossings:
            clone = clones[id(c)]
            for s in range(4):
                o, os = c.adjacent[s]
                clone.adjacent[s] = (clones[id(o)], os)
        return CrossingDiagram([clones[id(c)] for c in self.crossings],
                               self.free_loops)

    def mirror(self) -> "CrossingDiagram":
        """Reflect through the projection plane: over/under swap everywhere."""
        swap = {0: 0, 1: 3, 2: 2, 3: 1}
        clones = {id(c): Crossing(-c.sign, c.label) for c in self.crossings}
        for c in self.crossings:
            clone = clones[id(c)]
            for s in range(4):
                o, os = c.adjacent[s]
                clone.adjacent[swap[s]] = (clones[id(o)], swap[os])
        return CrossingDiagram([clones[id(c)] for c in self.crossings],
                               self.free_loops)

    # -- basic queries --------------------------------------------------

    def __len__(self):
        return len(self.crossings)

    def writhe(self) -> int:
        return sum(c.sign for c in self.crossings)

    def _traverse(self, start=None):
        """Yield (crossing, in_slot) passages along one strand until closed."""
        if start is None:
            c0 = self.crossings[0]
            start = c0.adjacent[2]  # whoever receives c0's under-out edge
        here = start
        while True:
            yield here
            c, s = here
            here = c.adjacent[(s + 2) % 4]
            if here == start:
                return

    def components(self) -> int:
        if not self.crossings:
            return max(self.free_loops, 1) if self.free_loops else 0
        seen = set()
        comps = 0
        for c in self.crossings:
            for s in range(4):
                if (id(c), s) in seen:
                    continue
                comps += 1
                for cc, ss in self._traverse((c, s)):
                    seen.add((id(cc), ss))
                    seen.add((id(cc), (ss + 2) % 4))
        return comps + self.free_loops

    def passage_list(self):
        """Traversal of a one-component diagram: [(crossing, is_over), ...]."""
        if not self.crossings:
            return []
        out = []
        for c, s in self._traverse():
            out.append((c, s % 2 == 1))
        if len(out) != 2 * len(self.crossings):
            raise ValueError("not a knot: diagram has several components")
        return out

    def pd_code(self):
        """Edge-numbered PD tuples (slots in CCW order from incoming under).

        Edges are numbered 1..2n along the traversal from a deterministic
        basepoint, so identical diagrams serialize identically.
        """
        if not self.crossings:
            return []
        passages = self.passage_list()
        m = len(passages)
        # edge k (1-based) enters passage k (0-based index k % m)
        labels = {}
        for k, (c, over) in enumerate(passages):
            in_slot = 0 if not over else (3 if c.sign > 0 else 1)
            out_slot = (in_slot + 2) % 4
            labels[(id(c), in_slot)] = k if k != 0 else m
            labels[(id(c), out_slot)] = k + 1
        return [tuple(labels[(id(c), s)] for s in range(4))
                for c in sorted(self.crossings, key=lambda c: labels[(id(c), 0)])]

    def gauss_sequence(self):
        """Signed Gauss sequence: +id over-passage, -id under-passage, with
        crossing ids in traversal order of first visit."""
        if not self.crossings:
            return []
        passages = self.passage_list()
        ids = {}
        seq = []
        for c, over in passages:
            if id(c) not in ids:
                ids[id(c)] = len(ids) + 1
            seq.append(ids[id(c)] if over else -ids[id(c)])
        return seq

    def euler_check(self) -> bool:
        """V - E + F == 2 for each connected piece; guards surgery bugs."""
        if not self.crossings:
            return True
        corners = {(id(c), s): (c, s) for c in self.crossings for s in range(4)}
        seen = set()
        faces = 0
        for key, (c, s) in corners.items():
            if key in seen:
                continue
            faces += 1
            cc, ss = c, s
            while (id(cc), ss) not in seen:
                seen.add((id(cc), ss))
                oc, os = cc.adjacent[ss]
                cc, ss = oc, (os + 1) % 4
        v = len(self.crossings)
        return v - 2 * v + faces == 2

    def serialize(self) -> str:
        """One line per crossing: four edge ids, space separated."""
        return "\n".join(" ".join(str(e) for e in row) for row in self.pd_code())

    @staticmethod
    def deserialize(text: str) -> "CrossingDiagram":
        rows = [tuple(int(x) for x in line.split())
                for line in text.strip().splitlines() if line.strip()]
        return CrossingDiagram.from_pd(rows)

    # -- Reidemeister surgery -------------------------------------------

    def _remove(self, removed, pairings):
        """Delete crossings, reconnecting through-strands.

        ``pairings`` lists the net (port, port) connections the removed
        region makes between its attachment slots.  External edges are
        re-joined by walking through the region; chains that never leave it
        become free loops.
        """
        removed_ids = {id(c) for c in removed}
        through = {}
        for (c1, s1), (c2, s2) in pairings:
            through[(id(c1), s1)] = (c2, s2)
            through[(id(c2), s2)] = (c1, s1)

        new_edges = []
        consumed = set()
        for c in self.crossings:
            if id(c) in removed_ids:
                continue
            for s in range(4):
                o, os = c.adjacent[s]
                if id(o) not in removed_ids or (id(c), s) in consumed:
                    continue
                cc, ss = o, os
                while True:
                    cc, ss = through[(id(cc), ss)]
                    nxt, nxts = cc.adjacent[ss]
                    if id(nxt) not in removed_ids:
                        break
                    cc, ss = nxt, nxts
                new_edges.append(((c, s), (nxt, nxts)))
                consumed.add((id(c), s))
                consumed.add((id(nxt), nxts))
        # chains never reaching the outside = free loops
        visited = set()
        loops = 0
        for key in through:
            if key in visited:
                continue
            start = key
            cc0 = next(x for x in removed if id(x) == key[0])
            cc, ss = cc0, key[1]
            internal = True
            chain = set()
            while True:
                chain.add((id(cc), ss))
                oc, os = through[(id(cc), ss)]
                chain.add((id(oc), os))
                nc, ns = oc.adjacent[os]
                if id(nc) not in removed_ids:
                    internal = False
                    break
                cc, ss = nc, ns
                if (id(cc), ss) == start:
                    break
            visited |= chain
            if internal:
                loops += 1
        for (c1, s1), (c2, s2) in new_edges:
            c1.adjacent[s1] = (c2, s2)
            c2.adjacent[s2] = (c1, s1)
        self.crossings = [c for c in self.crossings if id(c) not in removed_ids]
        self.free_loops += loops

    def reidemeister_1(self, c) -> bool:
        """Remove a kink at crossing c if one of its edges is a loop between
        cyclically-adjacent slots."""
        for i in range(4):
            if c.adjacent[i] == (c, (i + 1) % 4):
                a, b = (i + 2) % 4, (i + 3) % 4
                self._remove([c], [((c, a), (c, b))])
                return True
        return False

    def reidemeister_2(self, a_crossing) -> bool:
        """Remove a bigon at this crossing if a type-2 move applies."""
        A = a_crossing
        for a in range(4):
            B, b = A.adjacent[a]
            B2, b2 = A.adjacent[(a + 1) % 4]
            if B is A or B is not B2 or B2 is A:
                continue
            if (b - 1) % 4 == b2 and (a + b) % 2 == 0:
                pairings = [((A, (a + 2) % 4), (B, (b + 2) % 4)),
                            ((A, (a + 3) % 4), (B, (b + 1) % 4))]
                self._remove([A, B], pairings)
                return True
        return False

    def _faces(self):
        out = []
        seen = set()
        for c in self.crossings:
            for s in range(4):
                if (id(c), s) in seen:
                    continue
                face = []
                cc, ss = c, s
                while (id(cc), ss) not in seen:
                    seen.add((id(cc), ss))
                    face.append((cc, ss))
                    oc, os = cc.adjacent[ss]
                    cc, ss = oc, (os + 1) % 4
                out.append(face)
        return out

    def reidemeister_3_triangles(self):
        """Triangular faces admitting a type-3 slide: three distinct
        crossings and one side lying over (or under) at both ends."""
        tris = []
        for face in self._faces():
            if len(face) != 3:
                continue
            cs = [c for c, _ in face]
            if len({id(c) for c in cs}) != 3:
                continue
            movable = False
            for k in range(3):
                c1, s1 = face[k]
                c2, s2 = face[(k + 1) % 3]
                # edge from (c1, s1) to (c2, (s2 - 1) % 4)
                if s1 % 2 == (s2 - 1) % 4 % 2:
                    movable = True
            if movable:
                tris.append(face)
        return tris

    def reidemeister_3(self, face) -> bool:
        """Slide the triangle: rotate each corner crossing's connections by
        two slots (crossing signs and over/under data are unchanged)."""
        cs = [c for c, _ in face]
        if len({id(c) for c in cs}) != 3:
            return False
        old = {id(c): list(c.adjacent) for c in cs}
        in_tri = {id(c) for c in cs}

        def remap(port):
            c, s = port
            return (c, (s + 2) % 4) if id(c) in in_tri else (c, s)

        for c in cs:
            for s in range(4):
                tgt = remap(old[id(c)][(s + 2) % 4])
                c.adjacent[s] = tgt
                tc, ts = tgt
                if id(tc) not in in_tri:
                    tc.adjacent[ts] = (c, s)
        return True

    def simplify_basic(self) -> bool:
        """R1/R2 to a fixpoint; True if anything was removed."""
        progress = False
        again = True
        while again:
            again = False
            for c in list(self.crossings):
                if c not in self.crossings:
                    continue
                if self.reidemeister_1(c) or self.reidemeister_2(c):
                    progress = again = True
                    break
        return progress


R3_CAP = 64


def simplify(diagram: CrossingDiagram, r3_cap: int = R3_CAP) -> CrossingDiagram:
    """Reduce with R1/R2 plus bounded R3 slides to expose more reductions.

    Knot type is preserved.  R3 states are explored breadth-first (capped at
    ``r3_cap`` expansions per improvement); the smallest diagram wins.
    """
    best = diagram.copy()
    best.simplify_basic()
    while True:
        if len(best) == 0:
            return best
        seen = {best.serialize()}
        frontier = [best]
        expansions = 0
        improved = None
        while frontier and expansions < r3_cap and improved is None:
            d = frontier.pop(0)
            for k in range(len(d.reidemeister_3_triangles())):
                d2 = d.copy()
                tris = d2.reidemeister_3_triangles()
                if k >= len(tris):
                    break
                d2.reidemeister_3(tris[k])
                d2.simplify_basic()
                expansions += 1
                if len(d2) < len(best):
                    improved = d2
                    break
                key = d2.serialize()
                if key not in seen:
                    seen.add(key)
                    frontier.append(d2)
                if expansions >= r3_cap:
                    break
        if improved is None:
            return best
        best = improved
