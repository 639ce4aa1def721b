"""Crossing-level tangle and link diagrams.

A diagram is a set of crossings plus a perfect matching ("mate") on points.
Points are crossing ports ``("x", i, d)`` and, for tangles, the boundary
endpoints ``("b", d)``.  Directions are page-fixed: 0=NW, 1=NE, 2=SE, 3=SW,
clockwise.  Each crossing is an X whose strands run NW-SE (ports 0-2) and
NE-SW (ports 1-3); ``over[i]`` is True when the NW-SE strand is on top,
which is the crossing of the tangle [1] (page sign +1).

Rotation and reflection keep every crossing an X aligned with the page, so
the page sign of a crossing is always defined; both operations flip it.
"""

from __future__ import annotations

from .expr import Product, QLoop, RationalSeq, Reflect, Rotate, Sum
from .slope import twist_tree

NW, NE, SE, SW = range(4)
DIRECTIONS = ("NW", "NE", "SE", "SW")


def _rot(d):
    # counterclockwise quarter turn: NW->SW, NE->NW, SE->NE, SW->SE
    return (d - 1) % 4


def _ref(d):
    return d ^ 1


def contract(mate, glue, removed):
    """Splice through glued points.

    ``mate`` is a perfect matching; ``glue`` pairs up the points in
    ``removed``.  Returns the matching induced on the kept points and the
    number of closed loops made only of removed points.
    """
    out = {}
    seen = set()
    for p in mate:
        if p in removed or p in out:
            continue
        cur = mate[p]
        while cur in removed:
            seen.add(cur)
            nxt = glue[cur]
            seen.add(nxt)
            cur = mate[nxt]
        out[p] = cur
        out[cur] = p
    loops = 0
    for p in removed:
        if p in seen:
            continue
        loops += 1
        cur = p
        while cur not in seen:
            seen.add(cur)
            nxt = mate[cur]
            seen.add(nxt)
            cur = glue[nxt]
    return out, loops


class Diagram:
    """Crossings, a matching on points, and a count of crossingless loops."""

    def __init__(self, over, mate, loops=0):
        self.over = list(over)
        self.mate = dict(mate)
        self.loops = loops

    # -- construction ------------------------------------------------------

    @classmethod
    def crossing(cls, sign=1):
        mate = {}
        for d in range(4):
            mate[("x", 0, d)] = ("b", d)
            mate[("b", d)] = ("x", 0, d)
        return cls([sign > 0], mate)

    @classmethod
    def horizontal_arcs(cls):
        mate = {("b", NW): ("b", NE), ("b", NE): ("b", NW),
                ("b", SW): ("b", SE), ("b", SE): ("b", SW)}
        return cls([], mate)

    @property
    def n_crossings(self):
        return len(self.over)

    def _map_points(self, fx=None, fb=None):
        def f(p):
            if p[0] == "x":
                return fx(p) if fx else p
            if p[0] == "b":
                return fb(p) if fb else p
            return p
        return {f(p): f(q) for p, q in self.mate.items()}

    def rotate(self):
        mate = self._map_points(lambda p: ("x", p[1], _rot(p[2])), lambda p: ("b", _rot(p[1])))
        return Diagram([not o for o in self.over], mate, self.loops)

    def reflect(self):
        mate = self._map_points(lambda p: ("x", p[1], _ref(p[2])), lambda p: ("b", _ref(p[1])))
        return Diagram([not o for o in self.over], mate, self.loops)

    def _shifted(self, offset, tag):
        return self._map_points(lambda p: ("x", p[1] + offset, p[2]), lambda p: (tag, p[1]))

    def __add__(self, other):
        """Tangle sum: east side of self glued to west side of other."""
        n = self.n_crossings
        mate = self._shifted(0, "A")
        mate.update(other._shifted(n, "B"))
        glue = {("A", NE): ("B", NW), ("B", NW): ("A", NE),
                ("A", SE): ("B", SW), ("B", SW): ("A", SE)}
        new, loops = contract(mate, glue, set(glue))
        rename = {("A", NW): ("b", NW), ("A", SW): ("b", SW),
                  ("B", NE): ("b", NE), ("B", SE): ("b", SE)}
        new = {rename.get(p, p): rename.get(q, q) for p, q in new.items()}
        return Diagram(self.over + other.over, new, self.loops + other.loops + loops)

    def substitute(self, factor):
        """Tangle product: each crossing replaced by factor or its reflection."""
        mirrored = factor.reflect()
        over = []
        mate = {p: q for p, q in self.mate.items()}
        glue = {}
        loops = self.loops
        offset = 0
        for i, o in enumerate(self.over):
            piece = factor if o else mirrored
            loops += piece.loops
            for p, q in piece.mate.items():
                mate[self._piece_point(p, i, offset)] = self._piece_point(q, i, offset)
            for d in range(4):
                glue[("x", i, d)] = ("g", i, d)
                glue[("g", i, d)] = ("x", i, d)
            over.extend(piece.over)
            offset += piece.n_crossings
        new, extra = contract(mate, glue, set(glue))
        new = {_unstage(p): _unstage(q) for p, q in new.items()}
        return Diagram(over, new, loops + extra)

    @staticmethod
    def _piece_point(p, i, offset):
        if p[0] == "x":
            return ("y", p[1] + offset, p[2])
        return ("g", i, p[1])

    def glue_boundary(self, pairs):
        """Join boundary endpoints pairwise, e.g. a closure."""
        glue = {}
        for a, b in pairs:
            glue[("b", a)] = ("b", b)
            glue[("b", b)] = ("b", a)
        new, loops = contract(self.mate, glue, set(glue))
        return Diagram(self.over, new, self.loops + loops)

    def boundary_pairing(self):
        """For each boundary endpoint, the endpoint its string ends at (None on loops)."""
        out = {}
        for d in range(4):
            cur = ("b", d)
            nxt = self.mate[cur]
            while nxt[0] == "x":
                cur = ("x", nxt[1], (nxt[2] + 2) % 4)
                nxt = self.mate[cur]
            out[d] = nxt[1]
        return out

    # -- closed diagram queries --------------------------------------------

    def traverse(self):
        """Oriented components through crossings.

        Returns a list of components, each a list of (crossing, entry port).
        """
        comps = []
        seen = set()
        for i in range(self.n_crossings):
            for d in range(4):
                if (i, d) in seen:
                    continue
                comp = []
                exit_port = (i, d)
                while True:
                    q = self.mate[("x",) + exit_port]
                    if q[0] != "x":
                        raise ValueError("traverse needs a closed diagram")
                    entry = (q[1], q[2])
                    if entry in seen:
                        break
                    seen.add(entry)
                    out = (q[1], (q[2] + 2) % 4)
                    seen.add(out)
                    comp.append(entry)
                    exit_port = out
                if comp:
                    comps.append(comp)
        return comps

    def components(self):
        return len(self.traverse()) + self.loops

    def inside_loops(self):
        """Closed components of a tangle diagram that avoid the boundary."""
        touched = set()
        for d in range(4):
            cur = ("b", d)
            nxt = self.mate[cur]
            while nxt[0] == "x":
                touched.add((nxt[1], nxt[2]))
                cur = ("x", nxt[1], (nxt[2] + 2) % 4)
                touched.add((cur[1], cur[2]))
                nxt = self.mate[cur]
        count = self.loops
        seen = set(touched)
        for i in range(self.n_crossings):
            for d in range(4):
                if (i, d) in seen:
                    continue
                count += 1
                cur = (i, d)
                while cur not in seen:
                    seen.add(cur)
                    opp = (cur[0], (cur[1] + 2) % 4)
                    seen.add(opp)
                    q = self.mate[("x",) + opp]
                    cur = (q[1], q[2])
        return count

    def is_over(self, crossing, port):
        return self.over[crossing] == (port % 2 == 0)

    def is_alternating(self):
        for comp in self.traverse():
            levels = [self.is_over(c, p) for c, p in comp]
            for k in range(len(levels)):
                if levels[k] == levels[k - 1]:
                    return False
        return True

    def shadow_components(self):
        parent = list(range(self.n_crossings))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for p, q in self.mate.items():
            if p[0] == "x" and q[0] == "x":
                parent[find(p[1])] = find(q[1])
        return len({find(i) for i in range(self.n_crossings)}) + self.loops

    def is_split(self):
        return self.shadow_components() > 1

    def pd_code(self):
        """PD entries X[a,b,c,d] (incoming under arc first, counterclockwise)."""
        label = {}
        entering = set()
        k = 0
        for comp in self.traverse():
            for c, p in comp:
                k += 1
                entering.add((c, p))
            # label edges in traversal order: edge ending at entry port
            start = k - len(comp)
            for idx, (c, p) in enumerate(comp):
                q = self.mate[("x", c, p)]
                label[(c, p)] = start + idx + 1
                label[(q[1], q[2])] = start + idx + 1
        code = []
        for c in range(self.n_crossings):
            under = (1, 3) if self.over[c] else (0, 2)
            u = under[0] if (c, under[0]) in entering else under[1]
            code.append(tuple(label[(c, (u - j) % 4)] for j in range(4)))
        return code

    def pd_text(self):
        lines = ["X[" + ",".join(str(a) for a in x) + "]" for x in self.pd_code()]
        n = sum(1 for _ in self.traverse())
        for j in range(self.loops):
            lines.append(f"O[{n + j + 1}]")
        return "\n".join(lines)

    def faces(self):
        """Face id of every corner (crossing, k) between ports k and k+1."""
        face = {}
        nf = 0
        for c in range(self.n_crossings):
            for d in range(4):
                if (c, d) in face:
                    continue
                cur = (c, d)
                while cur not in face:
                    face[cur] = nf
                    q = self.mate[("x",) + cur]
                    cur = (q[1], (q[2] + 1) % 4)
                nf += 1
        # dart (c, d) leaves through port d, after the corner (c, d-1)
        return {(c, (d - 1) % 4): f for (c, d), f in face.items()}, nf


def _unstage(p):
    if p[0] == "y":
        return ("x", p[1] + 10**9, p[2])
    return p


def tangle_diagram(e) -> Diagram:
    """Crossing-level diagram of a tangle expression."""
    if isinstance(e, RationalSeq):
        if e.coeffs == (0,):
            return Diagram.horizontal_arcs()
        if len(e.coeffs) == 1 and abs(e.coeffs[0]) == 1:
            return Diagram.crossing(e.coeffs[0])
        return tangle_diagram(twist_tree(e.coeffs))
    if isinstance(e, QLoop):
        vertical = Diagram.horizontal_arcs().rotate()
        d = vertical
        for _ in range(e.m):
            d = d + vertical
        return d.rotate()
    if isinstance(e, Sum):
        return tangle_diagram(e.left) + tangle_diagram(e.right)
    if isinstance(e, Rotate):
        return tangle_diagram(e.inner).rotate()
    if isinstance(e, Reflect):
        return tangle_diagram(e.inner).reflect()
    if isinstance(e, Product):
        return _renumber(tangle_diagram(e.left).substitute(tangle_diagram(e.right)))
    raise TypeError(f"not a tangle expression: {e!r}")


def _renumber(d):
    # substitute() stages factor crossings at ids offset by 10**9
    mate = {}
    for p, q in d.mate.items():
        mate[_re(p)] = _re(q)
    return Diagram(d.over, mate, d.loops)


def _re(p):
    if p[0] == "x":
        if p[1] < 10**9:
            raise AssertionError("substitution left an original crossing behind")
        return ("x", p[1] - 10**9, p[2])
    return p
