"""Diagram templates: 4-valent graphs in the sphere with a tangle at every vertex.

A template is a rotation system.  Each vertex has ports 0=NW, 1=NE, 2=SE,
3=SW in clockwise order, and every port is joined to exactly one other
port.  Substituting the vertex tangles and wiring the ports gives a
crossing-level link diagram.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .diagram import Diagram, contract, tangle_diagram
from .errors import InvalidTemplate, TangleError
from .expr import RationalSeq, Reflect, infinity_tangle
from .notation import parse, render
from .slope import slope


@dataclass(frozen=True)
class DiagramTemplate:
    vertices: tuple
    edges: tuple
    tangles: dict = field(default_factory=dict, compare=False)
    closure: bool = False

    @classmethod
    def build(cls, vertices, edges, tangles, closure=False):
        edges = tuple(((str(a), int(p)), (str(b), int(q))) for (a, p), (b, q) in edges)
        return cls(tuple(str(v) for v in vertices), edges, dict(tangles), closure)

    def with_tangles(self, **changes):
        tangles = dict(self.tangles)
        tangles.update(changes)
        return DiagramTemplate(self.vertices, self.edges, tangles, self.closure)

    def mate(self):
        m = {}
        for a, b in self.edges:
            m[a] = b
            m[b] = a
        return m

    # -- file format -------------------------------------------------------

    def to_json(self):
        return {
            "closure": self.closure,
            "vertices": [{"id": v} for v in self.vertices],
            "edges": [[list(a), list(b)] for a, b in self.edges],
            "tangles": {v: render(self.tangles[v]) for v in self.vertices if v in self.tangles},
        }

    @classmethod
    def from_json(cls, data):
        try:
            vertices = [v["id"] for v in data["vertices"]]
            edges = [(tuple(a), tuple(b)) for a, b in data["edges"]]
            tangles = {v: parse(s) for v, s in data.get("tangles", {}).items()}
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidTemplate([f"malformed template file: {exc}"]) from exc
        return cls.build(vertices, edges, tangles, bool(data.get("closure", False)))

    def dumps(self):
        data = self.to_json()
        edges = ",\n    ".join(json.dumps(e) for e in data["edges"])
        tangles = ",\n    ".join(f"{json.dumps(k)}: {json.dumps(v)}" for k, v in data["tangles"].items())
        return (f'{{\n  "closure": {json.dumps(data["closure"])},\n'
                f'  "vertices": {json.dumps(data["vertices"])},\n'
                f'  "edges": [\n    {edges}\n  ],\n'
                f'  "tangles": {{\n    {tangles}\n  }}\n}}')

    @classmethod
    def loads(cls, text):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InvalidTemplate([f"template is not valid JSON: {exc}"]) from exc
        return cls.from_json(data)


def load_template(path):
    with open(path) as fh:
        return DiagramTemplate.loads(fh.read())


def save_template(t, path):
    with open(path, "w") as fh:
        fh.write(t.dumps() + "\n")


# ---------------------------------------------------------------------------
# validation

@dataclass
class ValidationReport:
    violations: list
    faces: list

    @property
    def ok(self):
        return not self.violations


def template_faces(t):
    """Faces as lists of corners (v, k); corner k sits between ports k and k+1."""
    mate = t.mate()
    seen = set()
    faces = []
    for v in t.vertices:
        for d in range(4):
            if (v, d) in seen or (v, d) not in mate:
                continue
            face = []
            cur = (v, d)
            while cur not in seen:
                seen.add(cur)
                face.append((cur[0], (cur[1] - 1) % 4))
                nxt = mate.get(cur)
                if nxt is None:
                    break
                cur = (nxt[0], (nxt[1] + 1) % 4)
            faces.append(face)
    return faces


def _connected(t):
    if not t.vertices:
        return False
    adj = {v: set() for v in t.vertices}
    for (a, _), (b, _) in t.edges:
        if a in adj and b in adj:
            adj[a].add(b)
            adj[b].add(a)
    seen = {t.vertices[0]}
    stack = [t.vertices[0]]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(t.vertices)


def validate_template(t: DiagramTemplate) -> ValidationReport:
    violations = []
    ids = set(t.vertices)
    if len(ids) != len(t.vertices):
        violations.append("duplicate vertex ids")
    used = {}
    for a, b in t.edges:
        for v, d in (a, b):
            if v not in ids:
                violations.append(f"edge uses unknown vertex {v!r}")
            elif d not in range(4):
                violations.append(f"port {d} of {v!r} is not in 0..3")
            used[(v, d)] = used.get((v, d), 0) + 1
    for v in t.vertices:
        for d in range(4):
            if used.get((v, d), 0) != 1:
                violations.append(f"port {d} of {v!r} is used {used.get((v, d), 0)} times")
    for v in t.vertices:
        if v not in t.tangles:
            violations.append(f"vertex {v!r} has no tangle")
    if violations:
        return ValidationReport(violations, [])
    if not _connected(t):
        violations.append("underlying graph is disconnected")
    faces = template_faces(t)
    if not t.closure:
        chi = len(t.vertices) - len(t.edges) + len(faces)
        if chi != 2:
            violations.append(f"not a sphere embedding: V - E + F = {chi}")
        for f in faces:
            if len(f) == 1:
                violations.append(f"monogon face at {f[0][0]!r}")
            elif len(f) == 2:
                violations.append(f"bigon face at {f[0][0]!r}, {f[1][0]!r}")
    return ValidationReport(violations, faces)


# ---------------------------------------------------------------------------
# assembly

def assemble(t: DiagramTemplate) -> Diagram:
    report = validate_template(t)
    if not report.ok:
        raise InvalidTemplate(report.violations)
    over = []
    mate = {}
    loops = 0
    for v in t.vertices:
        d = tangle_diagram(t.tangles[v])
        base = len(over)
        over.extend(d.over)
        loops += d.loops
        for p, q in d.mate.items():
            mate[_lift(p, v, base)] = _lift(q, v, base)
    glue = {}
    for (a, p), (b, q) in t.edges:
        glue[("t", a, p)] = ("t", b, q)
        glue[("t", b, q)] = ("t", a, p)
    new, extra = contract(mate, glue, set(glue))
    return Diagram(over, new, loops + extra)


def _lift(p, v, base):
    if p[0] == "x":
        return ("x", p[1] + base, p[2])
    return ("t", v, p[1])


def crossing_owner(t):
    """Vertex id for each crossing index of assemble(t)."""
    owner = []
    for v in t.vertices:
        owner.extend([v] * tangle_diagram(t.tangles[v]).n_crossings)
    return owner


def trace_components(d: Diagram) -> int:
    return d.components()


def basic_tangle(e):
    s = slope(e)
    if s.is_infinite:
        return infinity_tangle()
    if s.num == 0:
        return RationalSeq((0,))
    return RationalSeq((1,)) if s.num > 0 else Reflect(RationalSeq((1,)))


def basic_diagram(t: DiagramTemplate) -> DiagramTemplate:
    return DiagramTemplate(t.vertices, t.edges,
                           {v: basic_tangle(t.tangles[v]) for v in t.vertices}, t.closure)


def is_algebraically_alternating(t: DiagramTemplate) -> bool:
    return assemble(basic_diagram(t)).is_alternating()


def cut_tangles(t: DiagramTemplate):
    """Vertices of slope 0 or 1/0 whose rational replacement splits the diagram.

    Closed loops that a vertex tangle carries on its own (a literal Q_m
    is drawn as free circles) are ignored; only loops made by the
    replacement count towards splitness.
    """
    found = []
    for v in t.vertices:
        s = slope(t.tangles[v])
        if s.is_infinite:
            rational = infinity_tangle()
        elif s.num == 0:
            rational = RationalSeq((0,))
        else:
            continue
        replaced = t.with_tangles(**{v: rational})
        d = assemble(replaced)
        own = sum(tangle_diagram(replaced.tangles[w]).loops for w in t.vertices)
        if Diagram(d.over, d.mate, d.loops - own).is_split():
            found.append(v)
    return found


def find_cut_tangles(t: DiagramTemplate):
    """[{"vertex": id, "genus": g}]; genus is None if the surface calculus refuses."""
    from .surface import genus

    out = []
    for v in cut_tangles(t):
        try:
            g = genus(t.tangles[v])
        except TangleError:
            g = None
        out.append({"vertex": v, "genus": g})
    return out


# ---------------------------------------------------------------------------
# standard templates

NUMERATOR_EDGES = ((("v", 0), ("v", 1)), (("v", 3), ("v", 2)))
DENOMINATOR_EDGES = ((("v", 0), ("v", 3)), (("v", 1), ("v", 2)))


def numerator_template(e):
    return DiagramTemplate.build(["v"], NUMERATOR_EDGES, {"v": e}, closure=True)


def denominator_template(e):
    return DiagramTemplate.build(["v"], DENOMINATOR_EDGES, {"v": e}, closure=True)


def medial_template(rotation, prefix="m"):
    """Medial graph of a plane graph given by counterclockwise neighbour lists.

    The medial vertex of edge {u, v} is oriented so that u is its west
    side; ports are filled from the corners at u and v.
    """
    def after(x, y, step):
        ring = rotation[x]
        return ring[(ring.index(y) + step) % len(ring)]

    edges_g = sorted({tuple(sorted((u, v))) for u in rotation for v in rotation[u]})
    name = {e: f"{prefix}{i}" for i, e in enumerate(edges_g)}

    def mid(a, b):
        return name[tuple(sorted((a, b)))]

    slots = {}
    for (u, v) in edges_g:
        me = name[(u, v)]
        ports = {
            0: (u, after(u, v, 1)),
            1: (v, after(v, u, -1)),
            2: (v, after(v, u, 1)),
            3: (u, after(u, v, -1)),
        }
        for d, (x, z) in ports.items():
            y = v if x == u else u
            slots.setdefault((x, frozenset((y, z))), []).append((me, d))
    pairs = []
    for key, ends in slots.items():
        if len(ends) != 2:
            raise ValueError(f"medial corner {key} has {len(ends)} ports")
        pairs.append(tuple(ends))
    pairs.sort()
    vertices = [name[e] for e in edges_g]
    return DiagramTemplate.build(vertices, pairs, {})


def wheel(n):
    rot = {0: list(range(1, n + 1))}
    for i in range(1, n + 1):
        rot[i] = [i % n + 1, 0, (i - 2) % n + 1]
    return rot


def prism(n):
    rot = {}
    for i in range(n):
        a, b = ("a", i), ("b", i)
        rot[a] = [("a", (i + 1) % n), b, ("a", (i - 1) % n)]
        rot[b] = [a, ("b", (i + 1) % n), ("b", (i - 1) % n)]
    return rot


def octahedron(prefix="o"):
    return medial_template(wheel(3), prefix)


def alternating_signs(t: DiagramTemplate):
    """Sign per vertex making the all-crossing assembly alternating."""
    colour = {}
    faces = template_faces(t)
    face_of = {c: i for i, f in enumerate(faces) for c in f}
    adj = {i: set() for i in range(len(faces))}
    for v in t.vertices:
        for k in range(4):
            a, b = face_of[(v, k)], face_of[(v, (k + 1) % 4)]
            adj[a].add(b)
            adj[b].add(a)
    for start in range(len(faces)):
        if start in colour:
            continue
        colour[start] = 0
        stack = [start]
        while stack:
            f = stack.pop()
            for g in adj[f]:
                if g not in colour:
                    colour[g] = 1 - colour[f]
                    stack.append(g)
    return {v: 1 if colour[face_of[(v, 1)]] == 0 else -1 for v in t.vertices}


def signed(e, sign):
    """e if its slope sign already matches, else its reflection."""
    s = slope(e)
    positive = not s.is_infinite and s.num > 0
    if s.is_infinite or s.num == 0 or positive == (sign > 0):
        return e
    return Reflect(e)


def alternating_template(t: DiagramTemplate, tangles=None):
    """t with a tangle of the alternating sign at every vertex (default [1])."""
    signs = alternating_signs(t)
    tangles = dict(tangles or {})
    out = {}
    for v in t.vertices:
        out[v] = signed(tangles.get(v, RationalSeq((1,))), signs[v])
    return DiagramTemplate(t.vertices, t.edges, out, t.closure)
