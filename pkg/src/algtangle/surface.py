"""Euler characteristic, boundary and genus of the essential surface of a tangle.

Boundary curves live on the four-punctured sphere, modelled as the
pillowcase: R^2 modulo translations by 2 and half-turns about integer
points, punctures at integer points, front-face corners NW=(0,1), NE=(1,1),
SW=(0,0), SE=(1,0).  The gluing circle of a tangle sum is x = 1/2, and a
slope p/q curve is the image of a line of slope p/q.  All coordinates are
exact fractions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import lcm

from .errors import ClosedSubtangle, Disconnected
from .expr import QLoop, RationalSeq, Reflect, Rotate, Sum
from .rational import ExtendedRational, ZERO, er_add, er_neg, er_rotate
from .slope import expand_products, find_closed_subtangles, slope

MAX_MULTIPLIER = 4


@dataclass(frozen=True)
class SurfaceData:
    euler: int
    boundary_count: int
    boundary_slope: ExtendedRational
    genus: int

    def __post_init__(self):
        twice = 2 - self.euler - self.boundary_count
        if twice < 0 or twice % 2:
            raise ValueError(f"no orientable surface has euler {self.euler} "
                             f"and {self.boundary_count} boundary curves")


def _make(euler, boundary, s):
    return SurfaceData(euler, boundary, s, (2 - euler - boundary) // 2)


@dataclass
class Gluing:
    """Bookkeeping for one sum node."""

    path: tuple
    copies: tuple
    arcs: int
    eulers: tuple
    result: SurfaceData


@dataclass
class SurfaceReport:
    surface: SurfaceData
    gluings: list = field(default_factory=list)
    warnings: list = field(default_factory=list)


def arcs_in_gluing_disk(s: ExtendedRational) -> int:
    """Essential arcs cut from the gluing disk by one boundary curve of slope s.

    Zero for slope 1/0, whose curves are parallel to the disk boundary.
    """
    return s.den


def side_pattern(s: ExtendedRational, curves: int, side: str):
    """Outer pairing and inner arcs for ``curves`` parallel slope-s curves.

    ``side`` is "west" for the left summand (inner disk is its east half)
    and "east" for the right summand.  Circle coordinates are shifted so
    inner arcs become horizontal, with endpoints t and -t.

    Coordinates are integers: the circle x = 1/2 has length 2, scaled by
    L = 2q(curves+1) so every crossing is a lattice value mod 2L.  Line r
    has offset (r+1)/((curves+1)q), and crossing j sits at x = 1/2 + j;
    the arc from crossing j to j+1 is on the east side for even j.

    Returns (points, outer_pairs, inner_arcs, owner, scale) where owner
    maps a point id to its curve index in the parallel family.
    """
    p, q = s.num, s.den
    scale = 2 * q * (curves + 1)
    period = 2 * scale
    shift = p * (curves + 1) if side == "west" else -p * (curves + 1)
    points, owner, outer, inner = {}, {}, [], []
    for r in range(curves):
        base = len(points)
        for j in range(2 * q):
            y = 2 * (r + 1) + p * (2 * j + 1) * (curves + 1)
            t = y if j % 2 == 0 else -y
            points[base + j] = (t + shift) % period
            owner[base + j] = r
        for j in range(2 * q):
            a, b = base + j, base + (j + 1) % (2 * q)
            if (j % 2 == 0) == (side == "west"):
                inner.append((a, b))
            else:
                outer.append((a, b))
    for a, b in inner:
        if (points[a] + points[b]) % period:
            raise AssertionError("inner arcs did not straighten")
    return points, outer, inner, owner, scale


def _sorted_inner(points, inner, scale):
    """Inner arcs ordered by their endpoint in (0, 1), with (front, back) ids."""
    arcs = []
    for a, b in inner:
        front, back = (a, b) if points[a] < scale else (b, a)
        arcs.append((points[front], front, back))
    arcs.sort()
    return [(front, back) for _, front, back in arcs]


def _copy_of(curve, copies):
    slot, w = divmod(curve, copies)
    # parallel copies are pushed to one side of a separating surface, so
    # their order flips from one boundary slot to the next
    return w if slot % 2 == 0 else copies - 1 - w


def glue(left: SurfaceData, right: SurfaceData, k: int = 1):
    """Glue k times the lcm-minimal parallel copies of two surfaces.

    Returns (surface or None if disconnected, copies, arcs).
    """
    a1 = left.boundary_count * arcs_in_gluing_disk(left.boundary_slope)
    a2 = right.boundary_count * arcs_in_gluing_disk(right.boundary_slope)
    n0 = lcm(a1, a2)
    m1, m2 = k * n0 // a1, k * n0 // a2
    n = k * n0
    pts1, outer1, inner1, own1, sc1 = side_pattern(left.boundary_slope, m1 * left.boundary_count, "west")
    pts2, outer2, inner2, own2, sc2 = side_pattern(right.boundary_slope, m2 * right.boundary_count, "east")
    arcs1, arcs2 = _sorted_inner(pts1, inner1, sc1), _sorted_inner(pts2, inner2, sc2)
    assert len(arcs1) == len(arcs2) == n

    node1, node2 = {}, {}
    for idx, (front, back) in enumerate(arcs1):
        node1[front], node1[back] = 2 * idx, 2 * idx + 1
    for idx, (front, back) in enumerate(arcs2):
        node2[front], node2[back] = 2 * idx, 2 * idx + 1

    # surface components: copies joined along glued arcs
    parent = list(range(m1 + m2))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for (f1, _), (f2, _) in zip(arcs1, arcs2):
        c1 = _copy_of(own1[f1], m1)
        c2 = m1 + _copy_of(own2[f2], m2)
        parent[find(c1)] = find(c2)
    connected = len({find(x) for x in range(m1 + m2)}) == 1

    # boundary curves: cycles of the two outer pairings on the 2n nodes
    adj = [[] for _ in range(2 * n)]
    for a, b in outer1:
        adj[node1[a]].append(node1[b])
        adj[node1[b]].append(node1[a])
    for a, b in outer2:
        adj[node2[a]].append(node2[b])
        adj[node2[b]].append(node2[a])
    seen = [False] * (2 * n)
    boundary = 0
    for v in range(2 * n):
        if seen[v]:
            continue
        boundary += 1
        stack = [v]
        seen[v] = True
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)

    if not connected:
        return None, (m1, m2), n
    euler = m1 * left.euler + m2 * right.euler - n
    s = er_add(left.boundary_slope, right.boundary_slope)
    # each boundary curve of slope p/q crosses the gluing circle 2q times
    if s.den and boundary * s.den != n:
        raise AssertionError(
            f"traced {boundary} boundary curves but {n} glued arcs give {n}/{s.den}")
    return _make(euler, boundary, s), (m1, m2), n


def _surface(e, path, report):
    if isinstance(e, RationalSeq):
        return _make(1, 1, slope(e))
    if isinstance(e, QLoop):
        # the standard annulus of Q_m
        return _make(0, 2, ZERO)
    if isinstance(e, Rotate):
        f = _surface(e.inner, path + ("inner",), report)
        return _make(f.euler, f.boundary_count, er_rotate(f.boundary_slope))
    if isinstance(e, Reflect):
        f = _surface(e.inner, path + ("inner",), report)
        return _make(f.euler, f.boundary_count, er_neg(f.boundary_slope))
    if isinstance(e, Sum):
        f1 = _surface(e.left, path + ("left",), report)
        f2 = _surface(e.right, path + ("right",), report)
        inf1, inf2 = f1.boundary_slope.is_infinite, f2.boundary_slope.is_infinite
        if inf1 and inf2:
            raise ClosedSubtangle(f"sum of two slope-1/0 tangles at {path}")
        if inf1 or inf2:
            # the slope-1/0 surface meets the gluing disk in loops and
            # carries over unchanged
            return f1 if inf1 else f2
        best = None
        for k in range(1, MAX_MULTIPLIER + 1):
            f, copies, n = glue(f1, f2, k)
            if f is None:
                continue
            if best is None or f.genus < best[0].genus:
                best = (f, copies, n)
            if k == 1:
                break
        if best is None:
            raise Disconnected(f"no connected sum within multiplier {MAX_MULTIPLIER} at {path}")
        f, copies, n = best
        if copies != glue_copies(f1, f2):
            report.warnings.append(f"parallelism multiplier search used at {path}")
        report.gluings.append(Gluing(path, copies, n, (f1.euler, f2.euler), f))
        return f
    raise TypeError(f"unexpected node {e!r}")


def glue_copies(f1, f2):
    a1 = f1.boundary_count * arcs_in_gluing_disk(f1.boundary_slope)
    a2 = f2.boundary_count * arcs_in_gluing_disk(f2.boundary_slope)
    n = lcm(a1, a2)
    return (n // a1, n // a2)


def surface_report(e) -> SurfaceReport:
    closed = find_closed_subtangles(e)
    if closed:
        raise ClosedSubtangle(f"closed sub-tangle at {closed[0]}")
    report = SurfaceReport(None)
    report.surface = _surface(expand_products(e), (), report)
    return report


def surface_of(e) -> SurfaceData:
    return surface_report(e).surface


def genus(e) -> int:
    return surface_of(e).genus
