"""Named tangles and templates with known answers."""

from __future__ import annotations

from .expr import QLoop, RationalSeq, Sum
from .notation import parse
from .template import (
    DiagramTemplate,
    alternating_template,
    medial_template,
    octahedron,
    wheel,
)

# slope 0; its surface is a pair of pants
ONE_THIRD = "-[3]^r + [3]^r"
# slope 0; its surface is a once-punctured torus
HALF_THIRD = "(-[2]^r + [3]^r)^r + [6]"


def bridge_template(tangle, prefix=("a", "b")):
    """Two octahedra, each missing one edge, joined through vertex "v".

    The loose ends of the first octahedron go to NW and NE of "v", those
    of the second to SE and SW, so a slope-0 tangle at "v" is the only
    link between the halves.
    """
    o1, o2 = octahedron(prefix[0]), octahedron(prefix[1])
    (x1, y1), (x2, y2) = o1.edges[0], o2.edges[0]
    edges = list(o1.edges[1:]) + list(o2.edges[1:])
    edges += [(x1, ("v", 0)), (y1, ("v", 1)), (x2, ("v", 2)), (y2, ("v", 3))]
    t = DiagramTemplate.build(list(o1.vertices) + list(o2.vertices) + ["v"], edges, {})
    return alternating_template(t, {"v": tangle})


def sphere_fixture():
    """Bridge carrying the slope-0 pair-of-pants tangle: a genus-0 cut tangle."""
    return bridge_template(parse(ONE_THIRD))


def torus_fixture():
    """Bridge carrying the slope-0 once-punctured-torus tangle."""
    return bridge_template(parse(HALF_THIRD))


def q2_fixture():
    """Octahedron with Q_2 + [3] at one vertex."""
    t = octahedron("o")
    return alternating_template(t, {t.vertices[0]: Sum(QLoop(2), RationalSeq((3,)))})


def closed_subtangle_fixture():
    """Octahedron with a vertex carrying the sum of two slope-1/0 tangles."""
    t = octahedron("o")
    closed = parse(f"({ONE_THIRD})^r + ({ONE_THIRD})^r")
    return alternating_template(t, {t.vertices[0]: closed})


def alternating_knot_fixture():
    """All-crossing medial template of the 4-wheel: an alternating knot."""
    return alternating_template(medial_template(wheel(4), "w"))
