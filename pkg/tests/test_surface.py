import random

import pytest
from hypothesis import given, settings, strategies as st

from algtangle.errors import ClosedSubtangle
from algtangle.expr import QLoop, Reflect, Rotate, Sum
from algtangle.generate import random_expr
from algtangle.notation import parse
from algtangle.rational import ZERO, ExtendedRational
from algtangle.slope import find_closed_subtangles, slope
from algtangle.surface import (
    SurfaceData,
    arcs_in_gluing_disk,
    genus,
    glue,
    surface_of,
    surface_report,
)

ONE_THIRD = "-[3]^r + [3]^r"
HALF_THIRD = "(-[2]^r + [3]^r)^r + [6]"
T_INF = "([2] + -[2])^r"


def _profile(f):
    return f.euler, f.boundary_count, f.boundary_slope, f.genus


def test_rational_tangles_are_disks():
    assert _profile(surface_of(parse("[3]"))) == (1, 1, ExtendedRational(3, 1), 0)
    assert genus(parse("[2 -3 4]")) == 0


def test_pair_of_pants():
    assert _profile(surface_of(parse(ONE_THIRD))) == (-1, 3, ZERO, 0)


def test_once_punctured_torus():
    assert _profile(surface_of(parse(HALF_THIRD))) == (-1, 1, ZERO, 1)
    report = surface_report(parse(HALF_THIRD))
    # inner sum of 1/2 and -1/3 glues along 6 arcs, the outer one along 1
    assert sorted(g.arcs for g in report.gluings) == [1, 6]


def test_arcs_in_gluing_disk():
    assert arcs_in_gluing_disk(ExtendedRational(1, 3)) == 3
    assert arcs_in_gluing_disk(ExtendedRational(1, 6)) == 6
    assert arcs_in_gluing_disk(ExtendedRational(6, 1)) == 1
    assert arcs_in_gluing_disk(ExtendedRational(1, 0)) == 0


def test_glue_of_two_disks():
    a = SurfaceData(1, 1, ExtendedRational(1, 2), 0)
    b = SurfaceData(1, 1, ExtendedRational(-1, 3), 0)
    f, copies, n = glue(a, b)
    assert copies == (3, 2) and n == 6
    assert _profile(f) == (-1, 1, ExtendedRational(1, 6), 1)


def test_genus_must_be_integral():
    with pytest.raises(ValueError):
        SurfaceData(0, 1, ZERO, 0)


def test_closed_subtangle_refused():
    with pytest.raises(ClosedSubtangle):
        surface_of(parse(f"{T_INF} + {T_INF}"))


def test_infinite_summand_carries_over():
    inner = surface_of(parse(ONE_THIRD))
    f = surface_of(parse(f"({ONE_THIRD})^r + [2]"))
    assert (f.euler, f.boundary_count, f.genus) == (inner.euler, inner.boundary_count, inner.genus)


def test_qloop_annulus():
    assert _profile(surface_of(QLoop(2))) == (0, 2, ZERO, 0)
    assert surface_of(Sum(QLoop(2), parse("[3]"))).boundary_slope == ExtendedRational(3, 1)


def _bounded(seed, **kw):
    return random_expr(random.Random(seed), depth=6, lo=-3, hi=3, max_len=2, **kw)


@settings(max_examples=400, deadline=None)
@given(st.integers(0, 2**32))
def test_surface_invariants(seed):
    e = _bounded(seed, qloops=True)
    if find_closed_subtangles(e):
        with pytest.raises(ClosedSubtangle):
            surface_report(e)
        return
    report = surface_report(e)
    f = report.surface
    assert f.boundary_slope == slope(e)
    assert f.euler <= 1 and f.genus >= 0
    if f.euler == 1:
        assert (f.boundary_count, f.genus) == (1, 0)
    for g in report.gluings:
        m1, m2 = g.copies
        assert g.result.euler == m1 * g.eulers[0] + m2 * g.eulers[1] - g.arcs
    for wrapped in (Rotate(e), Reflect(e)):
        w = surface_of(wrapped)
        assert (w.euler, w.boundary_count, w.genus) == (f.euler, f.boundary_count, f.genus)
