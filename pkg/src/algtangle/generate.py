"""Random tangle expressions and diagram templates for property suites."""

from __future__ import annotations

import random

from .errors import IndefiniteProduct
from .expr import Product, QLoop, RationalSeq, Reflect, Rotate, Sum
from .rational import continued_fraction_value
from .slope import slope


def random_rational(rng: random.Random, max_len=3, lo=-5, hi=5):
    coeffs = tuple(rng.randint(lo, hi) for _ in range(rng.randint(1, max_len)))
    return RationalSeq(coeffs)


def _summand(rng, e):
    if isinstance(e, RationalSeq):
        v = continued_fraction_value(e.coeffs)
        if v.num == 0 or v.den == 0:
            return RationalSeq((rng.choice([-2, -1, 1, 2, 3]),))
    return e


def random_expr(rng: random.Random, depth=6, products=True, qloops=False,
                lo=-5, hi=5, max_len=3):
    """A well-formed expression tree of at most the given depth."""
    if depth <= 1 or rng.random() < 0.25:
        if qloops and rng.random() < 0.08:
            return QLoop(rng.randint(1, 3))
        return random_rational(rng, max_len, lo, hi)
    kind = rng.random()
    sub = dict(products=products, qloops=qloops, lo=lo, hi=hi, max_len=max_len)
    if kind < 0.45:
        left = _summand(rng, random_expr(rng, depth - 1, **sub))
        right = _summand(rng, random_expr(rng, depth - 1, **sub))
        return Sum(left, right)
    if kind < 0.65:
        return Rotate(random_expr(rng, depth - 1, **sub))
    if kind < 0.8 or not products:
        return Reflect(random_expr(rng, depth - 1, **sub))
    # keep products small: the left factor's crossings each get a copy
    left = random_expr(rng, min(depth - 1, 2), **dict(sub, products=False))
    right = random_expr(rng, min(depth - 1, 3), **sub)
    e = Product(left, right)
    try:
        slope(e)
    except IndefiniteProduct:
        return Reflect(right)
    return e


def random_small_expr(rng, max_crossings=14, **kw):
    """Rejection-sample an expression whose diagram has few crossings."""
    from .diagram import tangle_diagram

    while True:
        e = random_expr(rng, **kw)
        if tangle_diagram(e).n_crossings <= max_crossings:
            return e


def random_vertex_tangle(rng, depth=3, allow_flat=False):
    """A loop-free tangle for one template vertex."""
    from .slope import has_loop

    while True:
        e = random_expr(rng, depth=depth, products=True, lo=-3, hi=3, max_len=2)
        if has_loop(e):
            continue
        s = slope(e)
        if not allow_flat and (s.is_infinite or s.num == 0):
            continue
        return e


def random_base_template(rng):
    from .template import medial_template, prism, wheel

    if rng.random() < 0.5:
        return medial_template(wheel(rng.randint(3, 6)), "w")
    return medial_template(prism(rng.randint(3, 5)), "p")


def random_template(rng, depth=3, flat=0.1):
    """A random algebraically alternating template (may be a link)."""
    from .template import alternating_template

    t = random_base_template(rng)
    tangles = {}
    for v in t.vertices:
        if rng.random() < 0.5:
            continue
        tangles[v] = random_vertex_tangle(rng, depth, allow_flat=rng.random() < flat)
    return alternating_template(t, tangles)


def random_knot_template(rng, depth=3, flat=0.1, max_crossings=60):
    """Rejection-sample a template that assembles to a single component."""
    from .template import assemble

    while True:
        t = random_template(rng, depth, flat)
        d = assemble(t)
        if d.n_crossings <= max_crossings and d.components() == 1:
            return t


def rational_for(s):
    """A RationalSeq whose slope is the finite extended rational s."""
    p, q = s.num, s.den
    coeffs = []
    while True:
        a = p // q
        coeffs.append(a)
        p, q = q, p - a * q
        if q == 0:
            break
    return RationalSeq(tuple(reversed(coeffs)))


def random_flat_tangle(rng, depth=4):
    """A random loop-free tangle of slope 0.

    Half the time it has the shape (A + B)^r + C with C cancelling the
    slope, which tends to give surfaces of positive genus.
    """
    from .expr import Rotate
    from .rational import er_neg, er_rotate
    from .slope import has_loop

    while rng.random() < 0.5:
        a = Rotate(random_rational(rng, 2, -4, 4))
        b = _summand(rng, random_rational(rng, 2, -4, 4))
        inner = slope(Sum(a, b))
        if inner.is_infinite or inner.num == 0:
            continue
        x = Rotate(Sum(a, b))
        c = rational_for(er_neg(er_rotate(inner)))
        e = Sum(x, c)
        if not has_loop(e):
            return e
    while True:
        e = random_vertex_tangle(rng, depth, allow_flat=True)
        s = slope(e)
        if s.is_infinite:
            return Rotate(e)
        if s.num == 0:
            return e


def random_bridge_template(rng, depth=3):
    """Two octahedral halves joined through a random slope-0 tangle at "v"."""
    from .fixtures import bridge_template
    from .template import alternating_template

    t = bridge_template(random_flat_tangle(rng, depth))
    tangles = dict(t.tangles)
    for v in t.vertices:
        if v != "v" and rng.random() < 0.3:
            tangles[v] = random_vertex_tangle(rng, 2)
    return alternating_template(t, tangles)
