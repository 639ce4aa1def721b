import random

import pytest
from hypothesis import given, settings, strategies as st

from algtangle.errors import IndefiniteProduct, LoopPresent
from algtangle.expr import Product, QLoop, RationalSeq, Reflect, Rotate, Sum, walk
from algtangle.generate import random_expr
from algtangle.notation import parse
from algtangle.rational import INF, ZERO, ExtendedRational, er_add, er_mul, er_neg, er_rotate
from algtangle.slope import (
    SUM_TABLE,
    ParityType,
    classify,
    connection_type,
    expand_products,
    find_closed_subtangles,
    find_qm_summands,
    has_loop,
    has_product,
    slope,
    sum_type,
)

Z, O, D, IND = (ParityType.TypeZeroOne, ParityType.TypeOneZero,
                ParityType.TypeOneOne, ParityType.Indefinite)

ONE_THIRD = "-[3]^r + [3]^r"
HALF_THIRD = "(-[2]^r + [3]^r)^r + [6]"
T_INF = "([2] + -[2])^r"

seeds = st.integers(0, 2**32)


def test_reference_slopes():
    assert slope(parse(ONE_THIRD)) == ZERO
    assert slope(parse(HALF_THIRD)) == ZERO
    assert slope(parse("-[2]^r + [3]^r")) == ExtendedRational(1, 6)
    assert slope(parse("[0]")) == ZERO
    assert slope(QLoop(3)) == ZERO


def test_product_and_rotation():
    assert slope(parse("[2] * [3]")) == ExtendedRational(6, 1)
    assert slope(parse("[2]^r")) == ExtendedRational(-1, 2)
    assert slope(parse(T_INF)) == INF
    with pytest.raises(IndefiniteProduct):
        slope(Product(RationalSeq((0,)), Rotate(RationalSeq((0,)))))


def test_classify():
    assert classify(ExtendedRational(2, 3)) is Z
    assert classify(INF) is O
    assert classify(ExtendedRational(1, 3)) is D
    assert classify(ZERO) is Z


def test_sum_type_table():
    # rows and columns 0/1, 1/0, 1/1
    expected = [[Z, O, D], [O, IND, O], [D, O, Z]]
    types = [Z, O, D]
    for i, a in enumerate(types):
        for j, b in enumerate(types):
            assert sum_type(a, b) is expected[i][j]
    assert len(SUM_TABLE) == 9
    with pytest.raises(ValueError):
        sum_type(IND, Z)


@settings(max_examples=500)
@given(st.integers(-40, 40), st.integers(1, 40), st.integers(-40, 40), st.integers(1, 40))
def test_table_agrees_with_fraction_sums(p1, q1, p2, q2):
    a, b = ExtendedRational.of(p1, q1), ExtendedRational.of(p2, q2)
    t = sum_type(classify(a), classify(b))
    if t is not IND:
        assert classify(er_add(a, b)) is t


@settings(max_examples=400)
@given(seeds)
def test_homomorphism_laws(seed):
    e = random_expr(random.Random(seed), depth=6)
    for _, node in walk(e):
        if isinstance(node, Sum):
            assert slope(node) == er_add(slope(node.left), slope(node.right))
        elif isinstance(node, Product):
            assert slope(node) == er_mul(slope(node.left), slope(node.right))
            assert slope(node) == slope(Product(node.right, node.left))
        elif isinstance(node, Reflect):
            assert slope(node) == er_neg(slope(node.inner))
        elif isinstance(node, Rotate):
            s = slope(node.inner)
            assert slope(node) == er_rotate(s)
            if not s.is_infinite and s.num:
                assert er_mul(s, slope(node)) == ExtendedRational(-1, 1)


@settings(max_examples=300)
@given(seeds)
def test_product_expansion_keeps_slope(seed):
    e = random_expr(random.Random(seed), depth=5)
    ex = expand_products(e)
    assert not has_product(ex)
    assert slope(ex) == slope(e)


def test_loops():
    assert has_loop(parse("[2 0] + [2 0]"))
    assert not has_loop(parse("[2] + [3]"))
    assert not has_loop(parse("[1 2] + [1 2]"))
    assert not has_loop(parse("[5 -2 3]"))
    assert has_loop(parse("Q1 + [3]"))
    # a loop hidden inside a product factor
    assert has_loop(parse("[2] * ([2 0] + [2 0])"))


def test_connection_type():
    assert connection_type(parse("[1]")) is D
    assert connection_type(parse("[2]^r")) is O
    assert connection_type(parse("[2 3 2]")) is Z  # slope 16/7
    assert slope(parse("[2 3 2]")) == ExtendedRational(16, 7)
    with pytest.raises(LoopPresent):
        connection_type(parse("[2 0] + [2 0]"))


def test_closed_subtangles():
    assert find_closed_subtangles(parse(f"{T_INF} + {T_INF}")) == [()]
    assert find_closed_subtangles(parse("[5 2]")) == []
    assert find_closed_subtangles(parse(ONE_THIRD)) == []
    nested = parse(f"[3] + ({T_INF} + {T_INF})^r")
    assert find_closed_subtangles(nested) == [("right", "inner")]


def test_qm_summands():
    assert find_qm_summands(QLoop(2)) == [(2, ())]
    assert find_qm_summands(Sum(QLoop(1), RationalSeq((3,)))) == [(1, ("left",))]
    assert find_qm_summands(parse("[2] + [3]")) == []
    canonical = Rotate(Sum(Sum(Rotate(RationalSeq((0,))), Rotate(RationalSeq((0,)))),
                           Rotate(RationalSeq((0,)))))
    assert find_qm_summands(Sum(canonical, RationalSeq((2,)))) == [(2, ("left",))]
