"""Expression trees for algebraic tangles.

Leaves are Conway integer sequences (rational tangles) and the loop tangles
Q_m; inner nodes are tangle sum, tangle product, rotation and reflection.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Tuple, Union

from .errors import NonTrivialSumViolation
from .rational import continued_fraction_value


@dataclass(frozen=True)
class RationalSeq:
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        if not coeffs:
            raise ValueError("a rational tangle needs at least one coefficient")
        object.__setattr__(self, "coeffs", coeffs)


@dataclass(frozen=True)
class QLoop:
    m: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("Q_m needs m >= 1")


@dataclass(frozen=True)
class Sum:
    left: "TangleExpr"
    right: "TangleExpr"

    def __post_init__(self):
        for side, child in (("left", self.left), ("right", self.right)):
            if isinstance(child, RationalSeq):
                v = continued_fraction_value(child.coeffs)
                if v.num == 0 or v.den == 0:
                    raise NonTrivialSumViolation(
                        f"{side} summand {list(child.coeffs)} is a rational tangle of slope {v}"
                    )


@dataclass(frozen=True)
class Product:
    left: "TangleExpr"
    right: "TangleExpr"


@dataclass(frozen=True)
class Rotate:
    inner: "TangleExpr"


@dataclass(frozen=True)
class Reflect:
    inner: "TangleExpr"


TangleExpr = Union[RationalSeq, QLoop, Sum, Product, Rotate, Reflect]


class RawSum(Sum):
    """Sum node without the non-triviality check.

    Only produced by internal expansions (twist blocks, product
    substitution), where summands like [0] legitimately occur.
    """

    def __post_init__(self):
        pass


def children(e) -> Tuple[Tuple[str, object], ...]:
    if isinstance(e, (Sum, Product)):
        return (("left", e.left), ("right", e.right))
    if isinstance(e, (Rotate, Reflect)):
        return (("inner", e.inner),)
    return ()


def walk(e, path=()) -> Iterator[Tuple[tuple, object]]:
    """Pre-order traversal yielding (path, node)."""
    yield path, e
    for name, child in children(e):
        yield from walk(child, path + (name,))


def subtree(e, path):
    for step in path:
        e = getattr(e, step)
    return e


def leaf_count(e) -> int:
    """Number of rational and Q_m leaves; used only to size test cases."""
    return sum(1 for _, node in walk(e) if isinstance(node, (RationalSeq, QLoop)))


def depth(e) -> int:
    kids = children(e)
    return 1 + max((depth(c) for _, c in kids), default=0)


def rational(*coeffs) -> RationalSeq:
    return RationalSeq(tuple(coeffs))


def infinity_tangle() -> Rotate:
    """The crossingless rational tangle of slope 1/0."""
    return Rotate(RationalSeq((0,)))
