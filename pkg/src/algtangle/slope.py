"""The slope homomorphism, parity types, loops and closed sub-tangles."""

from __future__ import annotations

import enum

from .errors import LoopPresent
from .expr import (
    Product,
    QLoop,
    RationalSeq,
    RawSum,
    Reflect,
    Rotate,
    Sum,
    walk,
)
from .rational import (
    ZERO,
    ExtendedRational,
    continued_fraction_value,
    er_add,
    er_mul,
    er_neg,
    er_rotate,
)


class ParityType(enum.Enum):
    TypeZeroOne = "0/1"
    TypeOneZero = "1/0"
    TypeOneOne = "1/1"
    Indefinite = "indefinite"

    def __str__(self):
        return f"Type {self.value}"


def slope(e) -> ExtendedRational:
    if isinstance(e, RationalSeq):
        return continued_fraction_value(e.coeffs)
    if isinstance(e, QLoop):
        return ZERO
    if isinstance(e, Sum):
        return er_add(slope(e.left), slope(e.right))
    if isinstance(e, Product):
        return er_mul(slope(e.left), slope(e.right))
    if isinstance(e, Rotate):
        return er_rotate(slope(e.inner))
    if isinstance(e, Reflect):
        return er_neg(slope(e.inner))
    raise TypeError(f"not a tangle expression: {e!r}")


def classify(s: ExtendedRational) -> ParityType:
    p_odd, q_odd = s.num % 2, s.den % 2
    if p_odd and q_odd:
        return ParityType.TypeOneOne
    if p_odd:
        return ParityType.TypeOneZero
    return ParityType.TypeZeroOne


_Z, _O, _D = ParityType.TypeZeroOne, ParityType.TypeOneZero, ParityType.TypeOneOne

SUM_TABLE = {
    (_Z, _Z): _Z, (_Z, _O): _O, (_Z, _D): _D,
    (_O, _Z): _O, (_O, _O): ParityType.Indefinite, (_O, _D): _O,
    (_D, _Z): _D, (_D, _O): _O, (_D, _D): _Z,
}


def sum_type(a: ParityType, b: ParityType) -> ParityType:
    if ParityType.Indefinite in (a, b):
        raise ValueError("sum_type is undefined on Indefinite operands")
    return SUM_TABLE[(a, b)]


# ---------------------------------------------------------------------------
# crossing-level expansion

CROSSING = RationalSeq((1,))
ANTICROSSING = RationalSeq((-1,))
ARCS = RationalSeq((0,))


def integer_block(a: int):
    """|a| crossings twisted horizontally; [0] is the crossingless leaf."""
    if a == 0:
        return ARCS
    leaf = CROSSING if a > 0 else ANTICROSSING
    t = leaf
    for _ in range(abs(a) - 1):
        t = RawSum(t, leaf)
    return t


def twist_tree(coeffs):
    """Crossing-level tree for [a1 ... an]: t -> 1/t + [a], ending horizontal."""
    t = integer_block(coeffs[0])
    for a in coeffs[1:]:
        t = RawSum(Reflect(Rotate(t)), integer_block(a))
    return t


def crossing_tree(e):
    """Replace every rational leaf of a product-free tree by its twist tree."""
    if isinstance(e, RationalSeq):
        if len(e.coeffs) == 1 and abs(e.coeffs[0]) <= 1:
            return e
        return twist_tree(e.coeffs)
    if isinstance(e, QLoop):
        return e
    if isinstance(e, Sum):
        return RawSum(crossing_tree(e.left), crossing_tree(e.right))
    if isinstance(e, Rotate):
        return Rotate(crossing_tree(e.inner))
    if isinstance(e, Reflect):
        return Reflect(crossing_tree(e.inner))
    raise TypeError(f"unexpected node {e!r}")


def _apply_inverse(r, s, target):
    # g = rot^r ref^s; g^-1 = ref^s rot^-r
    for _ in range((-r) % 4):
        target = Rotate(target)
    if s:
        target = Reflect(target)
    return target


def _substitute(tree, factor, r=0, s=0):
    if isinstance(tree, RationalSeq):
        c = tree.coeffs[0] if len(tree.coeffs) == 1 else 0
        if c == 0:
            return tree
        # every rotation or reflection above the leaf flips its page sign
        page_sign = c * (-1) ** ((r + s) % 2)
        target = factor if page_sign > 0 else Reflect(factor)
        return _apply_inverse(r, s, target)
    if isinstance(tree, QLoop):
        return tree
    if isinstance(tree, Sum):
        return RawSum(_substitute(tree.left, factor, r, s), _substitute(tree.right, factor, r, s))
    if isinstance(tree, Rotate):
        return Rotate(_substitute(tree.inner, factor, (r + (-1 if s else 1)) % 4, s))
    if isinstance(tree, Reflect):
        return Reflect(_substitute(tree.inner, factor, r, 1 - s))
    raise TypeError(f"unexpected node {tree!r}")


def expand_products(e):
    """Rewrite every Product node as crossing substitution.

    Each crossing of the left operand's diagram becomes the right operand
    (page-frame sign +1) or its reflection (sign -1).  The result has no
    Product nodes; sums inside it may be trivial, so they are RawSum.
    """
    if isinstance(e, (RationalSeq, QLoop)):
        return e
    if isinstance(e, Product):
        left = crossing_tree(expand_products(e.left))
        return _substitute(left, expand_products(e.right))
    if isinstance(e, Sum):
        left, right = expand_products(e.left), expand_products(e.right)
        if left is e.left and right is e.right:
            return e
        return RawSum(left, right)
    if isinstance(e, Rotate):
        return Rotate(expand_products(e.inner))
    if isinstance(e, Reflect):
        return Reflect(expand_products(e.inner))
    raise TypeError(f"not a tangle expression: {e!r}")


def has_product(e) -> bool:
    return any(isinstance(n, Product) for _, n in walk(e))


class _SlopeCache:
    def __init__(self):
        self.memo = {}

    def __call__(self, e):
        key = id(e)
        hit = self.memo.get(key)
        if hit is not None:
            return hit[1]
        if isinstance(e, Sum):
            v = er_add(self(e.left), self(e.right))
        elif isinstance(e, Rotate):
            v = er_rotate(self(e.inner))
        elif isinstance(e, Reflect):
            v = er_neg(self(e.inner))
        else:
            v = slope(e)
        # keep e alive so its id is not reused during this invocation
        self.memo[key] = (e, v)
        return v


def _loop_sums(expanded):
    cache = _SlopeCache()
    for path, node in walk(expanded):
        if isinstance(node, Sum):
            if (classify(cache(node.left)) is ParityType.TypeOneZero
                    and classify(cache(node.right)) is ParityType.TypeOneZero):
                yield path


def has_loop(e) -> bool:
    ex = expand_products(e)
    if any(isinstance(n, QLoop) for _, n in walk(ex)):
        return True
    return next(_loop_sums(ex), None) is not None


def connection_type(e) -> ParityType:
    """Which endpoints the two strings join, as the parity type of the slope."""
    if has_loop(e):
        raise LoopPresent("connection type needs a loop-free tangle")
    return classify(slope(e))


def find_closed_subtangles(e):
    """Paths (in the product-expanded tree) of sums of two slope-1/0 tangles."""
    ex = expand_products(e)
    cache = _SlopeCache()
    found = []
    for path, node in walk(ex):
        if isinstance(node, Sum) and cache(node.left).is_infinite and cache(node.right).is_infinite:
            found.append(path)
    return found


def _rational_only(e) -> bool:
    return all(isinstance(n, (RationalSeq, Rotate, Reflect)) for _, n in walk(e))


def _sum_chain(e):
    terms = []
    while isinstance(e, Sum):
        terms.append(e.right)
        e = e.left
    terms.append(e)
    return terms[::-1]


def qm_pattern(e):
    """m if e is a Q_m literal or Rotate of a sum chain of m+1 slope-1/0 rational tangles."""
    if isinstance(e, QLoop):
        return e.m
    if isinstance(e, Rotate) and isinstance(e.inner, Sum):
        terms = _sum_chain(e.inner)
        if all(_rational_only(t) and slope(t).is_infinite for t in terms):
            return len(terms) - 1
    return None


def find_qm_summands(e):
    """(m, path) for every Q_m that is the whole expression or a direct summand."""
    found = []
    m = qm_pattern(e)
    if m is not None:
        found.append((m, ()))
    for path, node in walk(e):
        if isinstance(node, Sum):
            for side in ("left", "right"):
                m = qm_pattern(getattr(node, side))
                if m is not None:
                    found.append((m, path + (side,)))
    return found
