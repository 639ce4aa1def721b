"""Extended rationals: reduced fractions p/q together with the unsigned 1/0."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import IndefiniteProduct


@dataclass(frozen=True, order=False)
class ExtendedRational:
    """A reduced fraction num/den with den >= 0.

    Infinity is stored canonically as 1/0.  Construct through
    :meth:`of` unless the pair is already canonical.
    """

    num: int
    den: int

    def __post_init__(self):
        n, d = self.num, self.den
        if d < 0:
            raise ValueError("denominator must be non-negative")
        if n == 0 and d == 0:
            raise ValueError("0/0 is not an extended rational")
        if d == 0 and n != 1:
            raise ValueError("infinity must be written 1/0")
        if d and gcd(n, d) != 1:
            raise ValueError(f"{n}/{d} is not reduced")

    @classmethod
    def of(cls, num: int, den: int = 1) -> ExtendedRational:
        if num == 0 and den == 0:
            raise ValueError("0/0 is not an extended rational")
        if den == 0:
            return INF
        if den < 0:
            num, den = -num, -den
        g = gcd(num, den)
        return cls(num // g, den // g)

    @classmethod
    def from_fraction(cls, f: Fraction) -> ExtendedRational:
        return cls(f.numerator, f.denominator)

    @classmethod
    def parse(cls, text: str) -> ExtendedRational:
        text = text.strip()
        if text in ("inf", "oo", "∞"):
            return INF
        if "/" in text:
            a, b = text.split("/", 1)
            return cls.of(int(a), int(b))
        return cls.of(int(text))

    @property
    def is_infinite(self) -> bool:
        return self.den == 0

    def as_fraction(self) -> Fraction:
        if self.den == 0:
            raise ValueError("infinity has no Fraction value")
        return Fraction(self.num, self.den)

    def __str__(self):
        return f"{self.num}/{self.den}"


INF = ExtendedRational(1, 0)
ZERO = ExtendedRational(0, 1)
ONE = ExtendedRational(1, 1)


def canonical(a: ExtendedRational) -> ExtendedRational:
    return ExtendedRational.of(a.num, a.den)


def er_add(a: ExtendedRational, b: ExtendedRational) -> ExtendedRational:
    if a.den == 0 or b.den == 0:
        return INF
    return ExtendedRational.from_fraction(a.as_fraction() + b.as_fraction())


def er_mul(a: ExtendedRational, b: ExtendedRational) -> ExtendedRational:
    if a.den == 0 or b.den == 0:
        other = b if a.den == 0 else a
        if other.num == 0:
            raise IndefiniteProduct(f"product of {a} and {b} is undefined")
        return INF
    return ExtendedRational.from_fraction(a.as_fraction() * b.as_fraction())


def er_neg(a: ExtendedRational) -> ExtendedRational:
    if a.den == 0:
        return INF
    return ExtendedRational(-a.num, a.den)


def er_rotate(a: ExtendedRational) -> ExtendedRational:
    """p/q -> -q/p, exchanging 0 and infinity."""
    return ExtendedRational.of(-a.den, a.num)


def er_reciprocal(a: ExtendedRational) -> ExtendedRational:
    return ExtendedRational.of(a.den, a.num)


def continued_fraction_value(coeffs) -> ExtendedRational:
    """Evaluate [a1 ... an] as an + 1/(a(n-1) + ... + 1/a1)."""
    coeffs = list(coeffs)
    if not coeffs:
        raise ValueError("empty continued fraction")
    value = ExtendedRational.of(coeffs[0])
    for a in coeffs[1:]:
        value = er_add(ExtendedRational.of(a), er_reciprocal(value))
    return value
