"""Text notation for tangle expressions.

Grammar::

    expr    := sum
    sum     := prod { "+" prod }
    prod    := unary { "*" unary }
    unary   := "-" unary | postfix
    postfix := atom { "^r" }
    atom    := "[" int { int } "]" | "Q" uint | "(" expr ")"

``+`` is tangle sum, ``*`` tangle product, prefix ``-`` reflection and
postfix ``^r`` rotation.
"""

from __future__ import annotations

from .errors import ParseError
from .expr import Product, QLoop, RationalSeq, Reflect, Rotate, Sum


class _Parser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def found(self):
        c = self.peek()
        return repr(c) if c else "end of input"

    def fail(self, expected):
        raise ParseError(self.pos, expected, self.found())

    def expect(self, token):
        self.skip_ws()
        if not self.text.startswith(token, self.pos):
            self.fail(repr(token))
        self.pos += len(token)

    def parse(self):
        e = self.sum()
        if self.peek():
            self.fail("'+', '*', '^r' or end of input")
        return e

    def sum(self):
        e = self.prod()
        while self.peek() == "+":
            self.pos += 1
            e = Sum(e, self.prod())
        return e

    def prod(self):
        e = self.unary()
        while self.peek() == "*":
            self.pos += 1
            e = Product(e, self.unary())
        return e

    def unary(self):
        if self.peek() == "-":
            self.pos += 1
            return Reflect(self.unary())
        return self.postfix()

    def postfix(self):
        e = self.atom()
        while self.peek() == "^":
            self.expect("^r")
            e = Rotate(e)
        return e

    def atom(self):
        c = self.peek()
        if c == "[":
            self.pos += 1
            coeffs = [self.integer(signed=True)]
            while self.peek() not in ("]", ""):
                coeffs.append(self.integer(signed=True))
            self.expect("]")
            return RationalSeq(tuple(coeffs))
        if c == "Q":
            self.pos += 1
            start = self.pos
            m = self.integer(signed=False, allow_ws=False)
            if m < 1:
                raise ParseError(start, "integer >= 1 after 'Q'", str(m))
            return QLoop(m)
        if c == "(":
            self.pos += 1
            e = self.sum()
            self.expect(")")
            return e
        self.fail("'[', 'Q' or '('")

    def integer(self, signed, allow_ws=True):
        if allow_ws:
            self.skip_ws()
        start = self.pos
        if signed and self.pos < len(self.text) and self.text[self.pos] == "-":
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            self.pos = start
            self.fail("integer" if signed else "unsigned integer")
        return int(self.text[start:self.pos])


def parse(text: str):
    """Parse expression text into a tangle expression tree."""
    p = _Parser(text)
    try:
        return p.parse()
    except RecursionError:
        raise ParseError(p.pos, "shallower nesting", "nesting too deep") from None


_SUM, _PROD, _UNARY, _POSTFIX = range(4)


def _level(e):
    if isinstance(e, Sum):
        return _SUM
    if isinstance(e, Product):
        return _PROD
    if isinstance(e, Reflect):
        return _UNARY
    return _POSTFIX


def _wrap(e, min_level):
    s = render(e)
    return s if _level(e) >= min_level else f"({s})"


def render(e) -> str:
    """Canonical text; ``parse(render(e)) == e``."""
    if isinstance(e, RationalSeq):
        return "[" + " ".join(str(c) for c in e.coeffs) + "]"
    if isinstance(e, QLoop):
        return f"Q{e.m}"
    if isinstance(e, Sum):
        return f"{_wrap(e.left, _SUM)} + {_wrap(e.right, _PROD)}"
    if isinstance(e, Product):
        return f"{_wrap(e.left, _PROD)} * {_wrap(e.right, _UNARY)}"
    if isinstance(e, Reflect):
        return "-" + _wrap(e.inner, _UNARY)
    if isinstance(e, Rotate):
        return _wrap(e.inner, _POSTFIX) + "^r"
    raise TypeError(f"not a tangle expression: {e!r}")
