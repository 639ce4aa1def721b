"""Link determinants: Goeritz matrices, a Kauffman-bracket oracle, Krebes fractions."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

from .diagram import Diagram, tangle_diagram
from .errors import LoopPresent
from .slope import has_loop, slope

NUMERATOR = ((0, 1), (3, 2))
DENOMINATOR = ((0, 3), (1, 2))

BRACKET_LIMIT = 16


def numerator_closure(e) -> Diagram:
    return tangle_diagram(e).glue_boundary(NUMERATOR)


def denominator_closure(e) -> Diagram:
    return tangle_diagram(e).glue_boundary(DENOMINATOR)


def bareiss_det(m):
    """Exact integer determinant by fraction-free elimination."""
    a = [list(row) for row in m]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def checkerboard(d: Diagram):
    """Two-colour the faces; returns (corner -> face, face -> colour)."""
    corner_face, nf = d.faces()
    adj = [[] for _ in range(nf)]
    for c in range(d.n_crossings):
        for k in range(4):
            a, b = corner_face[(c, k)], corner_face[(c, (k + 1) % 4)]
            adj[a].append(b)
            adj[b].append(a)
    colour = [None] * nf
    for start in range(nf):
        if colour[start] is not None:
            continue
        colour[start] = 0
        stack = [start]
        while stack:
            f = stack.pop()
            for g in adj[f]:
                if colour[g] is None:
                    colour[g] = 1 - colour[f]
                    stack.append(g)
                elif colour[g] == colour[f]:
                    raise ValueError("diagram faces are not two-colourable")
    return corner_face, colour


def goeritz_matrix(d: Diagram):
    corner_face, colour = checkerboard(d)
    white = sorted({f for f, c in enumerate(colour) if c == 0})
    index = {f: i for i, f in enumerate(white)}
    n = len(white)
    g = [[0] * n for _ in range(n)]
    for c in range(d.n_crossings):
        # corners swept by turning the over strand counterclockwise
        swept = (1, 3) if d.over[c] else (0, 2)
        eta = 1 if colour[corner_face[(c, swept[0])]] == 0 else -1
        pair = (0, 2) if colour[corner_face[(c, 0)]] == 0 else (1, 3)
        i, j = (index[corner_face[(c, k)]] for k in pair)
        if i == j:
            continue
        g[i][j] -= eta
        g[j][i] -= eta
        g[i][i] += eta
        g[j][j] += eta
    return g


def determinant(d: Diagram) -> int:
    """|det| of the reduced Goeritz matrix; split diagrams give 0."""
    if d.n_crossings == 0:
        return 1 if d.loops == 1 else 0
    if d.is_split():
        return 0
    g = goeritz_matrix(d)
    reduced = [row[1:] for row in g[1:]]
    return abs(bareiss_det(reduced))


def bracket_determinant(d: Diagram) -> int:
    """|<D>| at A = exp(i pi/4), where the loop value vanishes.

    Exponential in the number of crossings; serves as an independent
    check on :func:`determinant` for small diagrams.
    """
    n = d.n_crossings
    if n > BRACKET_LIMIT:
        raise ValueError(f"bracket oracle is capped at {BRACKET_LIMIT} crossings")
    edges = [(p, q) for p, q in d.mate.items() if p < q]
    idx = {}
    for c in range(n):
        for k in range(4):
            idx[(c, k)] = 4 * c + k
    base = [(idx[(p[1], p[2])], idx[(q[1], q[2])]) for p, q in edges]
    a_split = []
    b_split = []
    for c in range(n):
        h = ((4 * c, 4 * c + 1), (4 * c + 3, 4 * c + 2))
        v = ((4 * c, 4 * c + 3), (4 * c + 1, 4 * c + 2))
        a_split.append(h if d.over[c] else v)
        b_split.append(v if d.over[c] else h)
    # coefficients of A^k, k mod 8
    coeff = [0] * 8
    for state in range(1 << n):
        parent = list(range(4 * n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for x, y in base:
            parent[find(x)] = find(y)
        na = 0
        for c in range(n):
            if state >> c & 1:
                pairs = b_split[c]
            else:
                pairs = a_split[c]
                na += 1
            for x, y in pairs:
                parent[find(x)] = find(y)
        loops = len({find(x) for x in range(4 * n)}) + d.loops
        if loops == 1:
            coeff[(na - (n - na)) % 8] += 1
    if n == 0:
        return 1 if d.loops == 1 else 0
    # A^4 = -1: fold onto 1, A, A^2, A^3
    x = [coeff[k] - coeff[k + 4] for k in range(4)]
    sq = x[0] ** 2 + x[1] ** 2 + x[2] ** 2 + x[3] ** 2
    irrational = x[0] * (x[1] - x[3]) + x[2] * (x[1] + x[3])
    if irrational != 0:
        raise ArithmeticError("bracket value has non-integral modulus")
    r = isqrt(sq)
    if r * r != sq:
        raise ArithmeticError("bracket modulus is not an integer")
    return r


@dataclass(frozen=True)
class KrebesFraction:
    num: int
    den: int

    def reduced(self):
        g = gcd(self.num, self.den)
        if g == 0:
            return (0, 0)
        return (self.num // g, self.den // g)

    def __str__(self):
        return f"{self.num}/{self.den}"


def krebes_fraction(e) -> KrebesFraction:
    return KrebesFraction(determinant(numerator_closure(e)), determinant(denominator_closure(e)))


def check_slope_consistency(e) -> bool:
    """Reduced Krebes magnitudes against (|p|, q) of the slope."""
    if has_loop(e):
        raise LoopPresent("Krebes consistency is stated for loop-free tangles")
    s = slope(e)
    return krebes_fraction(e).reduced() == (abs(s.num), s.den)


def krebes_divisibility(t, vertex):
    """(gcd of the vertex's Krebes fraction, determinant of the whole link)."""
    from .template import assemble

    f = krebes_fraction(t.tangles[vertex])
    return gcd(f.num, f.den), determinant(assemble(t))


def krebes_divisibility_check(t, vertex) -> bool:
    g, det = krebes_divisibility(t, vertex)
    if g == 0:
        # both closures split: 0 divides only 0
        return det == 0
    return det % g == 0
