"""Exact integer lattice arithmetic.

Vectors are plain tuples of Python ints (lattice points) or of
``fractions.Fraction`` (rational points). Nothing here ever rounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

LatticeVector = tuple[int, ...]
RationalVector = tuple[Fraction, ...]


def primitive_index(v: Sequence[int]) -> int:
    """gcd of the absolute coordinates; 0 for the zero vector."""
    g = 0
    for x in v:
        g = gcd(g, x)
    return g


def primitivize(v: Sequence[int]) -> LatticeVector:
    g = primitive_index(v)
    if g == 0:
        raise ValueError("no primitive direction")
    return tuple(x // g for x in v)


def is_primitive(v: Sequence[int]) -> bool:
    return primitive_index(v) == 1


def order2(u: Sequence[int], v: Sequence[int]) -> int:
    """The 2x2 determinant ``u_x v_y - u_y v_x``."""
    if len(u) != 2 or len(v) != 2:
        raise ValueError("order2 needs two 2-dimensional vectors")
    return u[0] * v[1] - u[1] * v[0]


def vadd(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vsub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vneg(u):
    return tuple(-a for a in u)


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def to_fractions(v) -> RationalVector:
    return tuple(Fraction(x) for x in v)


def normalize_rational(v) -> tuple:
    """Rational vector with integer entries demoted to ``int`` (hashable, canonical)."""
    out = []
    for x in v:
        x = Fraction(x)
        out.append(x.numerator if x.denominator == 1 else x)
    return tuple(out)


def common_denominator(points: Iterable[Sequence]) -> int:
    den = 1
    for p in points:
        for x in p:
            if isinstance(x, Fraction):
                den = lcm(den, x.denominator)
    return den


def det(rows: Sequence[Sequence[int]]) -> int:
    """Exact determinant of a square integer matrix by Bareiss elimination."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("det needs a square matrix")
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        piv = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * piv - m[i][k] * m[k][j]) // prev
        prev = piv
    return sign * m[n - 1][n - 1]


def det_n(vectors: Sequence[Sequence[int]]) -> int:
    """Determinant of the matrix whose columns are ``vectors``."""
    return det(vectors)  # det(A) == det(A^T)


def rank(rows: Sequence[Sequence]) -> int:
    """Rank over the rationals."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, len(m)):
            if m[i][c] != 0:
                f = m[i][c] / m[r][c]
                for j in range(c, ncols):
                    m[i][j] -= f * m[r][j]
        r += 1
        if r == len(m):
            break
    return r


def solve(a: Sequence[Sequence], b: Sequence[Sequence]):
    """Solve ``A X = B`` exactly for square nonsingular ``A``; returns rows of X.

    Returns ``None`` when ``A`` is singular.
    """
    n = len(a)
    k = len(b[0]) if b else 0
    m = [[Fraction(x) for x in a[i]] + [Fraction(x) for x in b[i]] for i in range(n)]
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            return None
        m[c], m[piv] = m[piv], m[c]
        p = m[c][c]
        m[c] = [x / p for x in m[c]]
        for i in range(n):
            if i != c and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return [row[n:n + k] for row in m]


def matmul(a, b):
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def transpose(a):
    return tuple(tuple(r) for r in zip(*a))


def identity(d: int):
    return tuple(tuple(int(i == j) for j in range(d)) for i in range(d))


@dataclass(frozen=True)
class UnimodularMap:
    """An integer matrix with determinant +1 or -1, acting on column vectors."""

    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        m = tuple(tuple(int(x) for x in row) for row in self.matrix)
        object.__setattr__(self, "matrix", m)
        if abs(det(m)) != 1:
            raise ValueError("matrix is not unimodular")

    @classmethod
    def identity(cls, d: int) -> "UnimodularMap":
        return cls(identity(d))

    @property
    def dim(self) -> int:
        return len(self.matrix)

    @property
    def det(self) -> int:
        return det(self.matrix)

    def __call__(self, v):
        return apply_map(self, v)

    def __matmul__(self, other: "UnimodularMap") -> "UnimodularMap":
        return UnimodularMap(matmul(self.matrix, other.matrix))

    def inverse(self) -> "UnimodularMap":
        inv = solve(self.matrix, identity(self.dim))
        return UnimodularMap(tuple(tuple(int(x) for x in row) for row in inv))

    def is_identity(self) -> bool:
        return self.matrix == identity(self.dim)


def apply_map(u: UnimodularMap, v: Sequence) -> tuple:
    if len(v) != u.dim:
        raise ValueError("dimension mismatch")
    return tuple(sum(a * x for a, x in zip(row, v)) for row in u.matrix)


def random_unimodular(d: int, rng, bound: int = 10, steps: int = 8) -> UnimodularMap:
    """Random unimodular matrix with entries bounded by ``bound``.

    Built from random elementary row operations and signed permutations;
    products that overshoot the bound are discarded and retried.
    """
    while True:
        m = [list(r) for r in identity(d)]
        perm = list(range(d))
        rng.shuffle(perm)
        m = [m[i] for i in perm]
        for i in range(d):
            if rng.random() < 0.5:
                m[i] = [-x for x in m[i]]
        for _ in range(steps):
            i, j = rng.sample(range(d), 2) if d > 1 else (0, 0)
            if i == j:
                break
            k = rng.randint(-2, 2)
            m[i] = [a + k * b for a, b in zip(m[i], m[j])]
        if all(abs(x) <= bound for row in m for x in row):
            return UnimodularMap(tuple(map(tuple, m)))
