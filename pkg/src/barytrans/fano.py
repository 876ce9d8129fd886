"""Fano polytopes, the barycentric transformation and its predicates."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import product
from math import lcm
from typing import Sequence

from . import geometry
from .geometry import VPolytope, contains_origin_interior, hull
from .lattice import (
    UnimodularMap,
    det,
    is_primitive,
    matmul,
    order2,
    primitive_index,
    primitivize,
    rank,
    solve,
    transpose,
    vadd,
)


class FanoFailure(enum.Enum):
    DIMENSION_DROP = "DimensionDrop"
    ORIGIN_NOT_INTERIOR = "OriginNotInterior"
    NON_PRIMITIVE_VERTEX = "NonPrimitiveVertex"

    def __str__(self):
        return self.value


class NotFanoError(ValueError):
    def __init__(self, reason: FanoFailure):
        super().__init__(f"not a Fano polytope: {reason}")
        self.reason = reason


class ConeBarycenterError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class FanoPolytope:
    """A validated Fano polytope; build it with :func:`validate_fano`."""

    polytope: VPolytope

    @classmethod
    def from_points(cls, points) -> "FanoPolytope":
        res = validate_fano(points)
        if isinstance(res, FanoFailure):
            raise NotFanoError(res)
        return res

    @property
    def dim(self) -> int:
        return self.polytope.ambient_dim

    @property
    def vertices(self):
        return self.polytope.vertices

    @property
    def facets(self):
        return self.polytope.facets

    def __eq__(self, other):
        if isinstance(other, FanoPolytope):
            return self.polytope == other.polytope
        return NotImplemented

    def __hash__(self):
        return hash(self.polytope)

    def __repr__(self):
        return repr(self.polytope)

    def __neg__(self):
        return FanoPolytope(-self.polytope)

    def map(self, u: UnimodularMap) -> "FanoPolytope":
        return FanoPolytope(self.polytope.map(u))

    @cached_property
    def dual(self) -> VPolytope:
        return geometry.dual(self.polytope)

    @cached_property
    def automorphisms(self) -> tuple[UnimodularMap, ...]:
        return automorphisms(self)


def validate_fano(points) -> FanoPolytope | FanoFailure:
    """Hull ``points`` and check the Fano conditions.

    Returns the polytope, or the first failing condition.
    """
    p = points if isinstance(points, VPolytope) else hull(points)
    if not p.is_full_dimensional:
        return FanoFailure.DIMENSION_DROP
    if not p.is_lattice or not all(is_primitive(v) for v in p.vertices):
        return FanoFailure.NON_PRIMITIVE_VERTEX
    if not contains_origin_interior(p):
        return FanoFailure.ORIGIN_NOT_INTERIOR
    return FanoPolytope(p)


# ---------------------------------------------------------------- B-transformation


@dataclass(frozen=True)
class MaximalCone:
    generators: tuple[tuple[int, ...], ...]

    @property
    def raw_sum(self) -> tuple[int, ...]:
        s = self.generators[0]
        for g in self.generators[1:]:
            s = vadd(s, g)
        return s


def face_fan_cones(p: FanoPolytope) -> list[MaximalCone]:
    return [MaximalCone(tuple(p.vertices[i] for i in f.vertices)) for f in p.facets]


def cone_barycenter(c: MaximalCone) -> tuple[int, ...]:
    s = c.raw_sum
    if primitive_index(s) == 0:
        raise ConeBarycenterError("cone barycenter undefined: generators sum to zero")
    return primitivize(s)


def b_transform(p: FanoPolytope) -> VPolytope:
    """Convex hull of the barycenters of all maximal cones of the face fan."""
    return hull([cone_barycenter(c) for c in face_fan_cones(p)])


def b_transform_fano(p: FanoPolytope) -> FanoPolytope | FanoFailure:
    return validate_fano(b_transform(p))


# ---------------------------------------------------------------- predicates


def is_kahler_einstein(p: FanoPolytope) -> bool:
    return all(x == 0 for x in geometry.centroid(p.dual))


def gorenstein_index(p: FanoPolytope) -> int:
    den = 1
    for v in p.dual.vertices:
        for x in v:
            den = lcm(den, Fraction(x).denominator)
    return den


def barycenter(p: FanoPolytope) -> tuple:
    return geometry.centroid(p.polytope)


def is_smooth(p: FanoPolytope) -> bool:
    d = p.dim
    for f in p.facets:
        if len(f.vertices) != d:
            return False
        if abs(det([p.vertices[i] for i in f.vertices])) != 1:
            return False
    return True


def _vertex_signature(p: FanoPolytope, i: int):
    """Unimodular invariant of a vertex: its pairings with every facet."""
    v = p.vertices[i]
    return tuple(sorted(((f.halfspace.value(v)), f.offset) for f in p.facets))


def automorphisms(p: FanoPolytope) -> tuple[UnimodularMap, ...]:
    """All unimodular maps permuting the vertex set.

    A fixed independent vertex tuple is sent to every ordered vertex tuple
    of matching signatures; integral unimodular solutions that preserve the
    vertex set are kept.
    """
    d = p.dim
    verts = p.vertices
    basis: list[int] = []
    for i, v in enumerate(verts):
        if rank([verts[j] for j in basis] + [v]) > len(basis):
            basis.append(i)
            if len(basis) == d:
                break
    b0 = [verts[i] for i in basis]  # rows; the map acts on columns
    b0_cols = transpose(b0)
    det_b0 = abs(det(b0))
    sig = [_vertex_signature(p, i) for i in range(len(verts))]
    candidates = [[j for j in range(len(verts)) if sig[j] == sig[i]] for i in basis]
    vset = p.polytope.vertex_set
    inv = solve(b0_cols, [[int(i == j) for j in range(d)] for i in range(d)])
    out = []
    for tup in product(*candidates):
        if len(set(tup)) < d:
            continue
        t_rows = [verts[j] for j in tup]
        if abs(det(t_rows)) != det_b0:
            continue
        # U B0 = T  =>  U = T B0^{-1}
        u = matmul(transpose(t_rows), inv)
        if any(x.denominator != 1 for row in u for x in row):
            continue
        u = tuple(tuple(int(x) for x in row) for row in u)
        if abs(det(u)) != 1:
            continue
        m = UnimodularMap(u)
        if all(m(v) in vset for v in verts):
            out.append(m)
    out.sort(key=lambda m: (not m.is_identity(), m.matrix))
    return tuple(out)


def is_symmetric(p: FanoPolytope) -> bool:
    """Only the origin is fixed by the whole automorphism group."""
    d = p.dim
    rows = []
    for u in p.automorphisms:
        for i in range(d):
            rows.append([u.matrix[i][j] - (i == j) for j in range(d)])
    return rank(rows) == d


def has_nontrivial_rotation(p: FanoPolytope) -> bool:
    if p.dim != 2:
        raise NotImplementedError("rotations are only supported for polygons")
    return any(u.det == 1 and not u.is_identity() for u in p.automorphisms)


# ---------------------------------------------------------------- polygon tools


def _require_polygon(p: FanoPolytope):
    if p.dim != 2:
        raise NotImplementedError("only polygons are supported")


def ords(p: FanoPolytope) -> list[int]:
    """order2 of consecutive counterclockwise vertices."""
    _require_polygon(p)
    vs = p.vertices
    n = len(vs)
    return [order2(vs[i], vs[(i + 1) % n]) for i in range(n)]


def g_values(p: FanoPolytope) -> list[int]:
    _require_polygon(p)
    vs = p.vertices
    n = len(vs)
    out = []
    for i in range(n):
        prev, cur, nxt = vs[i - 1], vs[i], vs[(i + 1) % n]
        out.append(order2(prev, cur) + order2(cur, nxt) - order2(nxt, prev))
    return out


def cond_b1(p: FanoPolytope) -> bool:
    """Sufficient (not necessary) condition for B(P) to be Fano."""
    return all(g > 0 for g in g_values(p))


def predicted_b_ords(p: FanoPolytope) -> list[Fraction]:
    """g(i) / (I(v_{i-1}+v_i) I(v_i+v_{i+1})) for each vertex."""
    vs = p.vertices
    n = len(vs)
    out = []
    for i, g in enumerate(g_values(p)):
        a = primitive_index(vadd(vs[i - 1], vs[i]))
        b = primitive_index(vadd(vs[i], vs[(i + 1) % n]))
        out.append(Fraction(g, a * b))
    return out


# ---------------------------------------------------------------- named families


def s_mn(m: int, n: int) -> FanoPolytope:
    if m < 0 or n < 0:
        raise ValueError("m and n must be non-negative")
    return FanoPolytope.from_points([(m + 1, -m), (-m, m + 1), (-n - 1, n), (n, -n - 1)])


def ke_triangle_normal_form(a: int, b: int) -> FanoPolytope:
    return FanoPolytope.from_points([(a, -b), (0, 1), (-a, b - 1)])


def cube(d: int) -> FanoPolytope:
    return FanoPolytope.from_points(list(product((-1, 1), repeat=d)))


def cross_polytope(d: int) -> FanoPolytope:
    pts = []
    for i in range(d):
        for s in (1, -1):
            pts.append(tuple(s * (i == j) for j in range(d)))
    return FanoPolytope.from_points(pts)


def as_points(vertices: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    return [tuple(int(x) for x in v) for v in vertices]
