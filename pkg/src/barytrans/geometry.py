"""Exact convex geometry over the rationals.

Hulls of integer or rational point sets, facet enumeration by the double
description method (2D uses Andrew's monotone chain), polar duals, and
volume/centroid through a pulling triangulation. All predicates are exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import factorial
from typing import Sequence

from .lattice import (
    common_denominator,
    det,
    dot,
    normalize_rational,
    order2,
    primitive_index,
    rank,
    vsub,
)


@dataclass(frozen=True)
class HalfSpace:
    """``<normal, x> + offset >= 0`` with a primitive integer normal."""

    normal: tuple[int, ...]
    offset: Fraction

    def value(self, x) -> Fraction:
        return dot(self.normal, x) + self.offset


@dataclass(frozen=True)
class Facet:
    halfspace: HalfSpace
    vertices: tuple[int, ...]  # indices into the owning polytope's vertex tuple

    @property
    def normal(self):
        return self.halfspace.normal

    @property
    def offset(self):
        return self.halfspace.offset


FacetStructure = tuple[Facet, ...]


@dataclass(frozen=True, eq=False)
class VPolytope:
    """Vertex-minimal convex hull of finitely many rational points.

    2D full-dimensional polygons store their vertices counterclockwise,
    starting from the lexicographically smallest one; every other case
    stores them in lexicographic order.
    """

    vertices: tuple[tuple, ...]
    ambient_dim: int
    affine_dim: int
    _facets: FacetStructure | None = field(default=None, repr=False)

    def __eq__(self, other):
        if not isinstance(other, VPolytope):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.vertex_set == other.vertex_set

    def __hash__(self):
        return hash((self.ambient_dim, self.vertex_set))

    def __len__(self):
        return len(self.vertices)

    @cached_property
    def vertex_set(self) -> frozenset:
        return frozenset(self.vertices)

    @property
    def is_full_dimensional(self) -> bool:
        return self.affine_dim == self.ambient_dim

    @property
    def is_lattice(self) -> bool:
        return all(isinstance(x, int) for v in self.vertices for x in v)

    @cached_property
    def facets(self) -> FacetStructure:
        if self._facets is not None:
            return self._facets
        return facets(self)

    def map(self, u) -> "VPolytope":
        return hull([u(v) for v in self.vertices])

    def __neg__(self) -> "VPolytope":
        return hull([tuple(-x for x in v) for v in self.vertices])

    def __repr__(self):
        return f"conv{{{', '.join(_fmt(v) for v in self.vertices)}}}"


def _fmt(v) -> str:
    return "(" + ",".join(str(x) for x in v) + ")"


# ---------------------------------------------------------------- 2D


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _chain2d(points: Sequence[tuple]) -> list[int]:
    """Indices of strict hull vertices, counterclockwise from the lex-smallest."""
    order = sorted(range(len(points)), key=lambda i: points[i])
    if len(order) <= 2:
        return order

    def half(idx):
        out: list[int] = []
        for i in idx:
            while len(out) >= 2 and _cross(points[out[-2]], points[out[-1]], points[i]) <= 0:
                out.pop()
            out.append(i)
        return out

    lower = half(order)
    upper = half(reversed(order))
    return lower[:-1] + upper[:-1]


def _edges2d(points, ccw: list[int]):
    """Facets of a counterclockwise polygon as (normal, offset, incidences)."""
    out = []
    n = len(ccw)
    for k in range(n):
        a, b = points[ccw[k]], points[ccw[(k + 1) % n]]
        ex, ey = b[0] - a[0], b[1] - a[1]
        normal = (-ey, ex)  # inward for counterclockwise order
        den = common_denominator([normal])
        normal = tuple(int(x * den) for x in normal)
        g = primitive_index(normal)
        normal = tuple(x // g for x in normal)
        out.append((normal, -Fraction(dot(normal, a)), (ccw[k], ccw[(k + 1) % n])))
    return out


# ---------------------------------------------------------------- double description


def _integerize(points):
    den = common_denominator(points)
    return [tuple(int(x * den) for x in p) for p in points], den


def _dd_facets(points: Sequence[tuple[int, ...]]):
    """Facets of a full-dimensional integer point set by double description.

    Works on the homogenized cone ``{(n, c) : <n, p> + c >= 0 for all p}``
    whose extreme rays are exactly the facet inequalities.
    """
    d = len(points[0])
    m = d + 1
    rows = [tuple(p) + (1,) for p in points]

    basis: list[int] = []
    for i, r in enumerate(rows):
        if rank([rows[j] for j in basis] + [r]) > len(basis):
            basis.append(i)
            if len(basis) == m:
                break
    if len(basis) < m:
        raise ValueError("point set is not full-dimensional")

    rays = []
    zeros = []
    eye = [[int(i == j) for j in range(m)] for i in range(m)]
    cols = _solve_columns([rows[i] for i in basis], eye)
    all_basis = 0
    for i in basis:
        all_basis |= 1 << i
    for j in range(m):
        rays.append(_primitive_int(cols[j]))
        zeros.append(all_basis & ~(1 << basis[j]))

    in_basis = set(basis)
    for i, row in enumerate(rows):
        if i in in_basis:
            continue
        vals = [dot(row, r) for r in rays]
        pos = [k for k, v in enumerate(vals) if v > 0]
        neg = [k for k, v in enumerate(vals) if v < 0]
        if not neg:
            bit = 1 << i
            zeros = [z | bit if vals[k] == 0 else z for k, z in enumerate(zeros)]
            continue
        bit = 1 << i
        new_rays = []
        new_zeros = []
        for p in pos:
            for q in neg:
                common = zeros[p] & zeros[q]
                if common.bit_count() < m - 2:
                    continue
                adjacent = True
                for k, z in enumerate(zeros):
                    if k != p and k != q and z & common == common:
                        adjacent = False
                        break
                if adjacent:
                    r = tuple(vals[p] * b - vals[q] * a for a, b in zip(rays[p], rays[q]))
                    new_rays.append(_primitive_int(r))
                    new_zeros.append(common | bit)
        keep = [k for k, v in enumerate(vals) if v >= 0]
        rays = [rays[k] for k in keep] + new_rays
        zeros = [(zeros[k] | bit) if vals[k] == 0 else zeros[k] for k in keep] + new_zeros

    out = []
    for r in rays:
        normal = r[:d]
        g = primitive_index(normal)
        normal = tuple(x // g for x in normal)
        offset = Fraction(r[d], g)
        inc = tuple(k for k, p in enumerate(points) if dot(normal, p) + offset == 0)
        out.append((normal, offset, inc))
    return out


def _solve_columns(a, b):
    """Columns of A^{-1} B as rational tuples."""
    from .lattice import solve

    x = solve(a, b)
    return [tuple(x[i][j] for i in range(len(x))) for j in range(len(x[0]))]


def _primitive_int(v):
    den = common_denominator([v])
    w = [int(x * den) for x in v]
    g = primitive_index(w)
    return tuple(x // g for x in w)


def _facets_fulldim(points: Sequence[tuple]):
    """(normal, offset, incidences) for a full-dimensional point set."""
    d = len(points[0])
    if d == 1:
        lo = min(range(len(points)), key=lambda i: points[i])
        hi = max(range(len(points)), key=lambda i: points[i])
        return [((1,), -Fraction(points[lo][0]), (lo,)), ((-1,), Fraction(points[hi][0]), (hi,))]
    if d == 2:
        return _edges2d(points, _chain2d(points))
    ints, den = _integerize(points)
    return [(n, off / den, inc) for n, off, inc in _dd_facets(ints)]


# ---------------------------------------------------------------- hull


def affine_dimension(points: Sequence[tuple]) -> int:
    if not points:
        return -1
    p0 = points[0]
    return rank([vsub(p, p0) for p in points[1:]]) if len(points) > 1 else 0


def _projection_coords(points, k):
    """k coordinates on which the affine hull projects bijectively."""
    p0 = points[0]
    diffs = [vsub(p, p0) for p in points[1:]]
    chosen: list[int] = []
    for c in range(len(p0)):
        cand = chosen + [c]
        if rank([[row[j] for j in cand] for row in diffs]) == len(cand):
            chosen = cand
            if len(chosen) == k:
                break
    return chosen


def _vertex_indices(points: Sequence[tuple]) -> list[int]:
    """Indices of the hull vertices among distinct ``points``."""
    k = affine_dimension(points)
    d = len(points[0])
    if k == 0:
        return [0]
    if k < d:
        coords = _projection_coords(points, k)
        proj = [tuple(p[j] for j in coords) for p in points]
        return _vertex_indices(proj)
    if d == 1:
        lo = min(range(len(points)), key=lambda i: points[i])
        hi = max(range(len(points)), key=lambda i: points[i])
        return [lo, hi]
    if d == 2:
        return _chain2d(points)
    fs = _facets_fulldim(points)
    out = []
    for i in range(len(points)):
        tight = [n for n, _, inc in fs if i in inc]
        if len(tight) >= d and rank(tight) == d:
            out.append(i)
    return out


def hull(points) -> VPolytope:
    """Vertex-minimal convex hull; degenerate inputs give a lower affine_dim."""
    pts = [normalize_rational(p) for p in points]
    if not pts:
        raise ValueError("empty point set")
    d = len(pts[0])
    if any(len(p) != d for p in pts):
        raise ValueError("mixed dimensions")
    pts = list(dict.fromkeys(pts))
    k = affine_dimension(pts)
    idx = _vertex_indices(pts)
    verts = [pts[i] for i in idx]
    if not (d == 2 and k == 2):
        verts.sort()
    return VPolytope(tuple(verts), d, k)


def facets(p: VPolytope) -> FacetStructure:
    if not p.is_full_dimensional:
        raise ValueError("facets need a full-dimensional polytope")
    raw = _facets_fulldim(list(p.vertices))
    out = [Facet(HalfSpace(n, off), tuple(sorted(inc)) if p.ambient_dim != 2 else inc) for n, off, inc in raw]
    if p.ambient_dim != 2:
        out.sort(key=lambda f: f.vertices)
    return tuple(out)


def contains_origin_interior(p: VPolytope) -> bool:
    if not p.is_full_dimensional:
        return False
    return all(f.offset > 0 for f in p.facets)


def contains_origin_interior_ord(vertices_ccw: Sequence[tuple]) -> bool:
    """Counterclockwise polygon test: every consecutive order2 is positive."""
    n = len(vertices_ccw)
    if n < 3:
        return False
    return all(order2(vertices_ccw[i], vertices_ccw[(i + 1) % n]) > 0 for i in range(n))


# ---------------------------------------------------------------- duality


def dual(p: VPolytope) -> VPolytope:
    """``{u : <u, v> >= -1 for all v in P}``."""
    if not contains_origin_interior(p):
        raise ValueError("origin is not strictly interior")
    pts = [normalize_rational(tuple(Fraction(x) / f.offset for x in f.normal)) for f in p.facets]
    if p.ambient_dim <= 2:
        return hull(pts)
    # facets of the dual come straight from the vertices of p
    order = sorted(range(len(pts)), key=lambda i: pts[i])
    pos = {old: new for new, old in enumerate(order)}
    verts = tuple(pts[i] for i in order)
    dfacets = []
    for vi, v in enumerate(p.vertices):
        normal = _primitive_int(v)
        scale = next(Fraction(a) / b for a, b in zip(v, normal) if b != 0)
        inc = tuple(sorted(pos[j] for j, f in enumerate(p.facets) if vi in f.vertices))
        dfacets.append(Facet(HalfSpace(normal, 1 / scale), inc))
    dfacets.sort(key=lambda f: f.vertices)
    return VPolytope(verts, p.ambient_dim, p.ambient_dim, tuple(dfacets))


# ---------------------------------------------------------------- volume and centroid


def triangulate_face(points: Sequence[tuple]) -> list[tuple[int, ...]]:
    """Pulling triangulation of the polytope whose vertices are ``points``.

    Every point must be a vertex. Simplices are index tuples; the first vertex
    is pulled, and each facet avoiding it is triangulated recursively.
    """
    k = affine_dimension(points)
    if len(points) == k + 1:
        return [tuple(range(len(points)))]
    coords = _projection_coords(points, k)
    proj = [tuple(p[j] for j in coords) for p in points]
    out = []
    for _, _, inc in _facets_fulldim(proj):
        if 0 in inc:
            continue
        for s in triangulate_face([points[i] for i in inc]):
            out.append((0,) + tuple(inc[i] for i in s))
    return out


def _simplices(p: VPolytope, apex_origin: bool | None = None):
    if not p.is_full_dimensional:
        raise ValueError("degenerate polytope")
    d = p.ambient_dim
    if apex_origin is None:
        apex_origin = contains_origin_interior(p)
    apex = (0,) * d if apex_origin else p.vertices[0]
    for f in p.facets:
        if not apex_origin and 0 in f.vertices:
            continue
        fverts = [p.vertices[i] for i in f.vertices]
        for s in triangulate_face(fverts):
            yield (apex,) + tuple(fverts[i] for i in s)


def _volume_centroid(p: VPolytope, apex_origin: bool | None = None, shoelace: bool = True):
    d = p.ambient_dim
    if shoelace and d == 2 and p.is_full_dimensional:
        return _volume_centroid_2d(p.vertices)
    total = Fraction(0)
    acc = [Fraction(0)] * d
    for simplex in _simplices(p, apex_origin):
        a = simplex[0]
        # integer rows keep Bareiss exact; undo the common scale afterwards
        rows = [vsub(v, a) for v in simplex[1:]]
        den = common_denominator(rows)
        irows = [[int(x * den) for x in r] for r in rows]
        vol = Fraction(abs(det(irows)), den**d * factorial(d))
        total += vol
        for j in range(d):
            acc[j] += vol * sum(Fraction(v[j]) for v in simplex) / (d + 1)
    return total, tuple(x / total for x in acc)


def _volume_centroid_2d(vs):
    n = len(vs)
    area2 = Fraction(0)
    cx = Fraction(0)
    cy = Fraction(0)
    for i in range(n):
        a, b = vs[i], vs[(i + 1) % n]
        c = a[0] * b[1] - a[1] * b[0]
        area2 += c
        cx += (a[0] + b[0]) * c
        cy += (a[1] + b[1]) * c
    return area2 / 2, (Fraction(cx) / (3 * area2), Fraction(cy) / (3 * area2))


def volume(p: VPolytope) -> Fraction:
    return _volume_centroid(p)[0]


def centroid(p: VPolytope) -> tuple:
    return normalize_rational(_volume_centroid(p)[1])
