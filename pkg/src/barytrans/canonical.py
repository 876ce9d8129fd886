"""Canonical keys for lattice polytopes up to unimodular equivalence.

A key is the lexicographically smallest Hermite normal form of the vertex
matrix over a set of vertex orderings that every equivalent polytope
reproduces. Polygons use their 2n dihedral orderings (a unimodular map
preserves or reverses the cyclic vertex order); higher dimensions use the
leaves of an individualization-refinement search on the vertex-facet
pairing matrix.
"""

from __future__ import annotations

from typing import Sequence

from .fano import FanoPolytope

CanonicalKey = bytes


def _xgcd(a: int, b: int):
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def hermite_normal_form(rows: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    """Row-style HNF: the unique representative of ``GL_d(Z) * A``.

    Echelon form with positive pivots and the entries above each pivot
    reduced into ``[0, pivot)``. Zero rows sink to the bottom.
    """
    h = [list(r) for r in rows]
    nrows = len(h)
    ncols = len(h[0]) if h else 0
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        for i in range(r + 1, nrows):
            if h[i][c] == 0:
                continue
            a, b = h[r][c], h[i][c]
            g, x, y = _xgcd(a, b)
            # [[x, y], [-b/g, a/g]] has determinant 1
            ag, bg = a // g, b // g
            row_r = [x * p + y * q for p, q in zip(h[r], h[i])]
            row_i = [-bg * p + ag * q for p, q in zip(h[r], h[i])]
            h[r], h[i] = row_r, row_i
        if h[r][c] == 0:
            continue
        if h[r][c] < 0:
            h[r] = [-x for x in h[r]]
        piv = h[r][c]
        for i in range(r):
            q = h[i][c] // piv
            if q:
                h[i] = [p - q * s for p, s in zip(h[i], h[r])]
        r += 1
    return tuple(tuple(row) for row in h)


def _hnf_of_columns(vertices, order) -> tuple:
    d = len(vertices[0])
    return hermite_normal_form([[vertices[j][i] for j in order] for i in range(d)])


def _serialize(d: int, h) -> CanonicalKey:
    body = ";".join(",".join(str(x) for x in row) for row in h)
    return f"{d}:{body}".encode("ascii")


def _polygon_orders(n: int):
    for s in range(n):
        yield [(s + k) % n for k in range(n)]
        yield [(s - k) % n for k in range(n)]


def pairing_matrix(p: FanoPolytope):
    """Facet-by-vertex matrix of lattice distances ``<n_F, v> + c_F``."""
    return [[int(f.halfspace.value(v)) for v in p.vertices] for f in p.facets]


def _refine(vcells, fcells, m):
    while True:
        changed = False
        new_f = []
        for cell in fcells:
            if len(cell) == 1:
                new_f.append(cell)
                continue
            sig = {f: tuple(tuple(sorted(m[f][v] for v in vc)) for vc in vcells) for f in cell}
            groups = _split(cell, sig)
            changed |= len(groups) > 1
            new_f.extend(groups)
        fcells = new_f
        new_v = []
        for cell in vcells:
            if len(cell) == 1:
                new_v.append(cell)
                continue
            sig = {v: tuple(tuple(sorted(m[f][v] for f in fc)) for fc in fcells) for v in cell}
            groups = _split(cell, sig)
            changed |= len(groups) > 1
            new_v.extend(groups)
        vcells = new_v
        if not changed:
            return vcells, fcells


def _split(cell, sig):
    buckets: dict = {}
    for x in cell:
        buckets.setdefault(sig[x], []).append(x)
    return [buckets[s] for s in sorted(buckets)]


def _leaf_orders(vcells, fcells, m):
    vcells, fcells = _refine(vcells, fcells, m)
    for i, cell in enumerate(vcells):
        if len(cell) > 1:
            for v in cell:
                rest = [x for x in cell if x != v]
                yield from _leaf_orders(vcells[:i] + [[v], rest] + vcells[i + 1:], fcells, m)
            return
    yield [c[0] for c in vcells]


def vertex_orders(p: FanoPolytope):
    """Vertex orderings used by :func:`canonical_key` (isomorphism invariant)."""
    n = len(p.vertices)
    if p.dim == 2:
        return list(_polygon_orders(n))
    m = pairing_matrix(p)
    return list(_leaf_orders([list(range(n))], [list(range(len(m)))], m))


def canonical_key(p: FanoPolytope) -> CanonicalKey:
    verts = p.vertices
    best = min(_hnf_of_columns(verts, order) for order in vertex_orders(p))
    return _serialize(p.dim, best)


def key_to_vertices(key: CanonicalKey) -> list[tuple[int, ...]]:
    """A representative vertex list recovered from a key."""
    d, body = key.decode("ascii").split(":")
    rows = [[int(x) for x in r.split(",")] for r in body.split(";")]
    return [tuple(r[j] for r in rows) for j in range(len(rows[0]))]
