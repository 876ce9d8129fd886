"""Brute-force enumeration of Fano polygons with vertices in a box.

Primitive points of ``[-B, B]^2`` are sorted by angle. A polygon is grown
from its smallest-angle vertex through points of increasing angle, keeping
every turn strictly convex and every consecutive ``order2`` positive, so
each Fano polygon in the box is produced exactly once. With an index
filter, every edge height must divide the requested index.
"""

from __future__ import annotations

from functools import cmp_to_key
from math import lcm
from typing import Iterator

from .formats import PolytopeRecord, make_record
from .lattice import order2, primitive_index


def _half(p) -> int:
    return 0 if p[1] > 0 or (p[1] == 0 and p[0] > 0) else 1


def _angle_cmp(a, b) -> int:
    ha, hb = _half(a), _half(b)
    if ha != hb:
        return ha - hb
    c = order2(a, b)
    return -1 if c > 0 else (1 if c < 0 else 0)


def primitive_points(box: int) -> list[tuple[int, int]]:
    pts = [(x, y) for x in range(-box, box + 1) for y in range(-box, box + 1) if primitive_index((x, y)) == 1]
    return sorted(pts, key=cmp_to_key(_angle_cmp))


def _turn(a, b, c) -> int:
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def edge_height(a, b) -> int:
    """Lattice distance from the origin to the line through a and b."""
    return order2(a, b) // primitive_index((b[0] - a[0], b[1] - a[1]))


def enumerate_fano_polygons(
    box: int, max_vertices: int, index_filter: int | None = None
) -> Iterator[PolytopeRecord]:
    if box < 1 or max_vertices < 3:
        raise ValueError("need box >= 1 and max_vertices >= 3")
    pts = primitive_points(box)
    n = len(pts)

    def edge_ok(a, b) -> bool:
        if order2(a, b) <= 0:
            return False
        return index_filter is None or index_filter % edge_height(a, b) == 0

    def close(path):
        first, second, prev, last = pts[path[0]], pts[path[1]], pts[path[-2]], pts[path[-1]]
        if not edge_ok(last, first):
            return False
        if _turn(prev, last, first) <= 0 or _turn(last, first, second) <= 0:
            return False
        if index_filter is not None:
            verts = [pts[i] for i in path]
            ell = 1
            for k in range(len(verts)):
                ell = lcm(ell, edge_height(verts[k], verts[(k + 1) % len(verts)]))
            return ell == index_filter
        return True

    def grow(path):
        if len(path) >= 3 and close(path):
            yield [pts[i] for i in path]
        if len(path) == max_vertices:
            return
        last = pts[path[-1]]
        for j in range(path[-1] + 1, n):
            q = pts[j]
            if not edge_ok(last, q):
                continue
            if len(path) >= 2 and _turn(pts[path[-2]], last, q) <= 0:
                continue
            path.append(j)
            yield from grow(path)
            path.pop()

    for i in range(n):
        for verts in grow([i]):
            yield make_record(verts, source="enumerator", box=box)
