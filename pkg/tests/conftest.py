"""Shared fixtures and independent brute-force oracles."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from math import gcd

import pytest

from barytrans.fano import FanoFailure, FanoPolytope, validate_fano

BADBEHAVIOR_1 = [(2, -1), (0, 1), (-1, 0)]
BADBEHAVIOR_2 = [(1, -2), (0, 1), (-1, -2)]
STRICT_B1 = [(0, 1), (3, -2), (-4, 1)]
TO_KE = [(-25, -12), (-5, -6), (25, 14)]
HEXAGON = [(3, -1), (3, 1), (1, 2), (-3, 1), (-3, -1), (-1, -2)]
P1 = [(-2, -1), (-1, 3), (1, 2), (2, -3)]
P2 = [(-5, -4), (-5, 8), (5, 1), (8, -5)]
P_2 = [(1, 0), (0, 1), (-1, -1)]


def fano(points) -> FanoPolytope:
    return FanoPolytope.from_points(points)


def random_fano_polygon(rng: random.Random, bound: int = 50, max_pts: int = 7) -> FanoPolytope:
    while True:
        pts = []
        k = rng.randint(3, max_pts)
        while len(pts) < k:
            p = (rng.randint(-bound, bound), rng.randint(-bound, bound))
            if gcd(*p) == 1:
                pts.append(p)
        r = validate_fano(pts)
        if not isinstance(r, FanoFailure):
            return r


# finite subgroups of GL2(Z) generators, used to build polygons with symmetry
_GROUPS = [
    [((-1, 0), (0, -1))],
    [((0, 1), (1, 0))],
    [((0, -1), (1, -1))],            # order 3
    [((0, -1), (1, 0))],             # order 4
    [((1, -1), (1, 0))],             # order 6
    [((0, 1), (1, 0)), ((-1, 0), (0, -1))],
]


def _act(m, v):
    return (m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1])


def symmetric_fano_polygon(rng: random.Random, bound: int = 6) -> FanoPolytope:
    """Random polygon closed under a random finite matrix group, so Aut is non-trivial."""
    gens = rng.choice(_GROUPS)
    while True:
        seeds = []
        while len(seeds) < rng.randint(1, 2):
            p = (rng.randint(-bound, bound), rng.randint(-bound, bound))
            if gcd(*p) == 1:
                seeds.append(p)
        orbit = set(seeds)
        frontier = list(orbit)
        while frontier:
            v = frontier.pop()
            for g in gens:
                w = _act(g, v)
                if w not in orbit:
                    orbit.add(w)
                    frontier.append(w)
        r = validate_fano(sorted(orbit))
        if not isinstance(r, FanoFailure):
            return r


def brute_det2(u, v) -> int:
    return u[0] * v[1] - u[1] * v[0]


def brute_automorphisms_2d(p: FanoPolytope, bound: int = 8):
    """Every integer 2x2 matrix with |entries| <= bound, det +-1, permuting the vertices."""
    vs = set(p.vertices)
    out = []
    for a, b, c, d in itertools.product(range(-bound, bound + 1), repeat=4):
        if abs(a * d - b * c) != 1:
            continue
        if {(a * x + b * y, c * x + d * y) for x, y in vs} == vs:
            out.append(((a, b), (c, d)))
    return out


def _inner_box(p: FanoPolytope) -> Fraction:
    """Largest r with the cube [-r, r]^2 inside p."""
    return min(Fraction(f.offset, sum(abs(c) for c in f.normal)) for f in p.facets)


def brute_equivalent(p: FanoPolytope, q: FanoPolytope) -> bool:
    """Exhaustive search for U in GL2(Z) with U(p) = q.

    U maps the cube of radius r inside p into q, so every entry is bounded by
    R / r with R the largest vertex coordinate of q.
    """
    if len(p.vertices) != len(q.vertices):
        return False
    r = _inner_box(p)
    big = max(abs(c) for v in q.vertices for c in v)
    bound = int(big / r)
    qs = set(q.vertices)
    for a, c in itertools.product(range(-bound, bound + 1), repeat=2):
        if gcd(a, c) != 1:
            continue
        for b, d in itertools.product(range(-bound, bound + 1), repeat=2):
            if abs(a * d - b * c) != 1:
                continue
            if all((a * x + b * y, c * x + d * y) in qs for x, y in p.vertices):
                return True
    return False


@pytest.fixture
def rng():
    return random.Random(20241015)
