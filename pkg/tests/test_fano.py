import random
from collections import Counter
from fractions import Fraction

import pytest

from barytrans.fano import (
    ConeBarycenterError,
    FanoFailure,
    FanoPolytope,
    MaximalCone,
    NotFanoError,
    b_transform,
    b_transform_fano,
    barycenter,
    cond_b1,
    cone_barycenter,
    cross_polytope,
    cube,
    face_fan_cones,
    g_values,
    gorenstein_index,
    has_nontrivial_rotation,
    is_kahler_einstein,
    is_smooth,
    is_symmetric,
    ke_triangle_normal_form,
    ords,
    predicted_b_ords,
    s_mn,
    validate_fano,
)
from barytrans.geometry import hull
from barytrans.lattice import order2, primitive_index, vadd

from conftest import (
    BADBEHAVIOR_1,
    BADBEHAVIOR_2,
    HEXAGON,
    P1,
    P_2,
    STRICT_B1,
    TO_KE,
    brute_automorphisms_2d,
    fano,
    random_fano_polygon,
    symmetric_fano_polygon,
)


def test_validate_fixtures():
    assert isinstance(validate_fano(BADBEHAVIOR_1), FanoPolytope)
    assert validate_fano([(1, 0), (-1, 1), (1, -1)]) is FanoFailure.ORIGIN_NOT_INTERIOR
    assert validate_fano([(1, -1), (-1, -1), (0, -1)]) is FanoFailure.DIMENSION_DROP
    assert validate_fano([(2, 0), (0, 1), (-1, -1)]) is FanoFailure.NON_PRIMITIVE_VERTEX
    assert str(FanoFailure.DIMENSION_DROP) == "DimensionDrop"


def test_from_points_raises_with_reason():
    with pytest.raises(NotFanoError) as e:
        FanoPolytope.from_points([(1, 0), (-1, 1), (1, -1)])
    assert e.value.reason is FanoFailure.ORIGIN_NOT_INTERIOR


def test_face_fan_cone_counts():
    assert len(face_fan_cones(cube(2))) == 4
    assert len(face_fan_cones(fano(STRICT_B1))) == 3
    cones = face_fan_cones(cube(3))
    assert len(cones) == 6 and all(len(c.generators) == 4 for c in cones)


def test_cone_barycenter_fixtures():
    assert cone_barycenter(MaximalCone(((25, 14), (-25, -12)))) == (0, 1)
    assert cone_barycenter(MaximalCone(((1, 0), (0, 1)))) == (1, 1)
    for m in range(8):
        c = MaximalCone(((m + 1, -m), (-m, m + 1)))
        assert c.raw_sum == (1, 1) and cone_barycenter(c) == (1, 1)
    assert MaximalCone(((-25, -12), (-5, -6))).raw_sum == (-30, -18)


def test_cone_barycenter_zero_sum_is_an_error():
    with pytest.raises(ConeBarycenterError, match="undefined"):
        cone_barycenter(MaximalCone(((1, 0, 1), (-1, 0, -1))))


def test_b_transform_fixtures():
    assert b_transform(fano(TO_KE)).vertex_set == {(-5, -3), (5, 2), (0, 1)}
    assert b_transform(cube(2)).vertex_set == set(cross_polytope(2).vertices)
    assert b_transform(cross_polytope(2)).vertex_set == set(cube(2).vertices)
    assert b_transform(fano(HEXAGON)).vertex_set == {(4, 3), (-2, 3), (-4, -3), (2, -3)}
    for d in (3, 4):
        assert b_transform(cube(d)) == cross_polytope(d).polytope
        assert b_transform(cross_polytope(d)) == cube(d).polytope


def test_b_transform_fano_failures():
    assert b_transform_fano(fano(BADBEHAVIOR_1)) is FanoFailure.ORIGIN_NOT_INTERIOR
    assert b_transform(fano(BADBEHAVIOR_1)).vertex_set == {(1, 0), (-1, 1), (1, -1)}
    assert b_transform_fano(fano(BADBEHAVIOR_2)) is FanoFailure.DIMENSION_DROP
    assert b_transform(fano(BADBEHAVIOR_2)).vertex_set == {(1, -1), (-1, -1)}


@pytest.mark.parametrize("m,n", [(m, n) for m in range(4) for n in range(4)])
def test_s_mn_b_images(m, n):
    b = b_transform_fano(s_mn(m, n))
    assert set(b.vertices) == {(1, 1), (-1, 1), (-1, -1), (1, -1)}
    assert b_transform_fano(b) == s_mn(0, 0)
    assert is_kahler_einstein(b)
    assert has_nontrivial_rotation(b)


def test_kahler_einstein_fixtures():
    p = fano(TO_KE)
    assert not is_kahler_einstein(p)
    assert is_kahler_einstein(b_transform_fano(p))
    assert is_kahler_einstein(s_mn(0, 0))
    assert not is_kahler_einstein(fano(P1))
    assert barycenter(fano(P1)) == (0, 0)


def test_gorenstein_index_reflexive():
    assert gorenstein_index(fano(P_2)) == 1
    assert gorenstein_index(cube(3)) == 1
    assert gorenstein_index(fano([(1, 0), (0, 1), (-1, -2)])) == 1


def test_gorenstein_index_scaled_dual():
    p = fano(TO_KE)
    ell = gorenstein_index(p)
    dual_scaled = [tuple(ell * x for x in v) for v in p.dual.vertices]
    assert all(Fraction(x).denominator == 1 for v in dual_scaled for x in v)
    for k in range(1, ell):
        if ell % k == 0 and k != ell:
            assert any(Fraction(k * x).denominator != 1 for v in p.dual.vertices for x in v)


def _brute_symmetric(p, bound=8):
    mats = brute_automorphisms_2d(p, bound)
    for x in range(-6, 7):
        for y in range(-6, 7):
            if (x, y) != (0, 0) and all((a * x + b * y, c * x + d * y) == (x, y) for (a, b), (c, d) in mats):
                return False
    return True


def test_automorphism_group_orders():
    assert len(s_mn(0, 0).automorphisms) == 8
    assert len(fano(P_2).automorphisms) == 6
    assert len(cube(3).automorphisms) == 48
    assert len(cross_polytope(4).automorphisms) == 384


def test_automorphisms_match_brute_force():
    rng = random.Random(11)
    polys = [s_mn(0, 0), s_mn(2, 1), fano(P_2), fano(HEXAGON), fano(TO_KE)]
    polys += [symmetric_fano_polygon(rng, 3) for _ in range(15)]
    for p in polys:
        ours = {u.matrix for u in p.automorphisms}
        assert ours == set(brute_automorphisms_2d(p))
        assert is_symmetric(p) == _brute_symmetric(p)


def test_automorphisms_form_a_group():
    p = fano(HEXAGON)
    auts = {u.matrix for u in p.automorphisms}
    for u in p.automorphisms:
        for w in p.automorphisms:
            assert (u @ w).matrix in auts


def test_s_mn_unequal_has_reflection_only():
    for m, n in [(1, 0), (2, 1), (5, 3)]:
        p = s_mn(m, n)
        assert any(u.det == -1 for u in p.automorphisms)
        assert not has_nontrivial_rotation(p)
    assert has_nontrivial_rotation(s_mn(2, 2))


def test_symmetric_fixtures():
    assert is_symmetric(fano(HEXAGON))
    assert is_symmetric(s_mn(0, 0)) and is_symmetric(s_mn(3, 3))
    q = fano(TO_KE)
    for _ in range(3):
        assert not is_symmetric(q)
        q = b_transform_fano(q)


def test_s_mn_unequal_symmetry_follows_fixed_point_definition():
    # the centroid is fixed by every automorphism; a nonzero centroid pins a fixed line
    p = s_mn(2, 1)
    assert barycenter(p) == (Fraction(1, 24), Fraction(1, 24))
    assert not is_symmetric(p)


def test_rotation_fixtures_and_dimension_guard():
    assert has_nontrivial_rotation(fano(HEXAGON))
    with pytest.raises(NotImplementedError):
        has_nontrivial_rotation(cube(3))


def test_smooth_fixtures():
    assert not is_smooth(cube(2))
    assert is_smooth(cross_polytope(2))
    assert is_smooth(fano(P_2))
    assert not is_smooth(fano([(1, 0), (0, 1), (-1, -2)]))
    assert not is_smooth(cube(3)) and is_smooth(cross_polytope(3))


def _brute_g(vs):
    n = len(vs)
    return [order2(vs[i - 1], vs[i]) + order2(vs[i], vs[(i + 1) % n]) - order2(vs[(i + 1) % n], vs[i - 1])
            for i in range(n)]


def test_g_values_badbehavior():
    p = fano(BADBEHAVIOR_1)
    assert g_values(p) == _brute_g(list(p.vertices))
    assert not cond_b1(p)
    assert sorted(ords(p)) == [1, 1, 2]


def test_triangle_corollary():
    # ords a > b > c > 0 with a < b + c
    rng = random.Random(5)
    found = 0
    for _ in range(4000):
        p = random_fano_polygon(rng, bound=8, max_pts=3)
        if len(p.vertices) != 3:
            continue
        a, b, c = sorted(ords(p), reverse=True)
        if a > b > c and a < b + c:
            found += 1
            assert cond_b1(p)
    assert found > 5


def test_predicted_ords_when_vertex_count_preserved():
    rng = random.Random(8)
    checked = 0
    for _ in range(400):
        p = random_fano_polygon(rng, bound=20)
        q = b_transform_fano(p)
        if isinstance(q, FanoFailure) or len(q.vertices) != len(p.vertices):
            continue
        assert Counter(ords(q)) == Counter(predicted_b_ords(p))
        checked += 1
    assert checked > 20


def test_named_families():
    assert set(s_mn(0, 0).vertices) == {(1, 0), (0, 1), (-1, 0), (0, -1)}
    assert set(ke_triangle_normal_form(1, 1).vertices) == {(1, -1), (0, 1), (-1, 0)}
    assert barycenter(s_mn(2, 1)) == (Fraction(1, 24), Fraction(1, 24))
    with pytest.raises(ValueError):
        s_mn(-1, 0)


def test_equality_hash_and_negation():
    p = fano(TO_KE)
    q = fano(list(reversed(TO_KE)))
    assert p == q and hash(p) == hash(q)
    assert set((-p).vertices) == {(25, 12), (5, 6), (-25, -14)}


def test_lemma_ip_on_symmetric_polygons():
    rng = random.Random(2)
    for _ in range(30):
        p = symmetric_fano_polygon(rng)
        vs = p.vertices
        n = len(vs)
        for u in p.automorphisms:
            for i in range(n):
                a, b = vs[i], vs[(i + 1) % n]
                assert primitive_index(vadd(a, b)) == primitive_index(vadd(u(a), u(b)))


def test_hull_input_accepted():
    assert isinstance(validate_fano(hull(P_2)), FanoPolytope)
