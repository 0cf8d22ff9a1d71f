from math import comb

from tropfan.cones import (
    Fan,
    common_refinement,
    cone,
    fan_statistics,
    full_space,
    restrict_to_unit_first_coordinate,
)


def test_implicit_equality_promoted():
    c = cone([], [(1, 0), (-1, 0)], 2)
    assert c.equations == ((1, 0),)
    assert c.inequalities == ()


def test_redundant_inequality_removed():
    c = cone([], [(1, 0), (1, 1), (0, 1)], 2)
    assert c.equations == ()
    assert set(c.inequalities) == {(1, 0), (0, 1)}


def test_extreme_rays_orthant():
    c = cone([], [(1, 0), (0, 1)], 2)
    assert c.extreme_rays() == [(0, 1), (1, 0)]


def test_extreme_rays_halfplane_modulo_lineality():
    c = cone([], [(0, 1)], 2)
    assert c.lineality_dim == 1
    assert c.extreme_rays() == [(0, 1)]


def test_extreme_rays_cone_over_square():
    ineqs = [(-1, 0, 1), (1, 0, 1), (0, -1, 1), (0, 1, 1)]
    c = cone([], ineqs, 3)
    assert len(c.extreme_rays()) == 4
    for r in c.extreme_rays():
        assert abs(r[0]) == 1 and abs(r[1]) == 1 and r[2] == 1


def test_relative_interior_point():
    assert cone([], [(1, 0), (0, 1)], 2).relative_interior_point() == (1, 1)
    ray = cone([(2, -1)], [(1, 0)], 2)
    assert ray.relative_interior_point() == (1, 2)
    origin = cone([(1, 0), (0, 1)], [], 2)
    assert origin.relative_interior_point() == (0, 0)


def test_intersect_idempotent():
    c = cone([], [(1, 0), (1, 1)], 2)
    assert c.intersect(c) == c


def test_intersect_orthant_with_line():
    orthant = cone([], [(1, 0), (0, 1)], 2)
    line = cone([(1, 0)], [], 2)
    assert orthant.intersect(line) == cone([(1, 0)], [(0, 1)], 2)


def test_common_refinement_of_axes_is_origin():
    f1 = Fan(2, [cone([(1, 0)], [], 2)])
    f2 = Fan(2, [cone([(0, 1)], [], 2)])
    ref = common_refinement(f1, f2)
    assert len(ref) == 1
    assert ref.cones[0].dim == 0


def test_common_refinement_self_preserves_support():
    f = Fan(2, [cone([], [(1, 0), (0, 1)], 2), cone([], [(-1, 0), (0, 1)], 2)])
    ref = common_refinement(f, f)
    for w in [(1, 2), (-3, 1), (0, 5), (2, 0)]:
        assert ref.member(w) == f.member(w)
    assert not ref.member((0, -1))


def test_facets():
    orthant = cone([], [(1, 0), (0, 1)], 2)
    facets = orthant.facets()
    assert len(facets) == 2
    for f in facets:
        assert f.dim == 1
        assert orthant.contains_cone(f)
    halfspace = cone([], [(0, 0, 1)], 3)
    (boundary,) = halfspace.facets()
    assert boundary == cone([(0, 0, 1)], [], 3)
    simplicial = cone([], [(1, 0, 0), (0, 1, 0), (0, 0, 1)], 3)
    assert len(simplicial.facets()) == 3


def test_fan_statistics_simplicial_cone_binomials():
    c = cone([], [(1, 0, 0), (0, 1, 0), (0, 0, 1)], 3)
    stats = fan_statistics(Fan(3, [c]), 0)
    assert stats.f_vector == tuple(comb(3, i) for i in (1, 2, 3))
    assert stats.simplicial


def test_fan_statistics_single_ray():
    c = cone([(1, -1)], [(1, 0)], 2)
    stats = fan_statistics(Fan(2, [c]), 0)
    assert stats.f_vector == (1,)


def test_full_space():
    c = full_space(3)
    assert c.dim == 3 and c.lineality_dim == 3
    assert c.equations == () and c.inequalities == ()


def test_restrict_northern_ray():
    f = Fan(3, [cone([(1, 0, -1), (0, 1, -1)], [(1, 0, 0)], 3)])
    slices = restrict_to_unit_first_coordinate(f)
    assert len(slices) == 1


def test_restrict_southern_fan_empty():
    f = Fan(2, [cone([], [(-1, 0)], 2)])
    # cone is {w0 <= 0}: its lineality contains (0,1) only; ray (-1,0)
    assert restrict_to_unit_first_coordinate(f) == []


def test_restrict_halfplane():
    f = Fan(2, [cone([], [(0, 1)], 2)])
    slices = restrict_to_unit_first_coordinate(f)
    assert len(slices) == 1
    assert slices[0].inequalities == ((0, 1),)
