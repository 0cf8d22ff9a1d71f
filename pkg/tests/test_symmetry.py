from tropfan.cones import cone
from tropfan.examples import hankel_3minors
from tropfan.symmetry import (
    Permutation,
    canonical_orbit_representative,
    check_ideal_invariance,
    close_group,
    cone_orbit,
    format_permutations,
    parse_permutations,
    trivial_group,
)


def test_close_group_orders():
    n = 4
    transposition = Permutation((1, 0, 2, 3))
    cycle = Permutation((1, 2, 3, 0))
    assert close_group([transposition]).order == 2
    assert close_group([cycle]).order == 4
    assert close_group([transposition, cycle]).order == 24
    assert trivial_group(n).order == 1
    assert close_group([], n).order == 1


def test_invariance_identity():
    ideal, _ = hankel_3minors()
    assert check_ideal_invariance(ideal, trivial_group(7))


def test_invariance_hankel_reflection():
    ideal, reflection = hankel_3minors()
    assert check_ideal_invariance(ideal, close_group([reflection]))


def test_invariance_rejects_random_transposition():
    ideal, _ = hankel_3minors()
    bad = Permutation((1, 0, 2, 3, 4, 5, 6))
    assert not check_ideal_invariance(ideal, close_group([bad]))


def test_orbit_representative_trivial_group():
    c = cone([], [(1, 0, 0)], 3)
    assert canonical_orbit_representative(c, None) == c
    assert canonical_orbit_representative(c, trivial_group(3)) == c


def test_orbit_representative_full_symmetric():
    group = close_group([Permutation((1, 0, 2)), Permutation((1, 2, 0))])
    rays = []
    for i in range(3):
        eqs = [tuple(1 if j == k else 0 for j in range(3))
               for k in range(3) if k != i]
        ineq = tuple(1 if j == i else 0 for j in range(3))
        rays.append(cone(eqs, [ineq], 3))
    reps = {canonical_orbit_representative(c, group).key() for c in rays}
    assert len(reps) == 1
    assert len(cone_orbit(rays[0], group)) == 3


def test_orbit_representative_constant_on_orbits():
    group = close_group([Permutation((2, 0, 1))])
    c = cone([(1, -1, 0)], [(0, 0, 1)], 3)
    rep = canonical_orbit_representative(c, group)
    for img in cone_orbit(c, group):
        assert canonical_orbit_representative(img, group) == rep


def test_parse_format_round_trip():
    text = "{(6,5,4,3,2,1,0)}"
    perms = parse_permutations(text)
    assert perms == [Permutation((6, 5, 4, 3, 2, 1, 0))]
    assert format_permutations(perms) == text
    two = parse_permutations("{(1,0,2),(2,0,1)}")
    assert len(two) == 2
