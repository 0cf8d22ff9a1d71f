"""Randomized cross-checks on small ideals (at most 4 variables, degree 3).

Each suite runs over at least 25 deterministic pseudo-random instances and
verifies one algorithm against an independent route to the same answer.
"""

import random

from tropfan.cones import Fan, common_refinement, cone
from tropfan.groebner import (
    Ideal,
    buchberger,
    initial_ideal_gens,
    lift,
    monomial_in_ideal,
    normal_form,
    witness,
)
from tropfan.poly import (
    DEGREVLEX,
    Polynomial,
    RingDescriptor,
    homogenize,
    initial_form,
    weight_order,
)
from tropfan.tropical import generic_relative_interior_point, groebner_cone, make_pair

N_IDEALS = 30


def random_polynomial(rng, ring, max_terms=4, max_degree=3):
    terms = {}
    for _ in range(rng.randint(2, max_terms)):
        e = [0] * ring.n
        for _ in range(rng.randint(1, max_degree)):
            e[rng.randrange(ring.n)] += 1
        terms[tuple(e)] = terms.get(tuple(e), 0) + rng.choice([-3, -2, -1, 1, 2, 3])
    f = Polynomial(terms, ring)
    return f if not f.is_zero() and f.total_degree() >= 1 else random_polynomial(rng, ring)


def random_ideal(seed):
    rng = random.Random(seed)
    ring = RingDescriptor(tuple("abcd"[: rng.randint(2, 4)]))
    gens = [random_polynomial(rng, ring) for _ in range(rng.randint(2, 3))]
    return Ideal(gens, ring), rng


def homogenized(ideal):
    """The homogenization of the full ideal, via its degrevlex basis."""
    ring = ideal.ring.extended()
    gens = [homogenize(g, ring) for g, _ in ideal.gb().elements]
    return Ideal(gens, ring)


def random_weight(rng, n, lo=-5, hi=5):
    while True:
        w = tuple(rng.randint(lo, hi) for _ in range(n))
        if any(w):
            return w


# ---------------------------------------------------------------------------
# Initial ideals commute with homogenization (monomial-freeness transfer)


def test_initial_ideal_monomial_freeness_transfers_to_homogenization():
    for seed in range(N_IDEALS):
        ideal, rng = random_ideal(seed)
        n = ideal.ring.n
        # nonpositive weights keep the weight-refined order a well-order
        # on non-homogeneous input, so in_w(I) is computable directly
        w = tuple(-rng.randint(0, 3) for _ in range(n))
        gw = buchberger(ideal.generators, weight_order(w), ring=ideal.ring)
        direct = Ideal(initial_ideal_gens(gw, w), ideal.ring)

        hom = homogenized(ideal)
        w0 = (0,) + w
        ghw = buchberger(hom.generators, weight_order(w0), ring=hom.ring)
        via_hom = Ideal(initial_ideal_gens(ghw, w0), hom.ring)

        assert (monomial_in_ideal(direct) is None) == (
            monomial_in_ideal(via_hom) is None
        ), (seed, w)


# ---------------------------------------------------------------------------
# Lifting a basis of an initial ideal vs computing from scratch


def test_lift_agrees_with_buchberger_from_scratch():
    for seed in range(N_IDEALS):
        ideal, rng = random_ideal(seed)
        hom = homogenized(ideal)
        n = hom.ring.n
        w1 = random_weight(rng, n)
        g1 = buchberger(hom.generators, weight_order(w1), ring=hom.ring)
        c = groebner_cone(make_pair(g1, [w1]))
        u = c.relative_interior_point()
        w2 = random_weight(rng, n)
        order = weight_order(u, w2)
        initial_target = buchberger(
            initial_ideal_gens(g1, u), order, ring=hom.ring
        )
        lifted = lift(g1, initial_target, order)
        scratch = buchberger(hom.generators, order, ring=hom.ring)
        assert lifted.key() == scratch.key(), seed


# ---------------------------------------------------------------------------
# Groebner cone membership vs recomputation of the initial ideal


def _reduced_drl(gens, ring):
    if all(g.is_zero() for g in gens):
        return None
    return buchberger(gens, DEGREVLEX, ring=ring).key()


def test_groebner_cone_membership_matches_recomputation():
    for seed in range(N_IDEALS):
        ideal, rng = random_ideal(seed)
        hom = homogenized(ideal)
        n = hom.ring.n
        w1 = random_weight(rng, n)
        g1 = buchberger(hom.generators, weight_order(w1), ring=hom.ring)
        pair = make_pair(g1, [w1])
        c = groebner_cone(pair)
        target = _reduced_drl([g for g, _ in pair.initial_gb.elements], hom.ring)
        for _ in range(4):
            wp = random_weight(rng, n, -2, 2)
            gp = buchberger(hom.generators, weight_order(wp, w1), ring=hom.ring)
            jp = initial_ideal_gens(gp, wp)
            gpp = buchberger(jp, weight_order(w1), ring=hom.ring)
            twice = _reduced_drl(initial_ideal_gens(gpp, w1), hom.ring)
            assert c.contains(wp) == (twice == target), (seed, wp)


# ---------------------------------------------------------------------------
# Witness postcondition across the whole Groebner cone


def test_witness_is_monomial_on_relative_interior():
    checked = 0
    seed = 0
    while checked < 25:
        ideal, rng = random_ideal(seed)
        seed += 1
        hom = homogenized(ideal)
        n = hom.ring.n
        w = random_weight(rng, n)
        g = buchberger(hom.generators, weight_order(w), ring=hom.ring)
        init = Ideal(initial_ideal_gens(g, w), hom.ring)
        if monomial_in_ideal(init) is None:
            continue
        f = witness(hom, w)
        assert normal_form(f, g).is_zero()
        c = groebner_cone(make_pair(g, [w]))
        for _ in range(10):
            wp = generic_relative_interior_point(c, rng)
            assert initial_form(f, wp).is_monomial(), (seed - 1, wp)
        checked += 1
    assert seed < 4 * 25  # random initial ideals are rarely monomial-free


# ---------------------------------------------------------------------------
# Polyhedral double description self-consistency


def random_cone(rng):
    n = rng.randint(3, 4)
    eqs = [random_weight(rng, n, -3, 3) for _ in range(rng.randint(0, 1))]
    ineqs = [random_weight(rng, n, -3, 3) for _ in range(rng.randint(3, 6))]
    return cone(eqs, ineqs, n)


def dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def test_double_description_self_consistency():
    rng = random.Random(99)
    for _ in range(30):
        c = random_cone(rng)
        n = c.ambient_dim
        w = c.relative_interior_point()
        for a in c.equations:
            assert dot(a, w) == 0
        for a in c.inequalities:
            assert dot(a, w) > 0
        rays = c.extreme_rays()
        lin = c.lineality_basis()
        need = c.dim - c.lineality_dim - 1
        for r in rays:
            assert all(dot(a, r) == 0 for a in c.equations)
            vals = [dot(a, r) for a in c.inequalities]
            assert all(v >= 0 for v in vals)
            assert sum(v == 0 for v in vals) >= need
        for f in c.facets():
            assert f.dim == c.dim - 1
            assert c.contains_cone(f)
        # every nonnegative combination of the generators lies in the cone
        for _ in range(5):
            v = [0] * n
            for r in rays:
                k = rng.randint(0, 3)
                v = [x + k * y for x, y in zip(v, r)]
            for b in lin:
                k = rng.randint(-3, 3)
                v = [x + k * y for x, y in zip(v, b)]
            assert c.contains(tuple(v))


def test_common_refinement_membership_sampling():
    rng = random.Random(7)
    for _ in range(25):
        n = rng.randint(2, 4)
        f1 = Fan(n, [cone([], [random_weight(rng, n, -2, 2)], n) for _ in range(2)])
        f2 = Fan(n, [cone([], [random_weight(rng, n, -2, 2)], n) for _ in range(2)])
        ref = common_refinement(f1, f2)
        for _ in range(20):
            w = tuple(rng.randint(-4, 4) for _ in range(n))
            assert ref.member(w) == (f1.member(w) and f2.member(w)), (w, n)
