"""Tropical hypersurfaces, prevarieties, Groebner cones, curve bases,
starting cones, neighbor computation and the connectivity traversal."""

from __future__ import annotations

import hashlib
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations

from .cones import Cone, Fan, common_refinement, cone, fan_statistics
from .groebner import (
    GroebnerConePair,
    Ideal,
    buchberger,
    homogeneity_space,
    initial_marked_gb,
    krull_dimension,
    lift,
    monomial_in_ideal,
    normal_form,
)
from .linalg import clear_denominators, kernel_basis, rank, vec_sub
from .poly import DEGREVLEX, Polynomial, initial_form, weight_order
from .symmetry import canonical_orbit_representative, cone_orbit


class RetryExhausted(RuntimeError):
    """Randomized search ran out of attempts; carries the seed for replay."""

    def __init__(self, message, seed):
        super().__init__(f"{message} (seed {seed})")
        self.seed = seed


def _derived_rng(seed, *tokens):
    """Deterministic per-subtask RNG derived from a global seed and context."""
    h = hashlib.sha256(repr((seed, tokens)).encode()).digest()
    return random.Random(int.from_bytes(h[:8], "big"))


# ---------------------------------------------------------------------------
# Hypersurfaces and prevarieties


def tropical_hypersurface(f):
    """Fan representation of the weights where in_w(f) is not a monomial.

    The codimension-one skeleton of the inner normal fan of the Newton
    polytope: the facets of the normal cone of each vertex.
    """
    if f.is_zero():
        raise ValueError("zero polynomial has no tropical hypersurface")
    n = f.ring.n
    supp = f.support()
    out = Fan(n)
    if len(supp) == 1:
        return out
    for v in supp:
        normal = cone([], [vec_sub(u, v) for u in supp if u != v], n)
        if normal.dim == n:  # v is a vertex of the Newton polytope
            for facet in normal.facets():
                out.add(facet)
    return out


def tropical_prevariety(fs):
    """Common refinement of the tropical hypersurfaces of the given polynomials."""
    if not fs:
        raise ValueError("empty polynomial list")
    n = fs[0].ring.n
    if any(g.ring.n != n for g in fs):
        raise ValueError("polynomials in different rings")
    fans = sorted((tropical_hypersurface(g) for g in fs), key=len)
    result = fans[0]
    for fan in fans[1:]:
        if result.is_empty():
            return result
        result = common_refinement(result, fan)
    return result


# ---------------------------------------------------------------------------
# Groebner cones of marked pairs


def groebner_cone(pair):
    """Canonical cone of weights whose initial forms match the pair's markings."""
    eqs = []
    ineqs = []
    n = pair.full_gb.ring.n
    for (g, m), (h, mh) in zip(pair.full_gb.elements, pair.initial_gb.elements):
        assert m == mh
        hsupp = set(h.terms)
        for e in hsupp:
            if e != m:
                eqs.append(vec_sub(e, m))
        for e in g.terms:
            if e not in hsupp:
                ineqs.append(vec_sub(e, m))
    return cone(eqs, ineqs, n)


def make_pair(full_gb, weights):
    """Pair whose initial basis applies the successive weight initial forms."""
    init = full_gb
    for w in weights:
        init = initial_marked_gb(init, w)
    return GroebnerConePair(init, full_gb)


# ---------------------------------------------------------------------------
# Generic relative interior points


def generic_relative_interior_point(c, rng):
    """Random integer point of relint(c): positive ray combination plus a
    lineality perturbation."""
    n = c.ambient_dim
    p = [0] * n
    for r in c.extreme_rays():
        coeff = rng.randrange(1, 2**32)
        for i, x in enumerate(r):
            p[i] += coeff * x
    for l in c.lineality_basis():
        coeff = rng.randrange(-(2**31), 2**31)
        for i, x in enumerate(l):
            p[i] += coeff * x
    return tuple(p)


# ---------------------------------------------------------------------------
# Tropical basis of a curve


def tropical_basis_of_curve(ideal, seed, reuse_verified=True):
    """Generating set whose prevariety equals the tropical variety.

    Requires a homogeneous ideal with dim(I) = homog(I) + 1.  Witnesses are
    appended until every cone of the prevariety survives the monomial test.
    With reuse_verified, cones already certified monomial-free are not
    re-tested after a restart (the verdict depends only on the cone).
    """
    if not ideal.is_homogeneous():
        raise ValueError("tropical curve basis requires a homogeneous ideal")
    dim = krull_dimension(ideal)
    homog = len(homogeneity_space(ideal))
    if dim is None or dim != homog + 1:
        raise ValueError(
            f"not a tropical curve: dim {dim} != homog {homog} + 1"
        )
    gens = list(ideal.generators)
    verified = set()
    while True:
        prev = tropical_prevariety(gens)
        restart = False
        for c in prev.cones:
            if reuse_verified and c.key() in verified:
                continue
            rng = _derived_rng(seed, "curve-point", c.key())
            w = generic_relative_interior_point(c, rng)
            gb = buchberger(gens, weight_order(w), ring=ideal.ring)
            init = Ideal([initial_form(g, w) for g, _ in gb.elements], ideal.ring)
            mono = monomial_in_ideal(init)
            if mono is None:
                verified.add(c.key())
                continue
            xm = Polynomial.monomial(mono, ideal.ring)
            wit = xm - normal_form(xm, gb)
            gens.append(wit)
            if not reuse_verified:
                verified.clear()
            restart = True
            break
        if not restart:
            return gens


def curve_rays(basis, homog_dim):
    """Maximal cones of the curve's tropical variety (dimension homog+1)."""
    prev = tropical_prevariety(basis)
    d = homog_dim + 1
    out = {}
    for c in prev.cones:
        if c.dim == d:
            out[c.key()] = c
    return sorted(out.values(), key=Cone.key)


# ---------------------------------------------------------------------------
# Starting cone


def starting_cone(ideal, seed, retry_budget=64):
    """A pair representing a maximal Groebner cone inside the tropical variety.

    Recursive randomized search: pick random weight vectors, move to extreme
    rays of their Groebner cones, recurse into monomial-free initial ideals
    until the homogeneity dimension reaches dim(I).
    """
    if not ideal.is_homogeneous():
        raise ValueError("starting cone requires a homogeneous ideal")
    gb = ideal.gb()
    return _starting_cone_rec(gb, ideal.ring, seed, retry_budget, level=0)


def _starting_cone_rec(gb, ring, seed, retry_budget, level):
    gens = gb.polynomials()
    ideal = Ideal(gens, ring)
    ideal._gb_drl = gb if gb.order == DEGREVLEX else None
    d = krull_dimension(ideal)
    if d is None:
        raise ValueError("unit ideal has no tropical variety")
    homog = len(homogeneity_space(ideal))
    if d == homog:
        gbp = ideal.gb()
        return GroebnerConePair(gbp, gbp)
    rng = _derived_rng(seed, "starting-cone", level)
    for attempt in range(retry_budget):
        wrand = tuple(rng.randint(-(10**4), 10**4) for _ in range(ring.n))
        gw = buchberger(gens, weight_order(wrand), ring=ring)
        c = groebner_cone(make_pair(gw, [wrand]))
        rays = c.extreme_rays()
        if not rays:
            continue
        w = rays[rng.randrange(len(rays))]
        gw2 = buchberger(gens, weight_order(w), ring=ring)
        init_gb = initial_marked_gb(gw2, w)
        init_ideal = Ideal(init_gb.polynomials(), ring)
        if monomial_in_ideal(init_ideal) is not None:
            continue
        sub = _starting_cone_rec(init_gb, ring, seed, retry_budget, level + 1)
        full = lift(gw2, sub.full_gb)
        return GroebnerConePair(sub.initial_gb, full)
    raise RetryExhausted("starting cone search exhausted its retry budget", seed)


# ---------------------------------------------------------------------------
# Neighbors


def neighbors(pair, seed, d=None, facet_cache=None):
    """Pairs for every maximal tropical Groebner cone sharing a facet with
    the pair's cone (the pair's own cone is among them; callers filter).

    facet_cache maps canonical facet cones to previously computed results;
    a facet's local curve computation is shared by its adjacent cones.
    """
    c = groebner_cone(pair)
    if d is None:
        d = c.dim
    full = pair.full_gb
    ring = full.ring
    out = []
    for facet in c.facets():
        key = facet.key()
        if facet_cache is not None and key in facet_cache:
            out.extend(facet_cache[key])
            continue
        u = facet.relative_interior_point()
        gb_j = initial_marked_gb(full, u)
        j_ideal = Ideal(gb_j.polynomials(), ring)
        basis = tropical_basis_of_curve(j_ideal, seed)
        rays = curve_rays(basis, homog_dim=d - 1)
        found = []
        for ray in rays:
            rng = _derived_rng(seed, "ray-point", ray.key())
            v = ray.relative_interior_point()
            order2 = weight_order(u, v)
            gj2 = buchberger(gb_j.polynomials(), order2, ring=ring)
            full2 = lift(full, gj2, order=order2)
            new_pair = make_pair(full2, [u, v])
            found.append(new_pair)
        if facet_cache is not None:
            facet_cache[key] = found
        out.extend(found)
    return out


# ---------------------------------------------------------------------------
# Traversal


@dataclass
class TraversalResult:
    pairs: list
    cones: list            # orbit representatives actually traversed
    all_cones: list        # full fan after orbit expansion
    stats: object
    homogeneity_basis: list
    lineality_dim: int
    group: object


def traverse(start, symmetry=None, seed=0, jobs=1):
    """Breadth-first traversal of the maximal Groebner cones of T(I)."""
    start_cone = groebner_cone(start)
    d = start_cone.dim
    ring = start.full_gb.ring
    homog_basis = homogeneity_space(Ideal(start.full_gb.polynomials(), ring))
    lineality_dim = len(homog_basis)

    def orbit_key(c):
        return canonical_orbit_representative(c, symmetry).key()

    visited = {orbit_key(start_cone): (start_cone, start)}
    facet_cache = {}
    frontier = [(start_cone, start)]
    while frontier:
        new_items = []

        def expand(item):
            c, pair = item
            return neighbors(pair, seed, d=d, facet_cache=facet_cache)

        if jobs > 1:
            # facet computations for a batch are independent; the shared
            # cache is only a memoization and merging is order-insensitive
            with ThreadPoolExecutor(max_workers=jobs) as pool:
                batches = list(pool.map(expand, frontier))
        else:
            batches = [expand(item) for item in frontier]
        for batch in batches:
            for p in batch:
                pc = groebner_cone(p)
                k = orbit_key(pc)
                if k not in visited:
                    visited[k] = (pc, p)
                    new_items.append((pc, p))
        frontier = sorted(new_items, key=lambda item: item[0].key())

    items = sorted(visited.values(), key=lambda item: item[0].key())
    reps = [c for c, _ in items]
    pairs = [p for _, p in items]
    expanded = {}
    for c in reps:
        for img in cone_orbit(c, symmetry):
            expanded[img.key()] = img
    all_cones = sorted(expanded.values(), key=Cone.key)
    fan = Fan(start_cone.ambient_dim, all_cones)
    stats = fan_statistics(fan, lineality_dim)
    return TraversalResult(pairs, reps, all_cones, stats, homog_basis,
                           lineality_dim, symmetry)


# ---------------------------------------------------------------------------
# Linear ideals


@dataclass
class LinearIdealModel:
    """d x n rational coefficient matrix of full row rank d."""

    matrix: list
    ring: object

    def rank(self):
        return rank(self.matrix)


def linear_circuits(model):
    """All circuits: nonzero linear forms of minimal support, primitive,
    leading sign positive."""
    rows = model.matrix
    if not rows:
        raise ValueError("empty matrix")
    n = len(rows[0])
    d = len(rows)
    if rank(rows) != d:
        raise ValueError("coefficient matrix is rank-deficient")
    null = kernel_basis(rows)  # row space = orthogonal complement of null
    circuits = []
    supports = []
    for size in range(1, n - d + 2):
        for subset in combinations(range(n), size):
            sset = set(subset)
            if any(s <= sset for s in supports):
                continue
            # solve for row-space vectors supported on the subset
            # (null space trivial: every vector lies in the row space)
            system = [[k[j] for j in subset] for k in null] or [[0] * size]
            ker = kernel_basis(system)
            if len(ker) != 1:
                continue
            vec = ker[0]
            if any(x == 0 for x in vec):
                continue
            full = [0] * n
            for j, x in zip(subset, vec):
                full[j] = x
            full = clear_denominators(full)
            for x in full:
                if x != 0:
                    if x < 0:
                        full = tuple(-y for y in full)
                    break
            supports.append(sset)
            circuits.append(tuple(full))
    ring = model.ring
    out = []
    for cvec in circuits:
        terms = {}
        for i, coeff in enumerate(cvec):
            if coeff:
                e = [0] * n
                e[i] = 1
                terms[tuple(e)] = coeff
        out.append(Polynomial(terms, ring))
    return out


def uniform_bergman_member(w, d):
    """True iff the d+1 smallest entries of w are equal."""
    if d >= len(w):
        raise ValueError("d must be smaller than the vector length")
    s = sorted(w)
    return s[0] == s[d]
