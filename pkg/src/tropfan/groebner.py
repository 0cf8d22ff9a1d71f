"""Buchberger engine: normal forms, marked reduced Groebner bases, initial
ideals, saturation, monomial membership, witnesses, lifting, dimension and
the homogeneity space."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from gmpy2 import mpq

from .linalg import kernel_basis, vec_dot
from .poly import (
    DEGREVLEX,
    Polynomial,
    RingDescriptor,
    TermOrder,
    _drl_key,
    initial_form,
    leading_exponent,
    weight_order,
)


@dataclass(frozen=True)
class MarkedReducedGB:
    """Reduced Groebner basis with distinguished (marked) initial terms.

    elements: tuple of (Polynomial, exponent tuple); the marked coefficient
    is 1 and elements are sorted by marked term under degrevlex so that
    structural equality identifies the basis.
    """

    elements: tuple
    order: TermOrder | None = None
    ring: RingDescriptor = None

    def polynomials(self):
        return [g for g, _ in self.elements]

    def marks(self):
        return [m for _, m in self.elements]

    def key(self):
        """Hashable structural identity (ignores the order tag)."""
        return tuple(
            (m, tuple(sorted(g.terms.items()))) for g, m in self.elements
        )

    def is_unit(self):
        return len(self.elements) == 1 and self.elements[0][1] == (0,) * self.ring.n


@dataclass(frozen=True)
class GroebnerConePair:
    """(GB of in_w(I), GB of I) under a common weight-refined order."""

    initial_gb: MarkedReducedGB
    full_gb: MarkedReducedGB


@dataclass
class Ideal:
    generators: list
    ring: RingDescriptor
    _dim: int | None = field(default=None, repr=False)
    _homog: list | None = field(default=None, repr=False)
    _gb_drl: MarkedReducedGB | None = field(default=None, repr=False)

    def __post_init__(self):
        self.generators = [g for g in self.generators if not g.is_zero()]

    def gb(self, order=DEGREVLEX):
        if order == DEGREVLEX:
            if self._gb_drl is None:
                self._gb_drl = buchberger(self.generators, DEGREVLEX, ring=self.ring)
            return self._gb_drl
        return buchberger(self.generators, order, ring=self.ring)

    def is_homogeneous(self):
        return all(g.is_homogeneous() for g in self.generators)


def _divides(a, b):
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _exp_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _exp_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def normal_form(f, gb):
    """Remainder of division of f by a marked basis; fully reduced.

    A term moved to the result can reappear in the worklist when the
    marking order disagrees with the selection order, so contributions
    must accumulate rather than overwrite.
    """
    if f.is_zero():
        return f
    ring = f.ring
    marked = [(m, g.terms, g.terms[m]) for g, m in gb.elements]
    key = gb.order.key if gb.order is not None else _drl_key
    work = dict(f.terms)
    result = {}
    while work:
        u = max(work, key=key)
        cu = work.pop(u)
        reduced = False
        for m, gterms, cm in marked:
            if _divides(m, u):
                shift = _exp_sub(u, m)
                factor = cu / cm
                for e, c in gterms.items():
                    if e == m:
                        continue
                    t = tuple(a + b for a, b in zip(e, shift))
                    s = work.get(t, 0) - factor * c
                    if s == 0:
                        work.pop(t, None)
                    else:
                        work[t] = s
                reduced = True
                break
        if not reduced:
            result[u] = result.get(u, 0) + cu
    return Polynomial(result, ring)


def s_polynomial(f, mf, g, mg):
    lcm = _exp_lcm(mf, mg)
    a = Polynomial.monomial(_exp_sub(lcm, mf), f.ring, 1 / f.terms[mf])
    b = Polynomial.monomial(_exp_sub(lcm, mg), g.ring, 1 / g.terms[mg])
    return a * f - b * g


def buchberger(gens, order, ring=None):
    """Reduced marked Groebner basis of <gens> with Gebauer-Moeller pair pruning."""
    gens = [g for g in gens if not g.is_zero()]
    if ring is None:
        if not gens:
            raise ValueError("cannot infer ring from empty generator list")
        ring = gens[0].ring
    key = order.key
    basis = []   # list of (poly dict with marked coeff 1, mark)
    pairs = []   # list of (lcm, i, j)

    def add_poly(p):
        mark = max(p, key=key)
        cm = p[mark]
        monic = {e: c / cm for e, c in p.items()}
        t = len(basis)
        new_pairs = []
        for i, (_, mi) in enumerate(basis):
            new_pairs.append((_exp_lcm(mi, mark), i, t))
        # Gebauer-Moeller criteria against existing pairs and among new pairs
        survivors = []
        for lcm_it, i, _ in new_pairs:
            mi = basis[i][1]
            # criterion M: drop if another new pair's lcm properly divides
            drop = False
            for lcm_jt, j, _ in new_pairs:
                if j != i and _divides(lcm_jt, lcm_it) and lcm_jt != lcm_it:
                    drop = True
                    break
            if drop:
                continue
            survivors.append((lcm_it, i, t))
        # criterion F: keep one pair per lcm value
        seen = {}
        for p_ in survivors:
            seen.setdefault(p_[0], p_)
        survivors = list(seen.values())
        # criterion B (coprime leads): drop pairs with disjoint supports
        survivors = [
            p_ for p_ in survivors
            if _exp_lcm(basis[p_[1]][1], mark) != tuple(a + b for a, b in zip(basis[p_[1]][1], mark))
        ]
        # prune old pairs made redundant by the new lead
        kept_old = []
        for lcm_ij, i, j in pairs:
            if (
                _divides(mark, lcm_ij)
                and _exp_lcm(basis[i][1], mark) != lcm_ij
                and _exp_lcm(basis[j][1], mark) != lcm_ij
            ):
                continue
            kept_old.append((lcm_ij, i, j))
        pairs[:] = kept_old + survivors
        basis.append((monic, mark))

    for g in sorted(gens, key=lambda p: key(leading_exponent(p, order))):
        add_poly(dict(g.terms))

    while pairs:
        pairs.sort(key=lambda p: (sum(p[0]), p[0]), reverse=True)
        lcm_ij, i, j = pairs.pop()
        fi, mi = basis[i]
        fj, mj = basis[j]
        s = {}
        shift_i = _exp_sub(lcm_ij, mi)
        shift_j = _exp_sub(lcm_ij, mj)
        for e, c in fi.items():
            t = tuple(a + b for a, b in zip(e, shift_i))
            s[t] = s.get(t, 0) + c
        for e, c in fj.items():
            t = tuple(a + b for a, b in zip(e, shift_j))
            v = s.get(t, 0) - c
            if v == 0:
                s.pop(t, None)
            else:
                s[t] = v
        rem = _reduce_marked(s, basis, key)
        if rem:
            add_poly(rem)

    return _reduce_basis(basis, order, ring)


def _reduce_marked(work, basis, key):
    """Reduce a term dict by marked monic basis elements, largest term first."""
    work = dict(work)
    result = {}
    while work:
        u = max(work, key=key)
        cu = work.pop(u)
        hit = None
        for gterms, m in basis:
            if _divides(m, u):
                hit = (gterms, m)
                break
        if hit is None:
            result[u] = result.get(u, 0) + cu
            continue
        gterms, m = hit
        shift = _exp_sub(u, m)
        for e, c in gterms.items():
            if e == m:
                continue
            t = tuple(a + b for a, b in zip(e, shift))
            s = work.get(t, 0) - cu * c
            if s == 0:
                work.pop(t, None)
            else:
                work[t] = s
    return result


def _reduce_basis(basis, order, ring):
    """Minimalize and tail-reduce a marked basis into reduced canonical form."""
    # minimalize: drop elements whose mark is divisible by another mark
    minimal = []
    for idx, (terms, m) in enumerate(basis):
        if any(
            _divides(m2, m) and (j < idx or m2 != m)
            for j, (_, m2) in enumerate(basis)
            if j != idx
        ):
            continue
        minimal.append((terms, m))
    # tail-reduce each element by the others
    reduced = []
    for idx, (terms, m) in enumerate(minimal):
        others = [(m2, t2) for j, (t2, m2) in enumerate(minimal) if j != idx]
        tail = {e: c for e, c in terms.items() if e != m}
        rem = _reduce_by_terms(tail, others, order.key)
        rem[m] = mpq(1)
        reduced.append((Polynomial(rem, ring), m))
    reduced.sort(key=lambda gm: _drl_key(gm[1]))
    return MarkedReducedGB(tuple(reduced), order, ring)


def _reduce_by_terms(work, marked, key):
    work = dict(work)
    result = {}
    while work:
        u = max(work, key=key)
        cu = work.pop(u)
        hit = None
        for m, gterms in marked:
            if _divides(m, u):
                hit = (m, gterms)
                break
        if hit is None:
            result[u] = result.get(u, 0) + cu
            continue
        m, gterms = hit
        shift = _exp_sub(u, m)
        for e, c in gterms.items():
            if e == m:
                continue
            t = tuple(a + b for a, b in zip(e, shift))
            s = work.get(t, 0) - cu * c
            if s == 0:
                work.pop(t, None)
            else:
                work[t] = s
    return result


# ---------------------------------------------------------------------------
# Initial ideals and cones of marked bases


def weight_in_cone(gb, w):
    """True iff w lies in the closed Groebner cone of the marked basis."""
    for g, m in gb.elements:
        wm = vec_dot(w, m)
        for e in g.terms:
            if vec_dot(w, e) < wm:
                return False
    return True


def initial_ideal_gens(gb, w):
    """{in_w(g)} for g in the basis; requires w in the basis' Groebner cone."""
    if not weight_in_cone(gb, w):
        raise ValueError("weight vector outside the Groebner cone of the basis")
    return [initial_form(g, w) for g, _ in gb.elements]


def initial_marked_gb(gb, w):
    """Marked reduced GB of in_w(I) obtained by taking w-initial forms."""
    elements = []
    for g, m in gb.elements:
        h = initial_form(g, w)
        assert m in h.terms
        elements.append((h, m))
    return MarkedReducedGB(tuple(sorted(elements, key=lambda gm: _drl_key(gm[1]))),
                           gb.order, gb.ring)


# ---------------------------------------------------------------------------
# Saturation and monomial containment


def _permute_poly(f, perm, ring):
    """Apply an index permutation to the variables (exponent positions)."""
    out = {}
    for e, c in f.terms.items():
        e2 = [0] * len(e)
        for i, x in enumerate(e):
            e2[perm[i]] = x
        out[tuple(e2)] = c
    return Polynomial(out, ring)


def _saturate_one_variable(gens, ring, i):
    """(I : x_i^inf) for homogeneous I, via degrevlex with x_i last."""
    n = ring.n
    # permutation sending variable i to the last position
    perm = list(range(n))
    perm.pop(i)
    perm.append(i)
    inv = [0] * n
    for pos, var in enumerate(perm):
        inv[var] = pos
    permuted = [_permute_poly(g, inv, ring) for g in gens]
    gb = buchberger(permuted, DEGREVLEX, ring=ring)
    out = []
    for g, _ in gb.elements:
        k = min(e[n - 1] for e in g.terms)
        if k > 0:
            g = Polynomial({e[: n - 1] + (e[n - 1] - k,): c for e, c in g.terms.items()}, ring)
        out.append(_permute_poly(g, perm, ring))
    return out


def saturate_by_variable_product(ideal):
    """(I : (x_1...x_n)^inf).

    Homogeneous ideals use iterated per-variable saturation via degrevlex
    bases with the variable placed last; other ideals use a single
    auxiliary variable t with t*x_1*...*x_n - 1 and an elimination order.
    """
    ring = ideal.ring
    n = ring.n
    gens = list(ideal.generators)
    if not gens:
        return Ideal([], ring)
    if all(g.is_homogeneous() for g in gens):
        for i in range(n):
            gens = _saturate_one_variable(gens, ring, i)
        return Ideal(gens, ring)
    ring_t = ring.extended("t")
    lifted = [Polynomial({(0,) + e: c for e, c in g.terms.items()}, ring_t) for g in gens]
    prod = Polynomial.monomial((1,) * (n + 1), ring_t) - Polynomial.constant(1, ring_t)
    gb = buchberger(lifted + [prod], TermOrder("elim1"), ring=ring_t)
    out = []
    for g, _ in gb.elements:
        if all(e[0] == 0 for e in g.terms):
            out.append(Polynomial({e[1:]: c for e, c in g.terms.items()}, ring))
    return Ideal(out, ring)


def monomial_in_ideal(ideal):
    """Exponent of a monomial in I, or None if I is monomial-free."""
    sat = saturate_by_variable_product(ideal)
    sat_gb = sat.gb()
    if not sat_gb.is_unit():
        return None
    gb = ideal.gb()
    if gb.is_unit():
        return (0,) * ideal.ring.n
    n = ideal.ring.n
    k = 1
    while True:
        m = Polynomial.monomial((k,) * n, ideal.ring)
        if normal_form(m, gb).is_zero():
            return (k,) * n
        k += 1


def witness(ideal, w):
    """A polynomial f in I whose initial form is a monomial on relint C_w(I).

    Requires in_w(I) to contain a monomial.
    """
    gb = buchberger(ideal.generators, weight_order(w), ring=ideal.ring)
    init = Ideal([initial_form(g, w) for g, _ in gb.elements], ideal.ring)
    mono = monomial_in_ideal(init)
    if mono is None:
        raise ValueError("in_w(I) is monomial-free; no witness exists")
    xm = Polynomial.monomial(mono, ideal.ring)
    h = normal_form(xm, gb)
    return xm - h


# ---------------------------------------------------------------------------
# Lift (one step of the Groebner walk)


def lift(full_prev, initial_target, order=None):
    """Lift a GB of in_w(I) to the GB of I under the refined order.

    full_prev is a marked reduced GB of I with w in its cone; the lifted
    basis is {g - nf(g, full_prev)} with the markings of initial_target,
    auto-reduced.
    """
    ring = full_prev.ring
    lifted = []
    for g, m in initial_target.elements:
        h = g - normal_form(g, full_prev)
        if m not in h.terms:
            raise ValueError("lift failed: marked term vanished during lifting")
        lifted.append((dict(h.terms), m))
    # auto-reduce: tails reduced by the other elements' marks
    changed = True
    while changed:
        changed = False
        for idx in range(len(lifted)):
            terms, m = lifted[idx]
            others = [(m2, t2) for j, (t2, m2) in enumerate(lifted) if j != idx]
            cm = terms[m]
            tail = {e: c / cm for e, c in terms.items() if e != m}
            rem = _reduce_by_terms(tail, others, _drl_key)
            rem[m] = mpq(1)
            if rem != terms:
                lifted[idx] = (rem, m)
                changed = True
    for terms, m in lifted:
        for terms2, m2 in lifted:
            if m2 != m and any(_divides(m2, e) for e in terms if e != m):
                raise ValueError("lift failed reduction checks")
            if m2 != m and _divides(m2, m):
                raise ValueError("lift failed: markings not minimal")
    elements = tuple(
        sorted(((Polynomial(t, ring), m) for t, m in lifted), key=lambda gm: _drl_key(gm[1]))
    )
    return MarkedReducedGB(elements, order, ring)


# ---------------------------------------------------------------------------
# Dimension and homogeneity space


def krull_dimension(ideal):
    """Krull dimension of the quotient ring, or None for the unit ideal."""
    gb = ideal.gb()
    if gb.is_unit():
        return None
    n = ideal.ring.n
    supports = [frozenset(i for i, x in enumerate(m) if x) for m in gb.marks()]
    supports = [s for s in supports if s]
    # max subset of variables containing no lead-term support
    for size in range(n, -1, -1):
        for subset in itertools.combinations(range(n), size):
            sset = set(subset)
            if all(not s <= sset for s in supports):
                return size
    return 0


def homogeneity_space(ideal):
    """Primitive integer basis of {w : in_w(I) = I}."""
    gb = ideal.gb()
    rows = []
    for g, m in gb.elements:
        for e in g.terms:
            if e != m:
                rows.append(_exp_sub(e, m))
    if not rows:
        # every element is a single term; all weights are homogeneous
        return [tuple(1 if j == i else 0 for j in range(ideal.ring.n))
                for i in range(ideal.ring.n)]
    return kernel_basis(rows)
