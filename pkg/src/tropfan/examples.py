"""Constructors for the example ideals used by the test suite and the
experiment scripts."""

from __future__ import annotations

import itertools

from .groebner import Ideal
from .poly import Polynomial, RingDescriptor, homogenize, parse_polynomial
from .symmetry import Permutation


def _det3(entries, ring):
    """Determinant of a 3x3 matrix of polynomials."""
    s = Polynomial.zero(ring)
    for perm in itertools.permutations(range(3)):
        sign = 1
        for a in range(3):
            for b in range(a + 1, 3):
                if perm[a] > perm[b]:
                    sign = -sign
        t = Polynomial.constant(sign, ring)
        for a in range(3):
            t = t * entries[a][perm[a]]
        s = s + t
    return s


def hankel_3minors():
    """3x3 minors of the generic 4x4 Hankel matrix in Q[a..g].

    Returns (ideal, reflection) where the reflection reverses the
    variables, the matrix's anti-diagonal symmetry.
    """
    ring = RingDescriptor(tuple("abcdefg"))
    var = [Polynomial.variable(i, ring) for i in range(7)]
    mat = [[var[i + j] for j in range(4)] for i in range(4)]
    gens = [
        _det3([[mat[r][c] for c in cols] for r in rows], ring)
        for rows in itertools.combinations(range(4), 3)
        for cols in itertools.combinations(range(4), 3)
    ]
    return Ideal(gens, ring), Permutation(tuple(range(6, -1, -1)))


def hankel_3minors_general(size):
    """3x3 minors of the generic size x size Hankel matrix.

    Returns (ideal, reflection); sizes above 4 are long-running stretch
    workloads, not part of the default test suite.
    """
    nvars = 2 * size - 1
    ring = RingDescriptor(tuple(f"x{i}" for i in range(nvars)))
    var = [Polynomial.variable(i, ring) for i in range(nvars)]
    mat = [[var[i + j] for j in range(size)] for i in range(size)]
    gens = [
        _det3([[mat[r][c] for c in cols] for r in rows], ring)
        for rows in itertools.combinations(range(size), 3)
        for cols in itertools.combinations(range(size), 3)
    ]
    return Ideal(gens, ring), Permutation(tuple(range(nvars - 1, -1, -1)))


def commuting_2x2():
    """Entries of the commutator of two generic 2x2 matrices in Q[a..h]."""
    ring = RingDescriptor(tuple("abcdefgh"))
    gens = [
        parse_polynomial(s, ring)
        for s in (
            "c*f-b*g",
            "a*g+c*h-c*e-d*g",
            "b*e+d*f-a*f-b*h",
            "b*g-c*f",
        )
    ]
    return Ideal(gens, ring)


def symmetric_3minors():
    """3x3 minors of the generic symmetric 4x4 matrix, with the group of
    simultaneous row/column permutations.

    Returns (ideal, generator permutations of the induced S4 action).
    """
    pairs = [(i, j) for i in range(4) for j in range(i, 4)]
    ring = RingDescriptor(tuple(f"x{i}{j}" for i, j in pairs))
    idx = {p: k for k, p in enumerate(pairs)}
    var = {}
    for k, (i, j) in enumerate(pairs):
        var[(i, j)] = var[(j, i)] = Polynomial.variable(k, ring)
    mat = [[var[(i, j)] for j in range(4)] for i in range(4)]
    gens = [
        _det3([[mat[r][c] for c in cols] for r in rows], ring)
        for rows in itertools.combinations(range(4), 3)
        for cols in itertools.combinations(range(4), 3)
    ]

    def induced(sigma):
        images = [0] * len(pairs)
        for k, (i, j) in enumerate(pairs):
            a, b = sigma[i], sigma[j]
            images[k] = idx[(min(a, b), max(a, b))]
        return Permutation(tuple(images))

    return Ideal(gens, ring), [induced((1, 0, 2, 3)), induced((1, 2, 3, 0))]


def parametric_curve_ideal(p):
    """Homogenized ideal of the curve z -> ((z+1)^(p+2), (z-1)^p, z)."""
    ring = RingDescriptor(("x", "y", "z"))
    f1 = parse_polynomial(f"x-(z+1)^{p + 2}", ring)
    f2 = parse_polynomial(f"y-(z-1)^{p}", ring)
    ring_h = ring.extended()
    gens = [homogenize(g, ring_h) for g in Ideal([f1, f2], ring).gb().polynomials()]
    return Ideal(gens, ring_h)


def linear_example():
    """The two affine linear forms whose prevariety is three rays."""
    ring = RingDescriptor(("x", "y", "z"))
    return Ideal(
        [parse_polynomial("x+y+z+1", ring), parse_polynomial("x+y+2*z", ring)],
        ring,
    )


def linear_example_homogenized():
    ideal = linear_example()
    ring_h = ideal.ring.extended()
    gens = [homogenize(g, ring_h) for g in ideal.gb().polynomials()]
    return Ideal(gens, ring_h)


def universal_gb_not_tropical_basis():
    """A universal Groebner basis of the intersection of <x+y,z>, <x+z,y>,
    <y+z,x> that is not a tropical basis: the ideal contains x*y*z."""
    ring = RingDescriptor(("x", "y", "z"))
    gens = [
        parse_polynomial(s, ring)
        for s in ("x+y+z", "x^2*y+x*y^2", "y^2*z+y*z^2", "x^2*z+x*z^2")
    ]
    return Ideal(gens, ring)
