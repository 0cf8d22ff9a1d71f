"""Variable-permutation groups for symmetry-reduced traversal."""

from __future__ import annotations

from dataclasses import dataclass

from .cones import Cone, cone
from .groebner import normal_form
from .poly import Polynomial


@dataclass(frozen=True)
class Permutation:
    """images[i] is the image of variable i."""

    images: tuple

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError("not a permutation of 0..n-1")

    def __len__(self):
        return len(self.images)

    def compose(self, other):
        """self after other."""
        return Permutation(tuple(self.images[j] for j in other.images))

    def is_identity(self):
        return all(i == j for i, j in enumerate(self.images))

    def apply_vector(self, v):
        out = [0] * len(v)
        for i, x in enumerate(v):
            out[self.images[i]] = x
        return tuple(out)

    def apply_polynomial(self, f):
        return Polynomial(
            {self.apply_vector(e): c for e, c in f.terms.items()}, f.ring
        )

    def apply_cone(self, c):
        return cone(
            [self.apply_vector(e) for e in c.equations],
            [self.apply_vector(a) for a in c.inequalities],
            c.ambient_dim,
        )


def identity(n):
    return Permutation(tuple(range(n)))


@dataclass(frozen=True)
class PermGroup:
    generators: tuple
    elements: tuple

    @property
    def order(self):
        return len(self.elements)

    def is_trivial(self):
        return len(self.elements) == 1


def close_group(gens, n=None):
    """Full closure of a set of permutations; tiny orders only."""
    gens = list(gens)
    if gens:
        n = len(gens[0])
        if any(len(g) != n for g in gens):
            raise ValueError("permutations of different lengths")
    elif n is None:
        n = 0
    if not gens:
        return trivial_group(n)
    seen = {identity(n).images: identity(n)}
    frontier = [identity(n)]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = g.compose(p)
                if q.images not in seen:
                    seen[q.images] = q
                    nxt.append(q)
        frontier = nxt
    elements = tuple(sorted(seen.values(), key=lambda p: p.images))
    return PermGroup(tuple(gens), elements)


def trivial_group(n):
    e = identity(n)
    return PermGroup((), (e,))


def check_ideal_invariance(ideal, group):
    """True iff every generator permutation maps the ideal into itself."""
    gb = ideal.gb()
    for sigma in group.generators:
        for f in ideal.generators:
            if not normal_form(sigma.apply_polynomial(f), gb).is_zero():
                return False
    return True


def canonical_orbit_representative(c, group):
    """Minimum of the cone's orbit under the canonical cone ordering."""
    if group is None or group.is_trivial():
        return c
    return min((sigma.apply_cone(c) for sigma in group.elements), key=Cone.key)


def cone_orbit(c, group):
    """Distinct images of a cone under the group."""
    if group is None or group.is_trivial():
        return [c]
    out = {}
    for sigma in group.elements:
        img = sigma.apply_cone(c)
        out[img.key()] = img
    return sorted(out.values(), key=Cone.key)


def parse_permutations(text):
    """Parse '{(6,5,4,3,2,1,0),(...)}' into a list of Permutation."""
    text = text.strip()
    if not (text.startswith("{") and text.endswith("}")):
        raise ValueError("symmetry specification must be wrapped in braces")
    inner = text[1:-1].strip()
    perms = []
    depth = 0
    current = ""
    for ch in inner:
        if ch == "(":
            depth += 1
            current = ""
        elif ch == ")":
            depth -= 1
            perms.append(Permutation(tuple(int(x) for x in current.split(","))))
        elif depth == 1:
            current += ch
    return perms


def format_permutations(perms):
    return "{" + ",".join("(" + ",".join(map(str, p.images)) + ")" for p in perms) + "}"
