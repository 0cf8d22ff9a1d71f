"""Exact polyhedral kernel: canonical cones, double description, facets,
relative interior points, fans, common refinement, f-vectors."""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import (
    is_zero_vector,
    primitive,
    reduce_mod_rowspace,
    row_echelon_int,
    span_rank,
    vec_dot,
    vec_scale,
    vec_sub,
)


def _dd_generators(equations, inequalities, n):
    """Double description: lineality basis and extreme rays of
    {w : E w = 0, A w >= 0}, by incremental constraint insertion."""
    lin = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    rays = []
    history = []      # processed inequality vectors (for adjacency zero-sets)
    ray_zeros = []    # per ray: set of history indices where it vanishes

    def insert(a, equality):
        nonlocal lin, rays, ray_zeros
        vals_lin = [vec_dot(a, l) for l in lin]
        pivot = next((i for i, v in enumerate(vals_lin) if v != 0), None)
        if pivot is not None:
            l0 = lin[pivot]
            v0 = vals_lin[pivot]
            new_lin = []
            for i, l in enumerate(lin):
                if i == pivot:
                    continue
                if vals_lin[i] == 0:
                    new_lin.append(l)
                else:
                    new_lin.append(primitive(vec_sub(vec_scale(v0, l), vec_scale(vals_lin[i], l0))))
            new_rays = []
            new_zeros = []
            for r, z in zip(rays, ray_zeros):
                vr = vec_dot(a, r)
                if vr == 0:
                    new_rays.append(r)
                    new_zeros.append(z)
                else:
                    rr = primitive(vec_sub(vec_scale(abs(v0), r), vec_scale(vr * (1 if v0 > 0 else -1), l0)))
                    new_rays.append(rr)
                    new_zeros.append(z)
            lin = new_lin
            rays = new_rays
            ray_zeros = new_zeros
            history.append(a)
            for z in ray_zeros:
                z.add(len(history) - 1)
            if not equality:
                ln = l0 if v0 > 0 else vec_scale(-1, l0)
                # the split-off lineality direction vanishes on every
                # previously processed constraint but not on this one
                rays.append(primitive(ln))
                ray_zeros.append(set(range(len(history) - 1)))
            return
        # a vanishes on the lineality space; split the rays
        history.append(a)
        idx = len(history) - 1
        plus, zero, minus = [], [], []
        vals = [vec_dot(a, r) for r in rays]
        for i, v in enumerate(vals):
            (plus if v > 0 else zero if v == 0 else minus).append(i)
        keep = zero + (plus if not equality else [])
        new_rays = [rays[i] for i in keep]
        new_zeros = []
        for i in keep:
            z = set(ray_zeros[i])
            if vals[i] == 0:
                z.add(idx)
            new_zeros.append(z)
        for p in plus:
            for q in minus:
                zp, zq = ray_zeros[p], ray_zeros[q]
                common = zp & zq
                adjacent = True
                for k, zk in enumerate(ray_zeros):
                    if k != p and k != q and common <= zk:
                        adjacent = False
                        break
                if not adjacent and len(rays) > 2:
                    continue
                r = vec_sub(vec_scale(vals[p], rays[q]), vec_scale(vals[q], rays[p]))
                if is_zero_vector(r):
                    continue
                r = primitive(r)
                new_rays.append(r)
                new_zeros.append(common | {idx})
        rays = new_rays
        ray_zeros = new_zeros
        # drop duplicate rays
        seen = {}
        for r, z in zip(rays, ray_zeros):
            if r in seen:
                seen[r] |= z
            else:
                seen[r] = set(z)
        rays = list(seen)
        ray_zeros = [seen[r] for r in rays]

    for e in equations:
        if not is_zero_vector(e):
            insert(tuple(e), equality=True)
    for a in inequalities:
        if not is_zero_vector(a):
            insert(tuple(a), equality=False)
    return lin, rays


class Cone:
    """Polyhedral cone {w : E w = 0, A w >= 0} in canonical dual form.

    Equality of cones is structural equality of the canonical equations and
    inequalities; construct only through the `cone` function.
    """

    __slots__ = ("ambient_dim", "equations", "inequalities",
                 "_lin", "_rays", "_hash", "_eq_pivots")

    def __init__(self, ambient_dim, equations, inequalities, lin, rays):
        self.ambient_dim = ambient_dim
        self.equations = equations
        self.inequalities = inequalities
        self._lin = lin
        self._rays = rays
        self._hash = None
        self._eq_pivots = None

    def __eq__(self, other):
        return (
            isinstance(other, Cone)
            and self.ambient_dim == other.ambient_dim
            and self.equations == other.equations
            and self.inequalities == other.inequalities
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ambient_dim, self.equations, self.inequalities))
        return self._hash

    def key(self):
        return (self.ambient_dim, self.equations, self.inequalities)

    def __lt__(self, other):
        return self.key() < other.key()

    @property
    def lineality_dim(self):
        return len(self._lin)

    @property
    def dim(self):
        gens = list(self._lin) + list(self._rays)
        return span_rank(gens) if gens else 0

    def lineality_basis(self):
        return list(self._lin)

    def extreme_rays(self):
        """Primitive ray generators, canonical modulo the lineality space."""
        if not self._rays:
            return []
        ech = row_echelon_int(self._lin) if self._lin else []
        out = []
        for r in self._rays:
            rep = reduce_mod_rowspace(r, ech) if ech else tuple(r)
            if is_zero_vector(rep):
                continue
            out.append(primitive(rep))
        return sorted(set(out))

    def relative_interior_point(self):
        """Deterministic integer point strictly inside all inequalities."""
        rays = self.extreme_rays()
        if not rays:
            return (0,) * self.ambient_dim
        p = [0] * self.ambient_dim
        for r in rays:
            for i, x in enumerate(r):
                p[i] += x
        return tuple(p)

    def contains(self, w):
        return all(vec_dot(e, w) == 0 for e in self.equations) and all(
            vec_dot(a, w) >= 0 for a in self.inequalities
        )

    def contains_cone(self, other):
        return all(self.contains(g) for g in other._lin) and \
            all(self.contains(vec_scale(-1, g)) for g in other._lin) and \
            all(self.contains(r) for r in other._rays)

    def facets(self):
        """One facet per irredundant inequality, in canonical form."""
        out = []
        for i, a in enumerate(self.inequalities):
            out.append(
                cone(
                    self.equations + (a,),
                    self.inequalities[:i] + self.inequalities[i + 1:],
                    self.ambient_dim,
                )
            )
        return out

    def intersect(self, other):
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        return cone(
            self.equations + other.equations,
            self.inequalities + other.inequalities,
            self.ambient_dim,
        )

    def __repr__(self):
        return f"Cone(dim={self.dim}, eq={list(self.equations)}, ineq={list(self.inequalities)})"


def cone(equations, inequalities, ambient_dim):
    """Canonicalize a cone given by integer equations and inequalities.

    Implicit equalities are promoted, redundant inequalities removed,
    equations put in integer echelon form, inequalities reduced modulo the
    equation space, made primitive and sorted.
    """
    equations = [tuple(e) for e in equations if not is_zero_vector(e)]
    inequalities = [tuple(a) for a in inequalities if not is_zero_vector(a)]
    lin, rays = _dd_generators(equations, inequalities, ambient_dim)
    # implicit equalities: inequalities vanishing on every generator
    eqs = list(equations)
    strict = []
    for a in inequalities:
        if all(vec_dot(a, l) == 0 for l in lin) and all(vec_dot(a, r) == 0 for r in rays):
            eqs.append(a)
        else:
            strict.append(a)
    ech = row_echelon_int(eqs)
    # reduce inequalities modulo the equation space, dedupe, keep facet-defining
    cone_dim = span_rank(lin + rays) if (lin or rays) else 0
    seen = set()
    reduced = []
    for a in strict:
        ra = reduce_mod_rowspace(a, ech) if ech else primitive(a)
        if is_zero_vector(ra) or ra in seen:
            continue
        on_facet = [r for r in rays if vec_dot(a, r) == 0]
        if span_rank(lin + on_facet) != cone_dim - 1:
            continue
        seen.add(ra)
        reduced.append(ra)
    reduced.sort()
    return Cone(ambient_dim, tuple(ech), tuple(reduced), lin, rays)


def full_space(ambient_dim):
    return cone([], [], ambient_dim)


# ---------------------------------------------------------------------------
# Fans


class Fan:
    """A representation of a fan: a set of canonical cones (kept maximal)."""

    def __init__(self, ambient_dim, cones=()):
        self.ambient_dim = ambient_dim
        self._cones = {}
        for c in cones:
            self.add(c)

    def add(self, c):
        if c.ambient_dim != self.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        if c.key() in self._cones:
            return
        # keep only maximal cones of the representation
        for other in list(self._cones.values()):
            if other.contains_cone(c):
                return
        for k, other in list(self._cones.items()):
            if c.contains_cone(other):
                del self._cones[k]
        self._cones[c.key()] = c

    @property
    def cones(self):
        return sorted(self._cones.values(), key=Cone.key)

    def __len__(self):
        return len(self._cones)

    def member(self, w):
        return any(c.contains(w) for c in self._cones.values())

    def is_empty(self):
        return not self._cones


def common_refinement(f1, f2):
    """All pairwise intersections, canonical and deduped."""
    if f1.ambient_dim != f2.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    out = Fan(f1.ambient_dim)
    for c1 in f1.cones:
        for c2 in f2.cones:
            out.add(c1.intersect(c2))
    return out


@dataclass(frozen=True)
class FanStats:
    ambient: int
    homog_dim: int
    dim: int
    simplicial: bool
    f_vector: tuple
    faces_by_dim: dict


def fan_statistics(fan, lineality_dim):
    """Face counts of a pure fan given by its maximal cones.

    Faces are enumerated by recursive facet computation and counted by
    dimension above the lineality space, which itself is excluded.
    """
    maximal = fan.cones
    dim = max((c.dim for c in maximal), default=lineality_dim)
    faces = {}
    stack = list(maximal)
    seen = set()
    while stack:
        c = stack.pop()
        if c.key() in seen:
            continue
        seen.add(c.key())
        faces.setdefault(c.dim, set()).add(c)
        if c.dim > lineality_dim:
            stack.extend(c.facets())
    f_vector = tuple(
        len(faces.get(d, ())) for d in range(lineality_dim + 1, dim + 1)
    )
    simplicial = all(
        len(c.extreme_rays()) == c.dim - c.lineality_dim for c in maximal
    )
    faces_by_dim = {d: sorted(faces.get(d, ()), key=Cone.key)
                    for d in range(lineality_dim + 1, dim + 1)}
    return FanStats(fan.ambient_dim, lineality_dim, dim, simplicial, f_vector, faces_by_dim)


# ---------------------------------------------------------------------------
# Unit-first-coordinate slice (Puiseux restriction)


@dataclass(frozen=True)
class SlicePolyhedron:
    """Affine polyhedron in the last n-1 coordinates: rows are (constant, coeffs)."""

    equations: tuple
    inequalities: tuple


def restrict_to_unit_first_coordinate(fan):
    """The {w_0 = 1} slice of each cone, dropping empty slices."""
    if fan.ambient_dim < 1:
        raise ValueError("ambient dimension must be at least 1")
    out = []
    for c in fan.cones:
        northern = any(l[0] != 0 for l in c.lineality_basis()) or any(
            r[0] > 0 for r in c._rays
        )
        if not northern:
            # cone meets {w0 = 1} iff some generator has positive first coord
            continue
        # substituting w0 = 1 turns the first coefficient into the constant
        out.append(SlicePolyhedron(tuple(c.equations), tuple(c.inequalities)))
    return out
