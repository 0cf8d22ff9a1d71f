"""Exact rational and integer linear algebra.

Everything here works on plain tuples of Python ints (arbitrary precision)
or gmpy2 rationals.  Vectors are immutable tuples so they can be hashed and
shared freely.
"""

from __future__ import annotations

from math import gcd

from gmpy2 import mpq

IntVector = tuple  # tuple of int


def vec_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def vec_scale(c, a):
    return tuple(c * x for x in a)


def vec_dot(a, b):
    s = 0
    for x, y in zip(a, b):
        s += x * y
    return s


def is_zero_vector(v):
    return all(x == 0 for x in v)


def primitive(v):
    """Divide an integer vector by the gcd of its entries; direction kept."""
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    if g == 1:
        return tuple(v)
    return tuple(x // g for x in v)


def clear_denominators(v):
    """Scale a rational vector by a positive rational into a primitive integer vector."""
    lcm = 1
    for x in v:
        q = mpq(x)
        d = int(q.denominator)
        lcm = lcm * d // gcd(lcm, d)
    ints = tuple(int(mpq(x) * lcm) for x in v)
    if is_zero_vector(ints):
        return ints
    return primitive(ints)


def rref(rows):
    """Reduced row echelon form over the rationals.

    Returns (list of rows as tuples of mpq, list of pivot column indices).
    Zero rows are dropped.
    """
    m = [list(map(mpq, r)) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(m)):
            if m[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return [tuple(row) for row in m[:r]], pivots


def rank(rows):
    """Rank of a rational matrix."""
    reduced, _ = rref(rows)
    return len(reduced)


def kernel_basis(rows):
    """Primitive integer basis of the null space of a rational matrix.

    The basis is derived from the reduced row echelon form: one vector per
    free column, in increasing column order, each scaled to primitive
    integer form with positive first nonzero entry.
    """
    if not rows:
        return []
    ncols = len(rows[0])
    reduced, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [mpq(0)] * ncols
        v[fc] = mpq(1)
        for i, pc in enumerate(pivots):
            v[pc] = -reduced[i][fc]
        w = clear_denominators(v)
        for x in w:
            if x != 0:
                if x < 0:
                    w = tuple(-y for y in w)
                break
        basis.append(w)
    return basis


def row_echelon_int(rows):
    """Canonical integer echelon form of the row space of an integer matrix.

    Rows are the rational RREF rows cleared to primitive integer vectors
    with positive pivot entries; this is a canonical basis of the row space.
    """
    reduced, _ = rref(rows)
    return [clear_denominators(r) for r in reduced]


def reduce_mod_rowspace(v, echelon_rows, pivots=None):
    """Reduce an integer vector modulo the row space spanned by RREF-derived rows.

    `echelon_rows` must come from row_echelon_int (one pivot per row).  The
    result has zero entries in all pivot columns, cleared back to integers.
    Returns the zero tuple when v lies in the row space.
    """
    if not echelon_rows:
        return tuple(v)
    n = len(v)
    if pivots is None:
        pivots = []
        for row in echelon_rows:
            for c in range(n):
                if row[c] != 0:
                    pivots.append(c)
                    break
    w = list(map(mpq, v))
    for row, pc in zip(echelon_rows, pivots):
        if w[pc] != 0:
            f = w[pc] / row[pc]
            w = [x - f * y for x, y in zip(w, row)]
    ints = clear_denominators(w)
    return ints


def span_rank(vectors):
    """Rank of the span of a list of integer vectors."""
    return rank(list(vectors)) if vectors else 0
