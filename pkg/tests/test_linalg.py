import pytest
from hypothesis import given
from hypothesis import strategies as st

from tropfan.linalg import (
    kernel_basis,
    primitive,
    rank,
    reduce_mod_rowspace,
    row_echelon_int,
    vec_dot,
)

vectors = st.lists(st.integers(-20, 20), min_size=1, max_size=5)


def test_kernel_basis_line():
    assert kernel_basis([[1, -1]]) == [(1, 1)]


def test_kernel_basis_identity_empty():
    assert kernel_basis([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == []


def test_kernel_basis_hand_solved():
    assert kernel_basis([[1, 1, 1], [0, 1, 2]]) == [(1, -2, 1)]


def test_primitive():
    assert primitive((2, 4, 6)) == (1, 2, 3)
    assert primitive((-3, 0, 3)) == (-1, 0, 1)
    assert primitive((5, 4, 3, 2, 1, 0, 0)) == (5, 4, 3, 2, 1, 0, 0)


def test_primitive_rejects_zero():
    with pytest.raises(ValueError):
        primitive((0, 0))


def test_rank():
    assert rank([[0, 0], [0, 0]]) == 0
    assert rank([[1, 0], [0, 1]]) == 2
    assert rank([[1, 2], [2, 4]]) == 1


@given(st.lists(st.lists(st.integers(-10, 10), min_size=3, max_size=3),
                min_size=1, max_size=4))
def test_kernel_orthogonal_and_rank_nullity(rows):
    basis = kernel_basis(rows)
    for v in basis:
        assert all(vec_dot(row, v) == 0 for row in rows)
    assert rank(rows) + len(basis) == 3


@given(vectors)
def test_primitive_idempotent(v):
    if all(x == 0 for x in v):
        return
    p = primitive(tuple(v))
    assert primitive(p) == p


@given(st.lists(st.lists(st.integers(-10, 10), min_size=4, max_size=4),
                min_size=1, max_size=3),
       st.lists(st.integers(-10, 10), min_size=4, max_size=4))
def test_reduce_mod_rowspace_in_span_gives_zero(rows, v):
    ech = row_echelon_int(rows)
    r = reduce_mod_rowspace(tuple(v), ech)
    # reducing a second time changes nothing
    assert reduce_mod_rowspace(r, ech) == r
    # v - (multiple of r) lies in the row space: check via rank
    if any(x != 0 for x in r):
        assert rank(list(rows) + [r]) == rank(rows) + 1
