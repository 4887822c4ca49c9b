from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import GF, Matrix
from sympy.polys.matrices import DomainMatrix

from altrestrict.gfp_linalg import GFpMatrix, fixed_subspace, nullspace, rank, rref, span_contains


def _sympy_rank(rows, p):
    if not rows or not rows[0]:
        return 0
    return DomainMatrix.from_Matrix(Matrix(rows)).convert_to(GF(p)).rank()


def test_identity_rank():
    m = GFpMatrix.identity(5, 2)
    assert rank(m) == 5
    assert nullspace(m).rows == 0


def test_zero_matrix():
    m = GFpMatrix.zeros(3, 4, 3)
    assert rank(m) == 0
    assert nullspace(m).rows == 4


def test_hand_elimination_gf3():
    m = GFpMatrix.from_rows([[1, 1], [2, 2]], 3)
    assert rank(m) == 1
    assert nullspace(m).tolist() == [[2, 1]]  # a multiple of (1, 2)
    assert span_contains(nullspace(m), (1, 2))


def test_entries_are_reduced():
    m = GFpMatrix.from_rows([[5, -1]], 3)
    assert m.tolist() == [[2, 2]]
    with pytest.raises(ValueError):
        GFpMatrix.from_rows([[1], [1, 2]], 3)


def test_shape_and_field_checks():
    a = GFpMatrix.identity(2, 3)
    with pytest.raises(ValueError):
        a @ GFpMatrix.identity(3, 3)
    with pytest.raises(ValueError):
        a - GFpMatrix.identity(2, 5)


def test_fixed_subspace_identity_and_cycle():
    assert fixed_subspace([GFpMatrix.identity(4, 3)]).rows == 4
    cycle = GFpMatrix.from_permutation([1, 2, 3, 4, 0], 2)
    fixed = fixed_subspace([cycle])
    assert fixed.tolist() == [[1, 1, 1, 1, 1]]


def test_fixed_subspace_orbit_count():
    # (0 1)(2 3) and (2 3)(4 5) on six points: orbits {0,1}, {2,3}, {4,5}
    a = GFpMatrix.from_permutation([1, 0, 3, 2, 4, 5], 3)
    b = GFpMatrix.from_permutation([0, 1, 3, 2, 5, 4], 3)
    assert fixed_subspace([a, b]).rows == 3


def test_fixed_subspace_rejects_mismatch():
    with pytest.raises(ValueError):
        fixed_subspace([GFpMatrix.identity(2, 2), GFpMatrix.identity(3, 2)])
    with pytest.raises(ValueError):
        fixed_subspace([])
    assert fixed_subspace([], dim=3, p=5).rows == 3


matrices = st.tuples(
    st.sampled_from([2, 3, 5, 7]),
    st.integers(min_value=1, max_value=9),
    st.integers(min_value=1, max_value=9),
).flatmap(
    lambda t: st.tuples(
        st.just(t[0]),
        st.lists(
            st.lists(st.integers(min_value=0, max_value=t[0] - 1), min_size=t[2], max_size=t[2]),
            min_size=t[1],
            max_size=t[1],
        ),
    )
)


@settings(max_examples=200, deadline=None)
@given(matrices)
def test_rank_nullity_and_kernel(data):
    p, rows = data
    m = GFpMatrix.from_rows(rows, p)
    null = nullspace(m)
    assert rank(m) + null.rows == m.cols
    assert rank(m) == _sympy_rank(rows, p)
    if null.rows:
        assert not ((m.entries @ null.entries.T) % p).any()
        assert rank(null) == null.rows


@settings(max_examples=100, deadline=None)
@given(matrices)
def test_rref_is_reduced(data):
    p, rows = data
    reduced, pivots = rref(GFpMatrix.from_rows(rows, p))
    for i, c in enumerate(pivots):
        column = reduced.entries[:, c]
        assert column[i] == 1 and int(column.sum()) % p == 1 and np.count_nonzero(column) == 1
    assert pivots == sorted(pivots)


@settings(max_examples=50, deadline=None)
@given(st.permutations(range(7)), st.permutations(range(7)), st.sampled_from([2, 3]))
def test_fixed_subspace_order_and_redundancy(g, h, p):
    a = GFpMatrix.from_permutation(g, p)
    b = GFpMatrix.from_permutation(h, p)
    base = fixed_subspace([a, b])
    # reduced echelon forms are unique, so the basis itself is order independent
    assert base == fixed_subspace([b, a])
    again = fixed_subspace([a, b, a @ b, b @ b])
    assert again.rows == base.rows
    assert all(span_contains(base, v) for v in again.tolist())
