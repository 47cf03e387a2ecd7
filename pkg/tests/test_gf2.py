from __future__ import annotations

import numpy as np
from hypothesis import given, settings, strategies as st

from a1stable.gf2 import (BitMatrix, BitVector, column_pivots, hstack, kernel_basis, rank, row_reduce,
                          solve, solve_matrix, vstack)


def naive_rank(a: np.ndarray) -> int:
    """Plain Gaussian elimination on a uint8 array, written independently of the packed code."""
    a = a.copy() % 2
    r = 0
    rows, cols = a.shape
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i, c]), None)
        if piv is None:
            continue
        a[[r, piv]] = a[[piv, r]]
        for i in range(rows):
            if i != r and a[i, c]:
                a[i] ^= a[r]
        r += 1
    return r


def test_identity_rank_and_pivots():
    _, r, piv = row_reduce(BitMatrix.identity(3))
    assert r == 3 and piv == [0, 1, 2]


def test_zero_rank():
    _, r, piv = row_reduce(BitMatrix(4, 5))
    assert r == 0 and piv == []


def test_seeded_rank_matches_naive_oracle():
    rng = np.random.default_rng(6)
    a = rng.integers(0, 2, (6, 9), dtype=np.uint8)
    assert rank(BitMatrix.from_dense(a)) == naive_rank(a)


def test_kernel_of_identity_is_empty():
    assert kernel_basis(BitMatrix.identity(5)).rows == 0


def test_kernel_of_zero_spans_everything():
    k = kernel_basis(BitMatrix(3, 4))
    assert k.rows == 4 and rank(k) == 4


def test_seeded_kernel():
    rng = np.random.default_rng(7)
    m = BitMatrix.from_dense(rng.integers(0, 2, (7, 10), dtype=np.uint8))
    k = kernel_basis(m)
    assert k.rows == 10 - rank(m)
    assert (m @ k.T).is_zero()


def test_solve_identity():
    b = BitVector.from_bits([1, 0, 1, 1])
    assert solve(BitMatrix.identity(4), b) == b


def test_solve_zero_matrix_inconsistent():
    assert solve(BitMatrix(3, 3), BitVector.from_bits([0, 1, 0])) is None


def test_construct_then_solve():
    rng = np.random.default_rng(8)
    a = rng.integers(0, 2, (8, 8), dtype=np.uint8)
    a[7] = a[0] ^ a[1]  # singular
    m = BitMatrix.from_dense(a)
    assert rank(m) < 8
    x0 = rng.integers(0, 2, 8, dtype=np.uint8)
    b = BitVector.from_bits((a @ x0) % 2)
    x = solve(m, b)
    assert x is not None
    assert np.array_equal((a @ x.to_array()) % 2, b.to_array())


def test_wide_matrix_crosses_word_boundary():
    rng = np.random.default_rng(9)
    a = rng.integers(0, 2, (40, 150), dtype=np.uint8)
    m = BitMatrix.from_dense(a)
    assert np.array_equal(m.to_dense(), a)
    assert rank(m) == naive_rank(a)
    assert (m @ kernel_basis(m).T).is_zero()


def test_stacking_and_pivots():
    a = BitMatrix.from_rows([[1, 0, 1], [0, 1, 1]])
    assert hstack([a, a]).shape == (2, 6)
    assert vstack([a, a]).shape == (4, 3)
    assert rank(vstack([a, a])) == 2
    assert column_pivots(a) == [0, 1]


def test_solve_matrix_rejects_row_mismatch():
    import pytest
    with pytest.raises(ValueError):
        solve_matrix(BitMatrix(2, 2), BitMatrix(3, 1))


matrices = st.tuples(st.integers(1, 12), st.integers(1, 80), st.integers(0, 2**32 - 1)).map(
    lambda t: np.random.default_rng(t[2]).integers(0, 2, (t[0], t[1]), dtype=np.uint8))


@settings(max_examples=60, deadline=None)
@given(matrices)
def test_rank_nullity_and_oracle(a):
    m = BitMatrix.from_dense(a)
    r = rank(m)
    assert r == naive_rank(a)
    assert kernel_basis(m).rows == a.shape[1] - r


@settings(max_examples=60, deadline=None)
@given(matrices, st.integers(0, 2**32 - 1))
def test_matmul_matches_numpy(a, seed):
    b = np.random.default_rng(seed).integers(0, 2, (a.shape[1], 5), dtype=np.uint8)
    got = (BitMatrix.from_dense(a) @ BitMatrix.from_dense(b)).to_dense()
    assert np.array_equal(got, (a.astype(int) @ b) % 2)


@settings(max_examples=40, deadline=None)
@given(matrices)
def test_transpose_involution(a):
    m = BitMatrix.from_dense(a)
    assert m.T.T == m
    assert rank(m.T) == rank(m)
