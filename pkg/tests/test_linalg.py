import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from auslab.linalg import (
    DimensionMismatch,
    NotASubspacePair,
    PrimeField,
    ZeroInverse,
    echelon,
    ff_inv,
    intersection,
    kron,
    left_nullspace,
    matmul,
    nullspace,
    quotient_basis,
    rank,
    rref,
    solve,
    solve_left,
    span_sum,
)

PRIMES = [2, 3, 5]


def matrices(p, max_rows=5, max_cols=5):
    return st.tuples(st.integers(0, max_rows), st.integers(1, max_cols)).flatmap(
        lambda rc: st.lists(
            st.integers(0, p - 1), min_size=rc[0] * rc[1], max_size=rc[0] * rc[1]
        ).map(lambda xs: np.array(xs, dtype=np.int64).reshape(rc))
    )


def brute_rank(A, p):
    """log_p of the number of distinct vectors in the row space, by enumeration."""
    rows, cols = A.shape
    if rows == 0:
        return 0
    seen = set()
    for c in itertools.product(range(p), repeat=rows):
        seen.add(tuple((np.array(c) @ A) % p))
    return round(np.log(len(seen)) / np.log(p))


@pytest.mark.parametrize("p", PRIMES)
def test_inverse_table(p):
    F = PrimeField(p)
    for a in range(1, p):
        assert (a * ff_inv(a, F)) % p == 1
    with pytest.raises(ZeroInverse):
        ff_inv(0, F)


def test_non_prime_field_rejected():
    with pytest.raises(ValueError):
        PrimeField(4)


def test_matmul_shape_check():
    F = PrimeField(2)
    with pytest.raises(DimensionMismatch):
        matmul(np.zeros((2, 3), dtype=np.int64), np.zeros((2, 3), dtype=np.int64), F)


@pytest.mark.parametrize("p", PRIMES)
@settings(max_examples=120, deadline=None)
@given(data=st.data())
def test_rref_idempotent_and_row_equivalent(p, data):
    F = PrimeField(p)
    A = data.draw(matrices(p))
    R, piv, r = rref(A, F)
    R2, piv2, r2 = rref(R, F)
    assert np.array_equal(R, R2) and piv == piv2 and r == r2
    # same row space: each spans the other
    if r:
        assert rank(np.vstack([R[:r], A]), F) == r
    for k, c in enumerate(piv):
        assert R[k, c] == 1 and not R[:k, c].any() and not R[k + 1 :, c].any()
    assert r == brute_rank(A, p)


@pytest.mark.parametrize("p", PRIMES)
@settings(max_examples=120, deadline=None)
@given(data=st.data())
def test_rank_nullity(p, data):
    F = PrimeField(p)
    A = data.draw(matrices(p))
    N = nullspace(A, F)
    L = left_nullspace(A, F)
    rows, cols = A.shape
    assert rank(A, F) + N.shape[0] == cols
    assert rank(A, F) + L.shape[0] == rows
    if N.size:
        assert not matmul(A, N.T, F).any()
        assert rank(N, F) == N.shape[0]
    if L.size:
        assert not matmul(L, A, F).any()


@pytest.mark.parametrize("p", PRIMES)
@settings(max_examples=120, deadline=None)
@given(data=st.data())
def test_grassmann_formula(p, data):
    F = PrimeField(p)
    n = data.draw(st.integers(1, 5))
    U = np.array(data.draw(st.lists(st.integers(0, p - 1), min_size=n * 3, max_size=n * 3)), dtype=np.int64).reshape(3, n)
    W = np.array(data.draw(st.lists(st.integers(0, p - 1), min_size=n * 3, max_size=n * 3)), dtype=np.int64).reshape(3, n)
    S = span_sum(U, W, F)
    I = intersection(U, W, F)
    assert rank(S, F) + (rank(I, F) if I.size else 0) == rank(U, F) + rank(W, F)
    if I.size:
        assert rank(np.vstack([I, U]), F) == rank(U, F)
        assert rank(np.vstack([I, W]), F) == rank(W, F)


@pytest.mark.parametrize("p", PRIMES)
@settings(max_examples=100, deadline=None)
@given(data=st.data())
def test_solve_round_trip(p, data):
    F = PrimeField(p)
    A = data.draw(matrices(p, 4, 4))
    if A.shape[0] == 0:
        return
    x = np.array(data.draw(st.lists(st.integers(0, p - 1), min_size=A.shape[1], max_size=A.shape[1])))
    b = matmul(A, x.reshape(-1, 1), F).ravel()
    y = solve(A, b, F)
    assert y is not None and np.array_equal(matmul(A, y.reshape(-1, 1), F).ravel(), b)
    X = solve_left(A, matmul(np.eye(A.shape[0], dtype=np.int64)[:1], A, F), F)
    assert X is not None


def test_solve_inconsistent():
    F = PrimeField(2)
    A = np.array([[1, 0], [1, 0]])
    assert solve(A, np.array([1, 0]), F) is None


def test_quotient_basis_complements():
    F = PrimeField(3)
    U = np.eye(3, dtype=np.int64)
    V = np.array([[1, 1, 0]])
    Q = quotient_basis(V, U, F)
    assert Q.shape[0] == 2 and rank(np.vstack([Q, V]), F) == 3
    with pytest.raises(NotASubspacePair):
        quotient_basis(U, V, F)


def test_echelon_drops_zero_rows():
    F = PrimeField(2)
    E, piv = echelon(np.array([[1, 1], [1, 1], [0, 0]]), F)
    assert E.shape == (1, 2) and piv == [0]


def test_kron_small():
    F = PrimeField(5)
    A = np.array([[1, 2], [3, 4]])
    B = np.array([[0, 1], [1, 0]])
    assert np.array_equal(kron(A, B, F), np.kron(A, B) % 5)


@pytest.mark.parametrize("a,p,inv", [(1, 5, 1), (2, 5, 3), (4, 7, 2)])
def test_inverse_examples(a, p, inv):
    assert ff_inv(a, PrimeField(p)) == inv


def test_rref_examples():
    F = PrimeField(2)
    assert rref(np.eye(2, dtype=np.int64), F)[1:] == ([0, 1], 2)
    assert rref(np.array([[1, 1], [1, 1]]), F)[2] == 1
    assert rref(np.zeros((3, 3), dtype=np.int64), F)[1:] == ([], 0)


def test_nullspace_examples():
    F = PrimeField(2)
    assert nullspace(np.array([[1, 1], [1, 1]]), F).tolist() == [[1, 1]]
    assert nullspace(np.eye(3, dtype=np.int64), F).shape[0] == 0
    assert nullspace(np.zeros((1, 3), dtype=np.int64), F).shape[0] == 3


def test_solve_examples():
    F = PrimeField(3)
    b = np.array([2, 0, 1])
    assert solve(np.eye(3, dtype=np.int64), b, F).tolist() == b.tolist()
    assert not solve(np.zeros((2, 2), dtype=np.int64), np.zeros(2, dtype=np.int64), F).any()
    with pytest.raises(DimensionMismatch):
        solve(np.eye(2, dtype=np.int64), np.zeros(3, dtype=np.int64), F)


@pytest.mark.parametrize("p", PRIMES)
@settings(max_examples=100, deadline=None)
@given(data=st.data())
def test_solve_absent_iff_pivot_in_rhs(p, data):
    F = PrimeField(p)
    A = data.draw(matrices(p, 4, 3).filter(lambda M: M.shape[0] > 0))
    b = np.array(data.draw(st.lists(st.integers(0, p - 1), min_size=A.shape[0], max_size=A.shape[0])))
    x = solve(A, b, F)
    _, piv, _ = rref(np.concatenate([A, b.reshape(-1, 1)], axis=1), F)
    assert (x is None) == (A.shape[1] in piv)
    if x is not None:
        assert np.array_equal(matmul(A, x.reshape(-1, 1), F).ravel(), b % p)


def test_subspace_examples():
    F = PrimeField(2)
    U = np.array([[1, 0]])
    V = np.array([[0, 1]])
    assert intersection(U, V, F).shape[0] == 0
    assert rank(span_sum(U, V, F), F) == 2
    W = np.array([[1, 1], [0, 1]])
    assert rank(intersection(W, W, F), F) == 2
    assert quotient_basis(W, W, F).shape[0] == 0


def test_kron_identity_factors():
    F = PrimeField(2)
    B = np.array([[1, 0, 1], [0, 1, 1]])
    one = np.eye(1, dtype=np.int64)
    assert np.array_equal(kron(one, B, F), B)
    assert np.array_equal(kron(B, one, F), B)
    A = np.array([[1, 1], [0, 1]])
    C = np.array([[0, 1], [1, 1]])
    K = kron(A, C, F)
    for i, j, k, l in itertools.product(range(2), repeat=4):
        assert K[2 * i + k, 2 * j + l] == (A[i, j] * C[k, l]) % 2
