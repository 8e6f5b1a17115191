import numpy as np
import pytest

from auslab.algebra import (
    lemma23_triangular,
    local_rad_square_zero,
    lower_triangular,
    matrix_algebra,
    prime_field,
    product,
    truncated_polynomial,
)
from auslab.modules import direct_sum, free_module, hom_space, quotient, spin, zero_module
from auslab.triples import Triple, Tensor


def named(A, name):
    A.name = name
    return A


def base_corpus():
    """The eight base algebras of the transfer checks."""
    return [
        named(prime_field(2), "F2"),
        named(prime_field(3), "F3"),
        named(product(prime_field(2), prime_field(2)), "F2xF2"),
        named(matrix_algebra(2, 2), "M2F2"),
        named(truncated_polynomial(2, 2), "F2[x]/x2"),
        named(truncated_polynomial(2, 3), "F2[x]/x3"),
        named(truncated_polynomial(3, 2), "F3[x]/x2"),
        named(lower_triangular(prime_field(2), 2), "T2F2"),
    ]


def local2():
    return named(local_rad_square_zero(2), "local2")


def random_module(A, rng, max_rank=2, max_rels=2):
    """A random quotient of a small free module."""
    r = int(rng.integers(0, max_rank + 1))
    P = free_module(A, r)
    if r == 0:
        return zero_module(A)
    k = int(rng.integers(0, max_rels + 1))
    V = rng.integers(0, A.p, size=(k, P.mdim))
    E, _ = spin(P, V) if k else (np.zeros((0, P.mdim), dtype=np.int64), [])
    Q, _, _ = quotient(P, E)
    return Q


def random_hom(M, N, rng):
    H = hom_space(M, N)
    if H.shape[0] == 0:
        return np.zeros((M.mdim, N.mdim), dtype=np.int64)
    c = rng.integers(0, M.p, size=H.shape[0])
    return np.einsum("h,hab->ab", c, H) % M.p


def random_triple(tri, rng):
    """Random ``(X, Y)_f`` over a triangular algebra, biased towards flat ones half the time."""
    M = tri.M
    Y = random_module(tri.S, rng)
    t = Tensor.of(Y, M)
    if rng.integers(0, 2):
        # f: Y (x) M -> (Y (x) M) + P, the inclusion into a flat X
        P = free_module(tri.R, int(rng.integers(0, 2)))
        X = direct_sum(t.module, P) if P.mdim else t.module
        f = np.zeros((t.module.mdim, X.mdim), dtype=np.int64)
        f[:, : t.module.mdim] = np.eye(t.module.mdim, dtype=np.int64)
    else:
        X = random_module(tri.R, rng)
        f = random_hom(t.module, X, rng)
    return Triple(X, Y, f, M, t)


@pytest.fixture(scope="session")
def tri_T2F2():
    return lemma23_triangular(named(prime_field(2), "F2"), 2)


@pytest.fixture(scope="session")
def tri_T2trunc():
    return lemma23_triangular(named(truncated_polynomial(2, 2), "F2[x]/x2"), 2)
