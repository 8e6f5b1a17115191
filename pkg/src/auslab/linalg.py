"""Dense exact linear algebra over prime fields.

Matrices are plain ``numpy`` int64 arrays whose entries are kept reduced
into ``[0, p)``; the field travels alongside as a :class:`PrimeField`.
Vectors are rows: a matrix ``A`` of shape ``(m, n)`` is the linear map
``v -> v @ A`` from ``F^m`` to ``F^n``.  Subspaces are represented by a
matrix whose rows span them, usually in reduced row echelon form.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

_INT64_LIMIT = 2**63 - 1


class ZeroInverse(ZeroDivisionError):
    pass


class DimensionMismatch(ValueError):
    pass


class NotASubspacePair(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class PrimeField:
    """The field F_p for a prime ``2 <= p <= 2**31 - 1``."""

    p: int

    def __post_init__(self):
        if not isinstance(self.p, (int, np.integer)) or not 2 <= self.p <= 2**31 - 1:
            raise ValueError(f"modulus out of range: {self.p!r}")
        if not is_prime(int(self.p)):
            raise ValueError(f"{self.p} is not prime")
        object.__setattr__(self, "p", int(self.p))

    def __repr__(self):
        return f"F_{self.p}"

    def inv(self, a: int) -> int:
        return ff_inv(a, self)

    def array(self, x) -> np.ndarray:
        return np.asarray(x, dtype=np.int64) % self.p

    def zeros(self, *shape) -> np.ndarray:
        return np.zeros(shape, dtype=np.int64)

    def eye(self, n: int) -> np.ndarray:
        return np.eye(n, dtype=np.int64)

    def random(self, rng: np.random.Generator, *shape) -> np.ndarray:
        return rng.integers(0, self.p, size=shape, dtype=np.int64)


def ff_inv(a: int, F: PrimeField) -> int:
    a = int(a) % F.p
    if a == 0:
        raise ZeroInverse(f"0 has no inverse in {F!r}")
    return pow(a, F.p - 2, F.p)


def matmul(A: np.ndarray, B: np.ndarray, F: PrimeField) -> np.ndarray:
    """``A @ B`` reduced mod p, falling back to Python ints on overflow risk."""
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    if A.ndim == 2 and B.ndim >= 1 and A.shape[1] != B.shape[0]:
        raise DimensionMismatch(f"cannot multiply {A.shape} by {B.shape}")
    inner = A.shape[-1] if A.ndim else 1
    if (F.p - 1) ** 2 * max(inner, 1) <= _INT64_LIMIT:
        return (A @ B) % F.p
    return ((A.astype(object) @ B.astype(object)) % F.p).astype(np.int64)


def _rref_inplace(R: np.ndarray, p: int) -> list[int]:
    rows, cols = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(R[r:, c])
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            R[[r, k]] = R[[k, r]]
        piv = int(R[r, c])
        if piv != 1:
            R[r, c:] = (R[r, c:] * pow(piv, p - 2, p)) % p
        col = R[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            R[hit, c:] = (R[hit, c:] - np.outer(col[hit], R[r, c:])) % p
        pivots.append(c)
        r += 1
    return pivots


def rref(A: np.ndarray, F: PrimeField) -> tuple[np.ndarray, list[int], int]:
    """Reduced row echelon form ``(R, pivots, rank)``; ``R`` keeps A's shape."""
    R = np.array(A, dtype=np.int64) % F.p
    if R.ndim != 2:
        raise DimensionMismatch("rref expects a 2-d array")
    pivots = _rref_inplace(R, F.p)
    return R, pivots, len(pivots)


def echelon(A: np.ndarray, F: PrimeField) -> tuple[np.ndarray, list[int]]:
    """Nonzero rows of the RREF of ``A`` together with their pivot columns."""
    A = np.asarray(A, dtype=np.int64)
    if A.ndim == 1:
        A = A.reshape(1, -1)
    if A.shape[0] == 0:
        return np.zeros((0, A.shape[1]), dtype=np.int64), []
    R, piv, rk = rref(A, F)
    return R[:rk], piv


def rank(A: np.ndarray, F: PrimeField) -> int:
    A = np.asarray(A)
    if A.size == 0:
        return 0
    return rref(A, F)[2]


def nullspace(A: np.ndarray, F: PrimeField) -> np.ndarray:
    """Rows spanning ``{v : A @ v = 0}``."""
    A = np.asarray(A, dtype=np.int64)
    cols = A.shape[1]
    if A.shape[0] == 0:
        return np.eye(cols, dtype=np.int64)
    R, piv, rk = rref(A, F)
    free = [c for c in range(cols) if c not in set(piv)]
    N = np.zeros((len(free), cols), dtype=np.int64)
    for k, f in enumerate(free):
        N[k, f] = 1
        for i, pc in enumerate(piv):
            N[k, pc] = (-R[i, f]) % F.p
    return N


def left_nullspace(A: np.ndarray, F: PrimeField) -> np.ndarray:
    """Rows spanning ``{v : v @ A = 0}``."""
    A = np.asarray(A, dtype=np.int64)
    return nullspace(A.T, F)


def solve(A: np.ndarray, b: np.ndarray, F: PrimeField) -> np.ndarray | None:
    """A vector ``x`` with ``A @ x = b``, or ``None`` if ``b`` is outside the column space."""
    A = np.asarray(A, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64).reshape(-1)
    if A.ndim != 2 or A.shape[0] != b.shape[0]:
        raise DimensionMismatch(f"cannot solve {A.shape} system with rhs of length {b.shape[0]}")
    rows, cols = A.shape
    aug = np.concatenate([A % F.p, (b % F.p).reshape(-1, 1)], axis=1)
    R, piv, _ = rref(aug, F)
    if cols in piv:
        return None
    x = np.zeros(cols, dtype=np.int64)
    for i, c in enumerate(piv):
        x[c] = R[i, cols]
    return x


def solve_left(A: np.ndarray, B: np.ndarray, F: PrimeField) -> np.ndarray | None:
    """A matrix ``X`` with ``X @ A = B`` (all rows at once), or ``None``."""
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    if B.ndim == 1:
        B = B.reshape(1, -1)
    if A.shape[1] != B.shape[1]:
        raise DimensionMismatch(f"cannot solve X @ {A.shape} = {B.shape}")
    n = A.shape[0]
    if B.shape[0] == 0:
        return np.zeros((0, n), dtype=np.int64)
    # [A^T | B^T] row reduced solves A^T X^T = B^T for every column at once
    aug = np.concatenate([A.T % F.p, B.T % F.p], axis=1)
    R, piv, _ = rref(aug, F)
    if any(c >= n for c in piv):
        return None
    X = np.zeros((n, B.shape[0]), dtype=np.int64)
    for i, c in enumerate(piv):
        X[c] = R[i, n:]
    return X.T.copy()


def reduce_against(V: np.ndarray, E: np.ndarray, pivots: list[int], F: PrimeField) -> np.ndarray:
    """Residues of the rows of ``V`` modulo the RREF basis ``E``."""
    V = np.asarray(V, dtype=np.int64)
    if E.shape[0] == 0:
        return V % F.p
    return (V - matmul(V[:, pivots], E, F)) % F.p


def coordinates(V: np.ndarray, E: np.ndarray, pivots: list[int]) -> np.ndarray:
    """Coordinates of rows of ``V`` (assumed in the span) in the RREF basis ``E``."""
    return np.asarray(V, dtype=np.int64)[:, pivots].copy()


def contains(U: np.ndarray, v: np.ndarray, F: PrimeField) -> bool:
    E, piv = echelon(U, F)
    v = np.asarray(v, dtype=np.int64).reshape(1, -1)
    return not reduce_against(v, E, piv, F).any()


def span_sum(U: np.ndarray, V: np.ndarray, F: PrimeField) -> np.ndarray:
    return echelon(np.concatenate([U, V], axis=0), F)[0]


def intersection(U: np.ndarray, V: np.ndarray, F: PrimeField) -> np.ndarray:
    """Echelon basis of ``rowspace(U) ∩ rowspace(V)``."""
    U = echelon(U, F)[0]
    V = echelon(V, F)[0]
    if U.shape[0] == 0 or V.shape[0] == 0:
        return np.zeros((0, U.shape[1]), dtype=np.int64)
    # a U + b V = 0  ->  a U lies in both
    K = left_nullspace(np.concatenate([U, V], axis=0), F)
    if K.shape[0] == 0:
        return np.zeros((0, U.shape[1]), dtype=np.int64)
    return echelon(matmul(K[:, : U.shape[0]], U, F), F)[0]


def quotient_basis(U: np.ndarray, V: np.ndarray, F: PrimeField) -> np.ndarray:
    """Rows of ``V`` that extend the echelon basis of ``U`` to a basis of ``V``.

    Raises :class:`NotASubspacePair` when ``U`` is not contained in ``V``.
    """
    EU, pu = echelon(U, F)
    EV, _ = echelon(V, F)
    if EU.shape[0] and reduce_against(EU, *echelon(EV, F), F).any():
        raise NotASubspacePair("U is not contained in V")
    res = reduce_against(EV, EU, pu, F)
    return echelon(res, F)[0]


def kron(A: np.ndarray, B: np.ndarray, F: PrimeField) -> np.ndarray:
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    if (F.p - 1) ** 2 <= _INT64_LIMIT:
        return np.kron(A, B) % F.p
    return (np.kron(A.astype(object), B.astype(object)) % F.p).astype(np.int64)


def projector(E: np.ndarray, pivots: list[int], n: int, F: PrimeField) -> tuple[np.ndarray, np.ndarray]:
    """Quotient map ``F^n -> F^n / rowspace(E)`` and a section of it.

    Returns ``(P, C)``: ``P`` is ``n x q`` sending a vector to its
    coordinates on the non-pivot columns after reduction by ``E``;
    ``C`` is ``q x n`` made of the standard vectors on those columns.
    """
    free = [c for c in range(n) if c not in set(pivots)]
    I = np.eye(n, dtype=np.int64)
    P = reduce_against(I, E, pivots, F)[:, free]
    C = I[free]
    return P, C
