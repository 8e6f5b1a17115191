"""Finite-dimensional right modules over a :class:`StructureAlgebra`.

Row-vector convention throughout: a module of dimension ``m`` carries one
``m x m`` matrix per algebra basis element and ``v . e_i = v @ action[i]``.
A module map ``M -> N`` is an ``mdim(M) x mdim(N)`` matrix ``H`` with
``action_M[i] @ H == H @ action_N[i]``.

Hom spaces are computed from a presentation of the source: generators
``g_1..g_r`` and module generators of the relation module inside ``A^r``.
A hom is then the choice of images ``w_k`` killing every relation, which
keeps the linear systems at ``r * mdim(N)`` unknowns.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .algebra import BimoduleData, ParseError, StructureAlgebra, _content_lines, _ints, _spin, element_action
from .linalg import (
    PrimeField,
    echelon,
    left_nullspace,
    matmul,
    projector,
    rank,
    reduce_against,
    solve_left,
)

DEFAULT_SEED = 0xA05


class AlgebraMismatch(ValueError):
    pass


class Inconclusive(RuntimeError):
    pass


class ChopError(RuntimeError):
    pass


def _einsum(p: int, expr: str, a, b) -> np.ndarray:
    """Two-operand ``einsum`` reduced mod ``p``, exact for any supported prime."""
    if (p - 1) ** 2 < 2**40:
        return np.einsum(expr, a, b, optimize=True) % p
    out = np.einsum(expr, np.asarray(a).astype(object), np.asarray(b).astype(object))
    return (out % p).astype(np.int64)


def _conjugate(p: int, C: np.ndarray, actions: np.ndarray, P: np.ndarray) -> np.ndarray:
    """``C @ actions[i] @ P`` for every ``i``."""
    return _einsum(p, "iac,cd->iad", _einsum(p, "ab,ibc->iac", C, actions), P)


class RightModule:
    """A right module given by its basis action matrices."""

    def __init__(self, algebra: StructureAlgebra, action, name: str = ""):
        self.algebra = algebra
        p = algebra.p
        action = np.asarray(action, dtype=np.int64) % p
        if action.ndim != 3 or action.shape[0] != algebra.dim or action.shape[1] != action.shape[2]:
            raise ValueError(f"action of shape {action.shape} does not fit {algebra!r}")
        action.setflags(write=False)
        self.action = action
        self.name = name

    @property
    def mdim(self) -> int:
        return self.action.shape[1]

    @property
    def field(self) -> PrimeField:
        return self.algebra.field

    @property
    def p(self) -> int:
        return self.algebra.p

    def __repr__(self):
        label = f"{self.name!r}, " if self.name else ""
        return f"RightModule({label}{self.algebra.name}, mdim={self.mdim})"

    def act(self, a) -> np.ndarray:
        return element_action(self.action, a, self.p)

    @cached_property
    def gen_actions(self) -> list[np.ndarray]:
        return [self.act(g) for g in self.algebra.generators]

    def validate(self) -> list[str]:
        p = self.p
        A = self.algebra
        problems = []
        if not np.array_equal(self.act(A.unit), np.eye(self.mdim, dtype=np.int64)):
            problems.append("unit does not act as identity")
        prod = _einsum(p, "iab,jbc->ijac", self.action, self.action)
        want = _einsum(p, "ijk,kac->ijac", A.mult, self.action)
        bad = np.argwhere((prod != want).any(axis=(2, 3)))
        if bad.size:
            i, j = (int(x) for x in bad[0])
            problems.append(f"Act_{i} Act_{j} does not match e_{i} e_{j}")
        return problems

    def is_zero(self) -> bool:
        return self.mdim == 0

    @cached_property
    def presentation(self) -> "_Presentation":
        return _Presentation.build(self)


@dataclass(frozen=True)
class ModuleMap:
    source: RightModule
    target: RightModule
    matrix: np.ndarray

    def __post_init__(self):
        if self.matrix.shape != (self.source.mdim, self.target.mdim):
            raise ValueError("matrix shape does not match the modules")

    def is_homomorphism(self) -> bool:
        return is_module_map(self.source, self.target, self.matrix)


def is_module_map(M: RightModule, N: RightModule, H: np.ndarray) -> bool:
    p = M.p
    H = np.asarray(H, dtype=np.int64)
    if H.shape != (M.mdim, N.mdim):
        return False
    if H.size == 0:
        return True
    lhs = _einsum(p, "iab,bc->iac", M.action, H)
    rhs = _einsum(p, "ab,ibc->iac", H, N.action)
    return np.array_equal(lhs, rhs)


def _check_same(M: RightModule, N: RightModule):
    if M.algebra is not N.algebra and M.algebra != N.algebra:
        raise AlgebraMismatch(f"{M.algebra.name} vs {N.algebra.name}")


# -- constructions ----------------------------------------------------------


def regular_module(A: StructureAlgebra) -> RightModule:
    return RightModule(A, A.right_mult, name=f"{A.name}_{A.name}")


def zero_module(A: StructureAlgebra) -> RightModule:
    return RightModule(A, np.zeros((A.dim, 0, 0), dtype=np.int64), name="0")


def direct_sum(*modules: RightModule) -> RightModule:
    if not modules:
        raise ValueError("need at least one summand")
    A = modules[0].algebra
    for M in modules[1:]:
        _check_same(modules[0], M)
    n = sum(M.mdim for M in modules)
    act = np.zeros((A.dim, n, n), dtype=np.int64)
    o = 0
    for M in modules:
        act[:, o : o + M.mdim, o : o + M.mdim] = M.action
        o += M.mdim
    return RightModule(A, act, name="+".join(M.name or "?" for M in modules))


def block_diag(*mats: np.ndarray) -> np.ndarray:
    rows = sum(m.shape[0] for m in mats)
    cols = sum(m.shape[1] for m in mats)
    out = np.zeros((rows, cols), dtype=np.int64)
    r = c = 0
    for m in mats:
        out[r : r + m.shape[0], c : c + m.shape[1]] = m
        r += m.shape[0]
        c += m.shape[1]
    return out


def spin(M: RightModule, vectors) -> tuple[np.ndarray, list[int]]:
    """RREF basis of the submodule generated by ``vectors``."""
    V = np.asarray(vectors, dtype=np.int64).reshape(-1, M.mdim)
    return _spin(V, M.gen_actions, M.field)


def submodule(M: RightModule, V) -> tuple[RightModule, np.ndarray]:
    """The submodule spanned by the rows of ``V`` (must be stable).

    Returns the module and its inclusion matrix (an RREF basis of ``V``).
    """
    if M.mdim == 0:
        return zero_module(M.algebra), np.zeros((0, 0), dtype=np.int64)
    E, piv = echelon(np.asarray(V, dtype=np.int64).reshape(-1, M.mdim), M.field)
    k = E.shape[0]
    p = M.p
    if k == 0:
        return zero_module(M.algebra), E
    moved = _einsum(p, "ab,ibc->iac", E, M.action)
    res = reduce_against(moved.reshape(-1, M.mdim), E, piv, M.field)
    if res.any():
        raise ValueError("subspace is not a submodule")
    act = moved[:, :, piv]
    return RightModule(M.algebra, act, name=f"sub({M.name})"), E


def quotient(M: RightModule, V) -> tuple[RightModule, np.ndarray, np.ndarray]:
    """``M / V`` with projection ``P`` (``m x q``) and section ``C`` (``q x m``)."""
    F = M.field
    if M.mdim == 0:
        z = np.zeros((0, 0), dtype=np.int64)
        return zero_module(M.algebra), z, z
    E, piv = echelon(np.asarray(V, dtype=np.int64).reshape(-1, M.mdim), F)
    P, C = projector(E, piv, M.mdim, F)
    act = _conjugate(M.p, C, M.action, P)
    return RightModule(M.algebra, act, name=f"{M.name}/sub"), P, C


def image_and_kernel(f: np.ndarray, F: PrimeField) -> tuple[np.ndarray, np.ndarray]:
    """Echelon bases of ``image`` (in the target) and ``kernel`` (in the source)."""
    f = np.asarray(f, dtype=np.int64)
    return echelon(f, F)[0], echelon(left_nullspace(f, F), F)[0]


def kernel_module(M: RightModule, f: np.ndarray) -> tuple[RightModule, np.ndarray]:
    return submodule(M, left_nullspace(np.asarray(f, dtype=np.int64), M.field))


def cokernel_module(N: RightModule, f: np.ndarray):
    return quotient(N, np.asarray(f, dtype=np.int64))


def dual(M: RightModule) -> RightModule:
    """Linear dual, a right module over the opposite algebra."""
    act = np.ascontiguousarray(M.action.transpose(0, 2, 1))
    return RightModule(M.algebra.opposite, act, name=f"D({M.name})")


def annihilator(M: RightModule) -> np.ndarray:
    """Echelon basis of ``{a : M . a = 0}``."""
    flat = M.action.reshape(M.algebra.dim, -1)
    return echelon(left_nullspace(flat, M.field), M.field)[0]


def free_module(A: StructureAlgebra, r: int) -> RightModule:
    if r == 0:
        return zero_module(A)
    return direct_sum(*([regular_module(A)] * r))


# -- presentations and hom spaces -------------------------------------------


@dataclass(frozen=True)
class _Presentation:
    gens: np.ndarray  # r x m
    pre: np.ndarray  # m x (r d): coefficients expressing basis vectors through gens
    relations: np.ndarray  # s x (r d): module generators of the relation module

    @classmethod
    def build(cls, M: RightModule) -> "_Presentation":
        A = M.algebra
        F = M.field
        p = M.p
        m, d = M.mdim, A.dim
        if m == 0:
            z = np.zeros((0, 0), dtype=np.int64)
            return cls(z.reshape(0, 0), np.zeros((0, 0), dtype=np.int64), np.zeros((0, 0), dtype=np.int64))
        J = A.derived.get("radical")
        if J is not None:
            G = _top_lift(np.eye(m, dtype=np.int64), M.action, J, F)
        else:
            G = _greedy_generators(M)
        r = G.shape[0]
        Phi = _einsum(p, "ka,iab->kib", G, M.action).reshape(r * d, m)
        pre = solve_left(Phi, np.eye(m, dtype=np.int64), F)
        assert pre is not None
        K = left_nullspace(Phi, F)
        if J is not None and K.shape[0]:
            rel = _top_lift(K, A.right_mult, J, F, blocks=r)
        else:
            rel = _module_generators(A, r, K)
        return cls(G, pre, rel)


def _top_lift(U: np.ndarray, actions: np.ndarray, J: np.ndarray, F: PrimeField, blocks: int = 1) -> np.ndarray:
    """Rows of the submodule spanned by ``U`` lifting a basis of ``U / U J``.

    ``actions`` act on each of ``blocks`` equal slices of a row.
    """
    p = F.p
    n = U.shape[1]
    U = echelon(U, F)[0]
    if J.shape[0] == 0:
        return U
    JA = _einsum(p, "ji,iab->jab", J, actions)
    w = JA.shape[1]
    Ub = U.reshape(-1, blocks, w)
    UJ = _einsum(p, "qkb,jbc->qjkc", Ub, JA).reshape(-1, n)
    E, piv = echelon(UJ, F)
    return echelon(reduce_against(U, E, piv, F), F)[0]


def _greedy_generators(M: RightModule) -> np.ndarray:
    F = M.field
    m = M.mdim
    rng = np.random.default_rng(DEFAULT_SEED)
    gens: list[np.ndarray] = []
    E, piv = np.zeros((0, m), dtype=np.int64), []
    while E.shape[0] < m:
        v = None
        for _ in range(4):
            cand = F.random(rng, 1, m)
            if reduce_against(cand, E, piv, F).any():
                v = cand[0]
                break
        if v is None:
            I = np.eye(m, dtype=np.int64)
            v = I[[c for c in range(m) if c not in set(piv)][0]]
        gens.append(v)
        E, piv = _spin(v.reshape(1, -1), M.gen_actions, F, base=(E, piv))
    return np.array(gens, dtype=np.int64)


def _module_generators(A: StructureAlgebra, r: int, K: np.ndarray) -> np.ndarray:
    """Module generators of the submodule of ``A^r`` spanned by the rows of ``K``."""
    F = A.field
    d = A.dim
    if K.shape[0] == 0:
        return np.zeros((0, r * d), dtype=np.int64)
    mats = [block_diag(*([element_action(A.right_mult, g, A.p)] * r)) for g in A.generators]
    target = rank(K, F)
    rng = np.random.default_rng(DEFAULT_SEED + 1)
    chosen: list[np.ndarray] = []
    E, piv = np.zeros((0, r * d), dtype=np.int64), []
    tries = 0
    while E.shape[0] < target:
        tries += 1
        if tries <= 2 * target + 4:
            v = matmul(F.random(rng, 1, K.shape[0]), K, F)
        else:
            res = reduce_against(K, E, piv, F)
            v = res[np.flatnonzero(res.any(axis=1))[0]].reshape(1, -1)
        if not reduce_against(v, E, piv, F).any():
            continue
        chosen.append(v[0])
        E, piv = _spin(v, mats, F, base=(E, piv))
    return np.array(chosen, dtype=np.int64)


def hom_space(M: RightModule, N: RightModule) -> np.ndarray:
    """Basis of ``Hom_A(M, N)`` as an array of shape ``(h, mdim M, mdim N)``."""
    _check_same(M, N)
    p = M.p
    F = M.field
    m, n = M.mdim, N.mdim
    if m == 0 or n == 0:
        return np.zeros((0, m, n), dtype=np.int64)
    pres = M.presentation
    r = pres.gens.shape[0]
    d = M.algebra.dim
    rel = pres.relations.reshape(-1, r, d)
    if rel.shape[0]:
        # block (k, rel) = sum_i rel[q, k, i] Act_N[i]
        C = _einsum(p, "qki,iab->kaqb", rel, N.action).reshape(r * n, rel.shape[0] * n)
        W = left_nullspace(C, F)
    else:
        W = np.eye(r * n, dtype=np.int64)
    h = W.shape[0]
    if h == 0:
        return np.zeros((0, m, n), dtype=np.int64)
    Wk = W.reshape(h, r, n)
    Psi = _einsum(p, "hkb,ibc->hkic", Wk, N.action).reshape(h, r * d, n)
    H = _einsum(p, "ab,hbc->hac", pres.pre, Psi)
    return H


def hom_dim(M: RightModule, N: RightModule) -> int:
    return hom_space(M, N).shape[0]


def combine(basis: np.ndarray, coeffs, p: int) -> np.ndarray:
    return np.tensordot(np.asarray(coeffs, dtype=np.int64), basis, axes=1) % p


# -- tensor products --------------------------------------------------------


def tensor_over(Y: RightModule, M: BimoduleData) -> tuple[RightModule, np.ndarray, np.ndarray]:
    """``Y (x)_S M`` as a right R-module.

    Returns ``(T, proj, section)`` where ``proj`` (``y*m x q``) is the
    canonical surjection from ``Y (x)_k M`` (basis ``y_a (x) m_b`` at index
    ``a*m + b``) and ``section`` (``q x y*m``) is a linear splitting.
    """
    S, R = M.left_algebra, M.right_algebra
    if Y.algebra is not S and Y.algebra != S:
        raise AlgebraMismatch("Y is not a module over the left algebra of M")
    F = R.field
    p = R.p
    y, m = Y.mdim, M.mdim
    n = y * m
    if n == 0:
        return zero_module(R), np.zeros((0, 0), dtype=np.int64), np.zeros((0, 0), dtype=np.int64)
    Iy = np.eye(y, dtype=np.int64)
    Im = np.eye(m, dtype=np.int64)
    blocks = []
    for g in S.generators:
        Ys = Y.act(g)
        Ls = element_action(M.left, g, p)
        blocks.append((np.kron(Ys, Im) - np.kron(Iy, Ls.T)) % p)
    Wsp = np.concatenate(blocks, axis=0)
    E, piv = echelon(Wsp, F)
    P, C = projector(E, piv, n, F)
    big = np.stack([np.kron(Iy, M.right[i]) % p for i in range(R.dim)])
    act = _conjugate(p, C, big, P)
    return RightModule(R, act, name=f"{Y.name}(x){M.name}"), P, C


def tensor_map(g: np.ndarray, src: tuple, tgt: tuple, M: BimoduleData) -> np.ndarray:
    """``g (x)_S 1_M`` between tensor products produced by :func:`tensor_over`."""
    p = M.field.p
    _, _, C1 = src
    _, P2, _ = tgt
    if C1.shape[0] == 0 or P2.shape[1] == 0:
        return np.zeros((C1.shape[0], P2.shape[1]), dtype=np.int64)
    big = np.kron(np.asarray(g, dtype=np.int64), np.eye(M.mdim, dtype=np.int64)) % p
    return matmul(matmul(C1, big, M.field), P2, M.field)


# -- radical, socle, top ------------------------------------------------------


def radical(A: StructureAlgebra) -> np.ndarray:
    """Echelon basis of the Jacobson radical: the common annihilator of all simples."""
    if "radical" not in A.derived:
        simples = simple_modules(A)
        J = annihilator(direct_sum(*simples))
        J.setflags(write=False)
        A.derived["radical"] = J
    return A.derived["radical"]


def _radical_actions(M: RightModule) -> np.ndarray:
    J = radical(M.algebra)
    if J.shape[0] == 0:
        return np.zeros((0, M.mdim, M.mdim), dtype=np.int64)
    return _einsum(M.p, "ji,iab->jab", J, M.action)


def socle_basis(M: RightModule) -> np.ndarray:
    m = M.mdim
    if m == 0:
        return np.zeros((0, 0), dtype=np.int64)
    JA = _radical_actions(M)
    if JA.shape[0] == 0:
        return np.eye(m, dtype=np.int64)
    big = JA.transpose(1, 0, 2).reshape(m, -1)
    return echelon(left_nullspace(big, M.field), M.field)[0]


def radical_basis(M: RightModule) -> np.ndarray:
    """Echelon basis of ``M J``."""
    m = M.mdim
    JA = _radical_actions(M)
    if JA.shape[0] == 0 or m == 0:
        return np.zeros((0, m), dtype=np.int64)
    return echelon(JA.reshape(-1, m), M.field)[0]


def socle(M: RightModule) -> tuple[RightModule, np.ndarray]:
    return submodule(M, socle_basis(M))


def top(M: RightModule) -> tuple[RightModule, np.ndarray]:
    Q, P, _ = quotient(M, radical_basis(M))
    return Q, P


# -- chopping ---------------------------------------------------------------


def _is_field(E: np.ndarray, p: int, rng) -> bool:
    """Whether the commutative algebra spanned by the matrices ``E`` is a field."""
    e = E.shape[0]
    F = PrimeField(p)
    size = E.shape[1]
    if p**e <= 2**14:
        for coeffs in _projective_points(e, p):
            if rank(combine(E, coeffs, p), F) < size:
                return False
        return True
    for _ in range(256):
        c = F.random(rng, e)
        if c.any() and rank(combine(E, c, p), F) < size:
            return False
    return True


def _projective_points(n: int, p: int):
    """One nonzero vector per line of F_p^n (first nonzero coordinate is 1)."""
    for lead in range(n):
        for tail in itertools.product(range(p), repeat=n - lead - 1):
            v = np.zeros(n, dtype=np.int64)
            v[lead] = 1
            v[lead + 1 :] = tail
            yield v


def is_simple(M: RightModule, seed: int = DEFAULT_SEED) -> bool:
    """Exact simplicity test.

    ``M`` is simple iff ``E = End(M)`` is a field and the image of the
    algebra in ``End_k(M)`` has dimension ``m^2 / dim E``.
    """
    m = M.mdim
    if m == 0:
        return False
    p = M.p
    E = hom_space(M, M)
    e = E.shape[0]
    if m % e:
        return False
    image_dim = rank(M.action.reshape(M.algebra.dim, -1), M.field)
    if image_dim * e != m * m:
        return False
    if e == 1:
        return True
    prod = _einsum(p, "aij,bjk->abik", E, E)
    if not np.array_equal(prod, prod.transpose(1, 0, 2, 3)):
        return False
    return _is_field(E, p, np.random.default_rng(seed))


def find_submodule(M: RightModule, rng: np.random.Generator, draws: int = 64) -> np.ndarray | None:
    """A proper nonzero submodule (echelon basis) or ``None``.

    Kernels of basis actions, then of seeded random elements shifted by
    scalars, are spun in ``M`` and in its dual.
    """
    F = M.field
    p = M.p
    m = M.mdim
    A = M.algebra
    I = np.eye(m, dtype=np.int64)
    dual_actions = [G.T for G in M.gen_actions]
    shifts = list(range(p)) if p <= 7 else [0, 1] + [int(x) for x in rng.integers(2, p, size=3)]

    def attempt(theta) -> np.ndarray | None:
        for lam in shifts:
            T = (theta - lam * I) % p
            K = left_nullspace(T, F)
            if 0 < K.shape[0] < m + 1:
                cands = list(K)
                if K.shape[0] > 1:
                    cands.append(matmul(F.random(rng, K.shape[0]), K, F))
                for v in cands:
                    if not v.any():
                        continue
                    U, _ = spin(M, v)
                    if U.shape[0] < m:
                        return U
            Kt = left_nullspace(T.T, F)
            for w in list(Kt)[:4]:
                W, _ = _spin(w.reshape(1, -1), dual_actions, F)
                if W.shape[0] < m:
                    return echelon(left_nullspace(W.T, F), F)[0]
        return None

    for i in range(A.dim):
        U = attempt(M.action[i])
        if U is not None:
            return U
    for _ in range(draws):
        U = attempt(M.act(F.random(rng, A.dim)))
        if U is not None:
            return U
    if p**m <= 2**16:
        for v in _projective_points(m, p):
            U, _ = spin(M, v)
            if U.shape[0] < m:
                return U
    return None


def chop(M: RightModule, seed: int = DEFAULT_SEED) -> list[RightModule]:
    """Composition factors of ``M`` (with repetition)."""
    rng = np.random.default_rng(seed)
    out: list[RightModule] = []
    stack = [M]
    while stack:
        X = stack.pop()
        if X.mdim == 0:
            continue
        if is_simple(X, seed):
            out.append(X)
            continue
        U = find_submodule(X, rng)
        if U is None:
            raise ChopError(f"no proper submodule found in reducible module of dim {X.mdim}")
        sub, _ = submodule(X, U)
        quo, _, _ = quotient(X, U)
        stack.append(quo)
        stack.append(sub)
    return out


def simple_modules(A: StructureAlgebra, seed: int = DEFAULT_SEED) -> list[RightModule]:
    """All simple right modules up to isomorphism, in order of discovery.

    The list is cached on the algebra; ``seed`` only matters on first call.
    """
    if "simples" not in A.derived:
        found: list[RightModule] = []
        for S in chop(regular_module(A), seed):
            if not any(T.mdim == S.mdim and hom_dim(T, S) for T in found):
                S.name = f"S{len(found)}"
                found.append(S)
        A.derived["simples"] = found
    return A.derived["simples"]


def composition_multiplicities(M: RightModule, seed: int = DEFAULT_SEED) -> tuple[int, ...]:
    """Multiplicity of each simple of :func:`simple_modules` in a chop of ``M``."""
    simples = simple_modules(M.algebra)
    counts = [0] * len(simples)
    for X in chop(M, seed):
        for k, S in enumerate(simples):
            if S.mdim == X.mdim and hom_dim(S, X):
                counts[k] += 1
                break
        else:
            raise ChopError("composition factor matches no known simple module")
    return tuple(counts)


def simple_index(S: RightModule) -> int:
    for k, T in enumerate(simple_modules(S.algebra)):
        if T.mdim == S.mdim and hom_dim(T, S):
            return k
    raise ValueError("module is not isomorphic to a known simple")


def end_dim(S: RightModule) -> int:
    return hom_dim(S, S)


# -- isomorphism --------------------------------------------------------------


def is_isomorphic(M: RightModule, N: RightModule, seed: int = DEFAULT_SEED, enum_limit: int = 2**16) -> bool:
    _check_same(M, N)
    if M.mdim != N.mdim:
        return False
    m = M.mdim
    if m == 0:
        return True
    F = M.field
    p = M.p
    H = hom_space(M, N)
    h = H.shape[0]
    if h == 0:
        return False
    if h != hom_dim(M, M) or h != hom_dim(N, N):
        return False
    rng = np.random.default_rng(seed)
    n_points = (p**h - 1) // (p - 1)
    if n_points > 4096:
        for _ in range(64):
            if rank(combine(H, F.random(rng, h), p), F) == m:
                return True
        if n_points > enum_limit:
            raise Inconclusive(f"hom space of dimension {h} too large to enumerate")
    for c in _projective_points(h, p):
        if rank(combine(H, c, p), F) == m:
            return True
    return False


def parse_module(text: str, algebra: StructureAlgebra, check_name: bool = True) -> RightModule:
    """Read the ``module-of`` / ``mdim`` / ``act i`` text format."""
    owner = m = None
    blocks: dict[int, list[list[int]]] = {}
    current = None
    for no, tok in _content_lines(text):
        key = tok[0]
        if key == "module-of":
            if owner is not None or len(tok) != 2:
                raise ParseError("bad or repeated 'module-of' line", no)
            owner = tok[1]
            if check_name and owner != algebra.name:
                raise ParseError(f"module is over {owner!r}, not {algebra.name!r}", no)
        elif key == "mdim":
            if m is not None or len(tok) != 2:
                raise ParseError("bad or repeated 'mdim' line", no)
            m = _ints(tok[1:], no)[0]
            if m < 0:
                raise ParseError("mdim must be non-negative", no)
        elif key == "act":
            if m is None:
                raise ParseError("'act' before 'mdim'", no)
            if current is not None and len(blocks[current]) != m:
                raise ParseError(f"act {current} block has {len(blocks[current])} rows, expected {m}", no)
            i = _ints(tok[1:], no)
            if len(i) != 1 or not 0 <= i[0] < algebra.dim:
                raise ParseError("act needs one basis index in range", no)
            if i[0] in blocks:
                raise ParseError(f"duplicate act block {i[0]}", no)
            current = i[0]
            blocks[current] = []
        else:
            if current is None:
                raise ParseError(f"unexpected line starting {key!r}", no)
            row = _ints(tok, no)
            if len(row) != m or len(blocks[current]) >= m:
                raise ParseError(f"act {current}: expected {m} rows of {m} integers", no)
            blocks[current].append(row)
    if owner is None:
        raise ParseError("missing 'module-of' line")
    if m is None:
        raise ParseError("missing 'mdim' line")
    missing = [i for i in range(algebra.dim) if len(blocks.get(i, ())) != m]
    if missing:
        raise ParseError(f"incomplete act blocks: {missing}")
    act = np.array([blocks[i] for i in range(algebra.dim)], dtype=np.int64).reshape(algebra.dim, m, m)
    return RightModule(algebra, act, owner)


def dump_module(M: RightModule) -> str:
    lines = [f"module-of {M.algebra.name}", f"mdim {M.mdim}"]
    for i in range(M.algebra.dim):
        lines.append(f"act {i}")
        lines += [" ".join(str(int(x)) for x in row) for row in M.action[i]]
    return "\n".join(lines) + "\n"
