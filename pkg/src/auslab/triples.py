"""Right modules over Λ = [[R, 0], [M, S]] as triples ``(X, Y)_f``.

``X`` is a right R-module, ``Y`` a right S-module and ``f: Y (x)_S M -> X``
an R-map.  The Λ-module is ``X (+) Y`` with

    (x, y) . (r, m, s) = (x r + f(y (x) m), y s).

This module converts between the two descriptions, builds the adjoint
form ``Y -> Hom_R(M, X)``, tests flatness through the triple data, and
runs the explicit flat resolutions obtained by iterating the cover step
``(F0(Y) (x) M, F0(Y))_1 (+) (F0(X), 0)_0 -> (X, Y)_f``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .algebra import BimoduleData, StructureAlgebra, TriangularAlgebra
from .homological import (
    ExtDim,
    injective_envelope,
    is_projective,
    minimal_injective_resolution,
    projective_cover,
    projective_dimension,
    socle_multiplicities,
    bass_numbers,
    is_injective,
)
from .linalg import echelon, matmul, rank, solve_left
from .modules import (
    RightModule,
    annihilator,
    block_diag,
    direct_sum,
    hom_space,
    is_module_map,
    kernel_module,
    quotient,
    regular_module,
    submodule,
    tensor_map,
    tensor_over,
    zero_module,
)


class BlockMismatch(ValueError):
    pass


class NotEpic(RuntimeError):
    pass


class HypothesisViolation(RuntimeError):
    pass


# -- tensor bookkeeping ----------------------------------------------------------


@dataclass
class Tensor:
    """``Y (x)_S M`` with its surjection from ``Y (x)_k M`` and a section."""

    module: RightModule
    proj: np.ndarray
    section: np.ndarray

    @classmethod
    def of(cls, Y: RightModule, M: BimoduleData) -> "Tensor":
        return cls(*tensor_over(Y, M))

    def as_tuple(self):
        return (self.module, self.proj, self.section)


def right_module_of(M: BimoduleData) -> RightModule:
    """``M`` as a right R-module."""
    return RightModule(M.right_algebra, M.right, name="M_R")


def left_module_of(M: BimoduleData) -> RightModule:
    """``M`` as a left S-module, i.e. a right module over the opposite of S."""
    act = np.ascontiguousarray(M.left.transpose(0, 2, 1))
    return RightModule(M.left_algebra.opposite, act, name="_SM")


# -- triples -------------------------------------------------------------------------


@dataclass
class Triple:
    X: RightModule
    Y: RightModule
    f: np.ndarray  # dim(Y (x)_S M) x dim X
    bimodule: BimoduleData
    tensor: Tensor = field(default=None, repr=False)

    def __post_init__(self):
        if self.tensor is None:
            self.tensor = Tensor.of(self.Y, self.bimodule)
        self.f = np.asarray(self.f, dtype=np.int64).reshape(self.tensor.module.mdim, self.X.mdim)

    @property
    def field(self):
        return self.X.field

    def is_valid(self) -> bool:
        return is_module_map(self.tensor.module, self.X, self.f)

    def f_on_pairs(self) -> np.ndarray:
        """``f(y_a (x) m_b)`` at row ``a * mdim(M) + b``."""
        if self.tensor.proj.size == 0:
            return np.zeros((self.Y.mdim * self.bimodule.mdim, self.X.mdim), dtype=np.int64)
        return matmul(self.tensor.proj, self.f, self.field)

    def coker_f(self) -> tuple[RightModule, np.ndarray, np.ndarray]:
        return quotient(self.X, self.f)

    def ker_f(self) -> tuple[RightModule, np.ndarray]:
        return kernel_module(self.tensor.module, self.f)


def identity_triple(Y: RightModule, M: BimoduleData) -> Triple:
    """``(Y (x) M, Y)_1``."""
    t = Tensor.of(Y, M)
    return Triple(t.module, Y, np.eye(t.module.mdim, dtype=np.int64), M, t)


def x_only_triple(X: RightModule, M: BimoduleData) -> Triple:
    """``(X, 0)_0``."""
    Y = zero_module(M.left_algebra)
    return Triple(X, Y, np.zeros((0, X.mdim), dtype=np.int64), M)


def y_only_triple(Y: RightModule, M: BimoduleData) -> Triple:
    """``(0, Y)_0``."""
    X = zero_module(M.right_algebra)
    t = Tensor.of(Y, M)
    return Triple(X, Y, np.zeros((t.module.mdim, 0), dtype=np.int64), M, t)


def triple_sum(*triples: Triple) -> Triple:
    M = triples[0].bimodule
    X = direct_sum(*[T.X for T in triples])
    Y = direct_sum(*[T.Y for T in triples])
    # the tensor of a direct sum splits; keep the summand tensors side by side
    parts = [T.tensor for T in triples]
    # pairs y_a (x) m_b of one summand occupy a contiguous range of indices
    proj = block_diag(*[p.proj for p in parts])
    section = block_diag(*[p.section for p in parts])
    t = Tensor(direct_sum(*[p.module for p in parts]), proj, section)
    f = block_diag(*[T.f for T in triples])
    return Triple(X, Y, f, M, t)


def _check_blocks(tri: TriangularAlgebra, T: Triple):
    M = tri.M
    if T.bimodule is not M and not (
        T.bimodule.mdim == M.mdim
        and np.array_equal(T.bimodule.left, M.left)
        and np.array_equal(T.bimodule.right, M.right)
    ):
        raise BlockMismatch("triple built over a different bimodule")
    if T.X.algebra != tri.R or T.Y.algebra != tri.S:
        raise BlockMismatch("triple components live over the wrong algebras")


def triple_to_module(tri: TriangularAlgebra, T: Triple) -> RightModule:
    _check_blocks(tri, T)
    Lam = tri.algebra
    x, y, m = T.X.mdim, T.Y.mdim, tri.M.mdim
    n = x + y
    act = np.zeros((Lam.dim, n, n), dtype=np.int64)
    act[tri.r_slice, :x, :x] = T.X.action
    act[tri.s_slice, x:, x:] = T.Y.action
    pairs = T.f_on_pairs().reshape(y, m, x)
    act[tri.m_slice, x:, :x] = pairs.transpose(1, 0, 2)
    return RightModule(Lam, act, name=f"({T.X.name},{T.Y.name})")


def _corner(N: RightModule, e: np.ndarray) -> tuple[np.ndarray, list[int]]:
    return echelon(N.act(e), N.field)


def module_to_triple(tri: TriangularAlgebra, N: RightModule) -> Triple:
    """``X = N e_R``, ``Y = N e_S`` and ``f`` read off the M block."""
    if N.algebra != tri.algebra:
        raise BlockMismatch("module is not over the triangular algebra")
    F = N.field
    p = N.p
    BX, px = _corner(N, tri.e_R)
    BY, py = _corner(N, tri.e_S)
    if BX.shape[0] + BY.shape[0] != N.mdim:
        raise BlockMismatch("corner idempotents do not split the module")
    actX = np.stack([matmul(BX, N.action[i], F)[:, px] for i in range(tri.r_slice.start, tri.r_slice.stop)])
    actY = np.stack([matmul(BY, N.action[i], F)[:, py] for i in range(tri.s_slice.start, tri.s_slice.stop)])
    X = RightModule(tri.R, actX.reshape(tri.R.dim, BX.shape[0], BX.shape[0]), name="Ne_R")
    Y = RightModule(tri.S, actY.reshape(tri.S.dim, BY.shape[0], BY.shape[0]), name="Ne_S")
    m = tri.M.mdim
    y = Y.mdim
    big = np.zeros((y * m, X.mdim), dtype=np.int64)
    for b, i in enumerate(range(tri.m_slice.start, tri.m_slice.stop)):
        vals = matmul(BY, N.action[i], F)[:, px] if y else np.zeros((0, X.mdim), dtype=np.int64)
        big[b::m] = vals
    t = Tensor.of(Y, tri.M)
    f = matmul(t.section, big, F) if t.section.size else np.zeros((t.module.mdim, X.mdim), dtype=np.int64)
    T = Triple(X, Y, f % p, tri.M, t)
    return T


# -- adjoint form -----------------------------------------------------------------------


@dataclass
class Star:
    """``*X = Hom_R(M, X)`` with its basis of maps."""

    module: RightModule
    basis: np.ndarray  # h x m x dim X


def star(I: RightModule, M: BimoduleData) -> Star:
    """``Hom_R(M, I)`` as a right S-module: ``(alpha . s)(m) = alpha(s m)``."""
    S = M.left_algebra
    F = I.field
    H = hom_space(right_module_of(M), I)
    h = H.shape[0]
    if h == 0:
        return Star(zero_module(S), H)
    flat = H.reshape(h, -1)
    act = np.zeros((S.dim, h, h), dtype=np.int64)
    for i in range(S.dim):
        moved = np.stack([matmul(M.left[i].T, H[c], F) for c in range(h)]).reshape(h, -1)
        coords = solve_left(flat, moved, F)
        if coords is None:
            raise HypothesisViolation("Hom_R(M, I) is not stable under the S-action")
        act[i] = coords
    return Star(RightModule(S, act, name=f"*{I.name}"), H)


@dataclass
class AdjointTriple:
    X: RightModule
    Y: RightModule
    phi: np.ndarray  # dim Y x dim *X
    star: Star
    bimodule: BimoduleData


def adjoint_form(T: Triple) -> AdjointTriple:
    F = T.field
    st = star(T.X, T.bimodule)
    y, m = T.Y.mdim, T.bimodule.mdim
    h = st.basis.shape[0]
    if y == 0 or h == 0:
        return AdjointTriple(T.X, T.Y, np.zeros((y, h), dtype=np.int64), st, T.bimodule)
    pairs = T.f_on_pairs().reshape(y, m * T.X.mdim)
    phi = solve_left(st.basis.reshape(h, -1), pairs, F)
    if phi is None:
        raise HypothesisViolation("f does not factor through Hom_R(M, X)")
    return AdjointTriple(T.X, T.Y, phi, st, T.bimodule)


def from_adjoint(adj: AdjointTriple) -> Triple:
    F = adj.X.field
    t = Tensor.of(adj.Y, adj.bimodule)
    y, m, x = adj.Y.mdim, adj.bimodule.mdim, adj.X.mdim
    if adj.phi.size == 0:
        return Triple(adj.X, adj.Y, np.zeros((t.module.mdim, x), dtype=np.int64), adj.bimodule, t)
    big = matmul(adj.phi, adj.star.basis.reshape(adj.star.basis.shape[0], -1), F).reshape(y * m, x)
    f = matmul(t.section, big, F) if t.section.size else np.zeros((0, x), dtype=np.int64)
    return Triple(adj.X, adj.Y, f, adj.bimodule, t)


# -- flatness -------------------------------------------------------------------------------


@dataclass(frozen=True)
class FlatVerdict:
    y_projective: bool
    coker_projective: bool
    f_monic: bool

    @property
    def flat(self) -> bool:
        return self.y_projective and self.coker_projective and self.f_monic

    def __bool__(self):
        return self.flat


def is_flat_triple(T: Triple) -> FlatVerdict:
    """Flatness through the triple data: ``Y`` flat, ``Coker f`` flat, ``f`` monic."""
    monic = rank(T.f, T.field) == T.tensor.module.mdim if T.f.size else T.tensor.module.mdim == 0
    C, _, _ = T.coker_f()
    return FlatVerdict(is_projective(T.Y), is_projective(C), bool(monic))


# -- the evaluation map ----------------------------------------------------------------------


@dataclass
class XiMap:
    star: Star
    tensor: Tensor
    matrix: np.ndarray  # dim(*I (x) M) x dim I
    kernel: RightModule
    kernel_inclusion: np.ndarray
    epic: bool


def xi_map(I: RightModule, M: BimoduleData, require_epic: bool = True) -> XiMap:
    """``xi_I: *I (x)_S M -> I``, ``alpha (x) x -> alpha(x)``."""
    F = I.field
    st = star(I, M)
    t = Tensor.of(st.module, M)
    h, m = st.basis.shape[0], M.mdim
    big = st.basis.reshape(h * m, I.mdim)
    xi = matmul(t.section, big, F) if t.section.size else np.zeros((t.module.mdim, I.mdim), dtype=np.int64)
    epic = (rank(xi, F) if xi.size else 0) == I.mdim
    if require_epic and not epic:
        raise NotEpic("evaluation map is not surjective")
    K, inc = kernel_module(t.module, xi)
    return XiMap(st, t, xi, K, inc, epic)


# -- the cover step ----------------------------------------------------------------------------


@dataclass
class CoverStep:
    source: Triple  # the triple being covered
    cover: Triple  # flat triple F
    psi_x: np.ndarray  # F.X -> source.X
    psi_y: np.ndarray  # F.Y -> source.Y
    kernel: Triple  # (Ker psi_x, Ker psi_y)_{f1}
    kx_inclusion: np.ndarray  # rows in F.X coordinates
    ky_inclusion: np.ndarray  # rows in F.Y coordinates
    snake_exact: bool | None = None

    @property
    def psi(self) -> np.ndarray:
        """The Λ-map ``F -> source`` on ``X (+) Y`` coordinates."""
        return block_diag(self.psi_x, self.psi_y)

    @property
    def kernel_inclusion(self) -> np.ndarray:
        return block_diag(self.kx_inclusion, self.ky_inclusion)


def lemma31_step(T: Triple, include_x_cover: bool = True, check_snake: bool = True) -> CoverStep:
    """Flat cover step ``(F0(Y) (x) M, F0(Y))_1 (+) (F0(X), 0)_0 -> (X, Y)_f``.

    With ``include_x_cover=False`` the second summand is dropped; the
    step then requires ``f (pi0(Y) (x) 1)`` to be onto ``X`` already.
    """
    M = T.bimodule
    F = T.field
    PY, piY = projective_cover(T.Y)
    first = identity_triple(PY, M)
    g = tensor_map(piY, first.tensor.as_tuple(), T.tensor.as_tuple(), M)
    top_part = matmul(g, T.f, F) if g.size and T.f.size else np.zeros((first.X.mdim, T.X.mdim), dtype=np.int64)
    if include_x_cover:
        PX, piX = projective_cover(T.X)
        cover = triple_sum(first, x_only_triple(PX, M))
        h = np.concatenate([top_part, piX], axis=0)
    else:
        cover = first
        h = top_part
        if (rank(h, F) if h.size else 0) != T.X.mdim:
            raise NotEpic("f (pi0(Y) (x) 1) is not onto X")
    KX, kx = kernel_module(cover.X, h)
    KY, ky = kernel_module(PY, piY)
    tK = Tensor.of(KY, M)
    inc_t = tensor_map(ky, tK.as_tuple(), first.tensor.as_tuple(), M)
    # f on the cover is the inclusion of the first summand's X part
    into_cover_x = np.zeros((tK.module.mdim, cover.X.mdim), dtype=np.int64)
    if inc_t.size:
        into_cover_x[:, : first.X.mdim] = inc_t
    if into_cover_x.shape[0] and KX.mdim:
        f1 = solve_left(kx, into_cover_x, F)
        if f1 is None:
            raise HypothesisViolation("kernel triple map does not land in Ker psi")
    elif into_cover_x.shape[0] and into_cover_x.any():
        raise HypothesisViolation("kernel triple map does not land in Ker psi")
    else:
        f1 = np.zeros((tK.module.mdim, KX.mdim), dtype=np.int64)
    kernel = Triple(KX, KY, f1, M, tK)
    step = CoverStep(T, cover, h, piY, kernel, kx, ky)
    if check_snake and include_x_cover:
        step.snake_exact = snake_sequence_exact(step, first, g)
    return step


def _rk(A: np.ndarray, F) -> int:
    return rank(A, F) if A.size else 0


def snake_sequence_exact(step: CoverStep, first: Triple, g: np.ndarray) -> bool:
    """``0 -> Ker f -> Coker f1 -> F0(X) -> Coker f -> 0`` is exact.

    The connecting map lifts ``k`` in ``Ker f`` along ``pi0(Y) (x) 1`` and
    takes the class of ``(lift, 0)`` in ``Ker psi_x / Im f1``.
    """
    T = step.source
    F = T.field
    K = step.kernel
    Kf, kf = T.ker_f()
    C1, P1, S1 = quotient(K.X, K.f)
    nfirst = first.X.mdim
    PX_dim = step.cover.X.mdim - nfirst
    # connecting map Ker f -> Coker f1
    if Kf.mdim:
        lift = solve_left(g, kf, F)
        if lift is None:
            return False
        full = np.zeros((Kf.mdim, step.cover.X.mdim), dtype=np.int64)
        full[:, :nfirst] = lift
        coords = solve_left(step.kx_inclusion, full, F) if step.kx_inclusion.size else None
        if coords is None:
            return False
        delta = matmul(coords, P1, F) if P1.size else np.zeros((Kf.mdim, 0), dtype=np.int64)
    else:
        delta = np.zeros((0, C1.mdim), dtype=np.int64)
    # Coker f1 -> F0(X): section, inclusion, projection to the F0(X) summand
    if C1.mdim:
        beta = matmul(S1, step.kx_inclusion, F)[:, nfirst:]
    else:
        beta = np.zeros((0, PX_dim), dtype=np.int64)
    # F0(X) -> Coker f
    Cf, Pf, _ = T.coker_f()
    gamma = matmul(step.psi_x[nfirst:], Pf, F) if Pf.size and PX_dim else np.zeros((PX_dim, Cf.mdim), dtype=np.int64)
    PXmod = submodule_of_sum(step.cover.X, nfirst)
    ok = is_module_map(Kf, C1, delta) and is_module_map(C1, PXmod, beta) and is_module_map(PXmod, Cf, gamma)
    ok = ok and _rk(delta, F) == Kf.mdim
    ok = ok and not (delta.size and beta.size and matmul(delta, beta, F).any())
    ok = ok and not (beta.size and gamma.size and matmul(beta, gamma, F).any())
    ok = ok and _rk(delta, F) + _rk(beta, F) == C1.mdim
    ok = ok and _rk(beta, F) + _rk(gamma, F) == PX_dim
    ok = ok and _rk(gamma, F) == Cf.mdim
    return bool(ok)


def submodule_of_sum(X: RightModule, start: int) -> RightModule:
    """The trailing direct summand of a block-diagonal module."""
    act = X.action[:, start:, start:]
    return RightModule(X.algebra, act, name="tail")


# -- explicit flat resolutions ----------------------------------------------------------------


@dataclass
class TripleResolution:
    """``... -> F_1 -> F_0 -> T -> 0`` with Λ-maps ``maps[i]: F_i -> F_{i-1}`` (``maps[0]`` onto ``T``)."""

    tri: TriangularAlgebra
    resolved: Triple
    steps: list[CoverStep] = field(default_factory=list)

    @property
    def terms(self) -> list[Triple]:
        return [s.cover for s in self.steps]

    def modules(self) -> list[RightModule]:
        return [triple_to_module(self.tri, s.cover) for s in self.steps]

    def maps(self) -> list[np.ndarray]:
        out = [self.steps[0].psi]
        for prev, cur in zip(self.steps, self.steps[1:]):
            out.append(matmul(cur.psi, prev.kernel_inclusion, self.resolved.field))
        return out

    def flat_length(self) -> int | None:
        """Smallest ``k`` with ``Ker psi_{k-1}`` zero, if reached."""
        for i, s in enumerate(self.steps):
            if s.kernel.X.mdim + s.kernel.Y.mdim == 0:
                return i
        return None

    def is_exact(self) -> bool:
        F = self.resolved.field
        mods = self.modules()
        target = triple_to_module(self.tri, self.resolved)
        maps = self.maps()
        if _rk(maps[0], F) != target.mdim or not is_module_map(mods[0], target, maps[0]):
            return False
        for i in range(1, len(maps)):
            if not is_module_map(mods[i], mods[i - 1], maps[i]):
                return False
            if maps[i].size and maps[i - 1].size and matmul(maps[i], maps[i - 1], F).any():
                return False
            if _rk(maps[i], F) + _rk(maps[i - 1], F) != mods[i - 1].mdim:
                return False
        return True

    def all_flat(self) -> bool:
        return all(is_flat_triple(T).flat for T in self.terms)


def _iterate(tri: TriangularAlgebra, T0: Triple, first: CoverStep, max_degree: int) -> TripleResolution:
    res = TripleResolution(tri, T0, [first])
    cur = first
    for _ in range(max_degree):
        step = lemma31_step(cur.kernel)
        res.steps.append(step)
        cur = step
    return res


def prop32_resolution_type1(tri: TriangularAlgebra, I: RightModule, max_degree: int) -> tuple[TripleResolution, XiMap]:
    """Flat resolution of ``_1(I, *I)`` for an injective R-module ``I``.

    Step 0 covers only ``*I``: ``xi_I (pi0 (x) 1)`` is already onto ``I``.
    Later steps apply the general cover step to the kernel triple.
    """
    if not is_injective(I):
        raise HypothesisViolation("the resolved R-module is not injective")
    xi = xi_map(I, tri.M)
    T0 = Triple(I, xi.star.module, xi.matrix, tri.M, xi.tensor)
    first = lemma31_step(T0, include_x_cover=False)
    return _iterate(tri, T0, first, max_degree), xi


def prop32_resolution_type2(tri: TriangularAlgebra, E: RightModule, max_degree: int) -> TripleResolution:
    """Flat resolution of ``_0(0, E)`` for an S-module ``E``."""
    T0 = y_only_triple(E, tri.M)
    first = lemma31_step(T0)
    return _iterate(tri, T0, first, max_degree)


def type1_dimension_criterion(tri: TriangularAlgebra, I: RightModule, k: int, cap: int) -> tuple[bool | None, bool | None]:
    """Both sides of ``pd _1(I, *I) <= k  iff  pd Ker xi_I <= k-1 and pd *I <= k``."""
    xi = xi_map(I, tri.M)
    T0 = Triple(I, xi.star.module, xi.matrix, tri.M, xi.tensor)
    lhs = projective_dimension(triple_to_module(tri, T0), cap).leq(k)
    a = projective_dimension(xi.kernel, cap).leq(k - 1)
    b = projective_dimension(xi.star.module, cap).leq(k)
    return lhs, _and3(a, b)


def type2_dimension_criterion(tri: TriangularAlgebra, E: RightModule, k: int, cap: int) -> tuple[bool | None, bool | None]:
    """Both sides of ``pd _0(0, E) <= k  iff  pd E <= k-1``."""
    lhs = projective_dimension(triple_to_module(tri, y_only_triple(E, tri.M)), cap).leq(k)
    rhs = projective_dimension(E, cap).leq(k - 1)
    return lhs, rhs


def _and3(a, b):
    if a is False or b is False:
        return False
    if a is None or b is None:
        return None
    return True


# -- standing hypotheses ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HypothesisReport:
    m_faithful: bool
    m_projective: bool
    end_is_s: bool
    m_left_projective: bool
    hom_m_r_projective: bool

    def items(self):
        return [
            ("M_R faithful", self.m_faithful),
            ("M_R projective", self.m_projective),
            ("End_R(M) = S", self.end_is_s),
            ("_SM projective", self.m_left_projective),
            ("Hom_R(M,R) projective over S", self.hom_m_r_projective),
        ]

    @property
    def all_hold(self) -> bool:
        return all(v for _, v in self.items())

    def failed(self) -> list[str]:
        return [k for k, v in self.items() if not v]


def check_hypotheses(tri: TriangularAlgebra) -> HypothesisReport:
    M = tri.M
    F = M.field
    MR = right_module_of(M)
    faithful = annihilator(MR).shape[0] == 0
    proj = is_projective(MR)
    # S -> End_R(M), s -> (left multiplication by s) must be a bijection
    End = hom_space(MR, MR)
    lefts = np.stack([M.left[i].T for i in range(tri.S.dim)])
    maps_ok = all(is_module_map(MR, MR, L) for L in lefts)
    inj = rank(lefts.reshape(tri.S.dim, -1), F) == tri.S.dim
    end_is_s = maps_ok and inj and End.shape[0] == tri.S.dim
    left_proj = is_projective(left_module_of(M))
    starR = star(regular_module(tri.R), M).module
    hom_proj = is_projective(starR)
    return HypothesisReport(faithful, proj, end_is_s, left_proj, hom_proj)


# -- the predicted minimal injective resolution of Λ ----------------------------------------------


@dataclass
class PredictedTerm:
    label: str
    triple: Triple
    module: RightModule


def predicted_injective_terms(tri: TriangularAlgebra, i: int) -> list[PredictedTerm]:
    """Summands ``_1(I^i(R), *I^i(R))``, ``_1(I^i(M), *I^i(M))``, ``_0(0, I^{i-1}(*R))``."""
    if i < 0:
        raise ValueError("degree must be non-negative")
    M = tri.M
    out = []
    for label, base in (("R", regular_module(tri.R)), ("M", right_module_of(M))):
        I = minimal_injective_resolution(base, i).terms[i]
        xi = xi_map(I, M, require_epic=False)
        if not xi.epic:
            raise HypothesisViolation(f"evaluation map for I^{i}({label}) is not onto")
        T = Triple(I, xi.star.module, xi.matrix, M, xi.tensor)
        out.append(PredictedTerm(f"_1(I^{i}({label}), *I^{i}({label}))", T, triple_to_module(tri, T)))
    if i >= 1:
        starR = star(regular_module(tri.R), M).module
        E = minimal_injective_resolution(starR, i - 1).terms[i - 1]
        T = y_only_triple(E, M)
        out.append(PredictedTerm(f"_0(0, I^{i - 1}(*R))", T, triple_to_module(tri, T)))
    return out


@dataclass
class ShapeCheck:
    degree: int
    predicted: tuple[int, ...]
    actual: tuple[int, ...]
    summands_injective: bool

    @property
    def matches(self) -> bool:
        return self.predicted == self.actual and self.summands_injective


def check_injective_shape(tri: TriangularAlgebra, i: int) -> ShapeCheck:
    """Compare socle multiplicities of the predicted summands with the Bass numbers of Λ."""
    terms = predicted_injective_terms(tri, i)
    mods = [t.module for t in terms if t.module.mdim]
    Lam = tri.algebra
    if mods:
        pred = socle_multiplicities(direct_sum(*mods))
    else:
        pred = tuple(0 for _ in socle_multiplicities(regular_module(Lam)))
    actual = bass_numbers(regular_module(Lam), i)
    inj = all(is_injective(m) for m in mods)
    return ShapeCheck(i, pred, actual, inj)
