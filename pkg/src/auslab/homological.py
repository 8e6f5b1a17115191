"""Minimal resolutions, Ext, and projective (= flat) dimension.

Everything here is finitely generated over a finite-dimensional algebra,
so flat modules are projective and flat dimension is projective
dimension.  Injective envelopes are assembled from the envelopes of the
simple modules, which are carved out of the injective cogenerator
``D(A)`` once per algebra.  Projective covers come from envelopes over the
opposite algebra through linear duality.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import total_ordering

import numpy as np

from .algebra import StructureAlgebra
from .linalg import echelon, left_nullspace, matmul, rank, reduce_against
from .modules import (
    DEFAULT_SEED,
    RightModule,
    direct_sum,
    dual,
    end_dim,
    Inconclusive,
    hom_space,
    is_isomorphic,
    is_module_map,
    kernel_module,
    quotient,
    radical_basis,
    regular_module,
    simple_modules,
    socle_basis,
    submodule,
    top,
    zero_module,
)


class CapExceeded(RuntimeError):
    pass


class RouteMismatch(AssertionError):
    pass


# -- extended dimensions -----------------------------------------------------


@total_ordering
@dataclass(frozen=True)
class ExtDim:
    """``-inf`` (zero module), an exact value, or a cap-censored lower bound."""

    kind: str  # "-inf" | "finite" | "atleast"
    value: int = 0

    def __post_init__(self):
        if self.kind not in ("-inf", "finite", "atleast"):
            raise ValueError(f"bad ExtDim kind {self.kind!r}")
        if self.kind == "finite" and self.value < 0:
            raise ValueError("finite dimension must be non-negative")
        if self.kind == "atleast" and self.value < 1:
            raise ValueError("censoring bound must be at least 1")

    @property
    def is_minus_infinity(self) -> bool:
        return self.kind == "-inf"

    @property
    def is_finite(self) -> bool:
        return self.kind == "finite"

    @property
    def is_censored(self) -> bool:
        return self.kind == "atleast"

    def plus(self, k: int = 1) -> "ExtDim":
        if self.kind == "-inf":
            return self
        return ExtDim(self.kind, self.value + k)

    def join(self, other: "ExtDim") -> "ExtDim":
        """Maximum; a censored value stands for the interval ``[c, inf]``."""
        if self.kind == "-inf":
            return other
        if other.kind == "-inf":
            return self
        if self.kind == other.kind == "finite":
            return Finite(max(self.value, other.value))
        return AtLeast(max(self.value, other.value))

    def leq(self, n: int) -> bool | None:
        """Three-valued ``self <= n``; ``None`` when censoring leaves it open."""
        if self.kind == "-inf":
            return True
        if self.kind == "finite":
            return self.value <= n
        return False if self.value > n else None

    def less_than(self, other: "ExtDim") -> bool | None:
        """Three-valued strict comparison."""
        if other.kind == "-inf":
            return False
        if self.kind == "-inf":
            return True
        if self.kind == "finite" and other.kind == "finite":
            return self.value < other.value
        if self.kind == "finite":  # other >= c
            return True if self.value < other.value else None
        if other.kind == "finite":  # self >= c
            return False if self.value >= other.value else None
        return None

    def agrees(self, other: "ExtDim") -> bool | None:
        """Exact equality, or ``None`` when the intervals merely overlap."""
        if self == other and self.kind != "atleast":
            return True
        lo1, hi1 = self._interval()
        lo2, hi2 = other._interval()
        if max(lo1, lo2) > min(hi1, hi2):
            return False
        return None

    def _interval(self) -> tuple[float, float]:
        if self.kind == "-inf":
            return (float("-inf"), float("-inf"))
        if self.kind == "finite":
            return (self.value, self.value)
        return (self.value, float("inf"))

    def render(self, compat: bool = False) -> str:
        if self.kind == "-inf":
            return "-1" if compat else "-inf"
        if self.kind == "finite":
            return str(self.value)
        return f">={self.value}"

    __str__ = render

    def _key(self):
        return {"-inf": 0, "finite": 1, "atleast": 2}[self.kind], self.value

    def __lt__(self, other):
        # total order for sorting only; use less_than for semantics
        return self._key() < other._key()

    @classmethod
    def parse(cls, text: str) -> "ExtDim":
        text = text.strip()
        if text in ("-inf", "-1"):
            return MINUS_INFINITY
        if text.startswith(">="):
            return AtLeast(int(text[2:]))
        return Finite(int(text))


MINUS_INFINITY = ExtDim("-inf")


def Finite(n: int) -> ExtDim:
    return ExtDim("finite", int(n))


def AtLeast(c: int) -> ExtDim:
    return ExtDim("atleast", int(c))


def join_all(values) -> ExtDim:
    out = MINUS_INFINITY
    for v in values:
        out = out.join(v)
    return out


# -- envelopes and covers ----------------------------------------------------


def injective_cogenerator(A: StructureAlgebra) -> RightModule:
    """``D(A)``: the dual of the left regular module, as a right A-module."""
    if "cogenerator" not in A.derived:
        act = np.ascontiguousarray(A.mult.transpose(0, 2, 1))
        A.derived["cogenerator"] = RightModule(A, act, name=f"D({A.name})")
    return A.derived["cogenerator"]


def semisimple_complement(V: RightModule, U: np.ndarray) -> np.ndarray:
    """Echelon basis of a submodule ``W`` of the semisimple ``V`` with ``V = U + W`` direct.

    Built from images of basis maps out of each simple module; every such
    image is simple, so it either lies in ``U + W`` or meets it trivially.
    """
    F = V.field
    m = V.mdim
    cur, piv = echelon(np.asarray(U, dtype=np.int64).reshape(-1, m), F)
    W = np.zeros((0, m), dtype=np.int64)
    for S in simple_modules(V.algebra):
        if cur.shape[0] == m:
            break
        for h in hom_space(S, V):
            img = echelon(h, F)[0]
            if reduce_against(img, cur, piv, F).any():
                W = np.concatenate([W, img], axis=0)
                cur, piv = echelon(np.concatenate([cur, img], axis=0), F)
                if cur.shape[0] == m:
                    break
    if cur.shape[0] != m:
        raise CapExceeded("module is not semisimple or a simple was missed")
    return echelon(W, F)[0]


def simple_envelope(A: StructureAlgebra, k: int) -> tuple[RightModule, np.ndarray]:
    """``E(S_k)`` as a submodule of ``D(A)`` together with the inclusion ``S_k -> E``.

    Grows ``N`` from a copy of ``S_k`` inside ``Q = D(A)``: with
    ``Sigma = soc Q``, each round adds a complement of ``(Sigma + N)/N``
    inside ``soc(Q/N)``.  This keeps ``N`` meeting ``Sigma`` in exactly the
    starting copy, so ``N`` stays an essential extension, and it stops only
    when ``N`` is a maximal one, i.e. an injective hull.
    """
    key = ("simple_envelope", k)
    if key in A.derived:
        return A.derived[key]
    F = A.field
    S = simple_modules(A)[k]
    Q = injective_cogenerator(A)
    H = hom_space(S, Q)
    if H.shape[0] == 0:
        raise CapExceeded(f"simple {k} does not embed in the cogenerator")
    inc = H[0]
    N, _ = echelon(inc, F)
    Sigma = socle_basis(Q)
    for _ in range(Q.mdim + 1):
        Qbar, P, C = quotient(Q, N)
        Zbar = socle_basis(Qbar)
        Ubar = echelon(matmul(Sigma, P, F), F)[0] if Qbar.mdim else Zbar
        if Zbar.shape[0] == Ubar.shape[0]:
            break
        soc_mod, soc_inc = submodule(Qbar, Zbar)
        U_in_soc = _coords_in(Ubar, soc_inc, F)
        W = semisimple_complement(soc_mod, U_in_soc)
        lifted = matmul(matmul(W, soc_inc, F), C, F)
        N, _ = echelon(np.concatenate([N, lifted], axis=0), F)
    else:
        raise CapExceeded("envelope growth did not stabilise")
    E, Ebasis = submodule(Q, N)
    piv = echelon(Ebasis, F)[1]
    emb = inc[:, piv]
    A.derived[key] = (E, emb)
    return E, emb


def _coords_in(V: np.ndarray, basis: np.ndarray, F) -> np.ndarray:
    """Coordinates of rows of ``V`` in the RREF ``basis``."""
    _, piv = echelon(basis, F)
    return np.asarray(V, dtype=np.int64)[:, piv]


def injective_envelope(M: RightModule) -> tuple[RightModule, np.ndarray]:
    """``(E, embedding)`` with ``E = E(M)``.

    ``E`` is a direct sum of simple envelopes, one per simple summand of
    ``soc M``; a map into each is chosen so the combined map is injective
    on the socle, which forces it to be an essential embedding.
    """
    A = M.algebra
    F = M.field
    m = M.mdim
    if m == 0:
        return zero_module(A), np.zeros((0, 0), dtype=np.int64)
    K = socle_basis(M)
    parts: list[RightModule] = []
    maps: list[np.ndarray] = []
    for k in range(len(simple_modules(A))):
        if K.shape[0] == 0:
            break
        Ek, _ = simple_envelope(A, k)
        for h in hom_space(M, Ek):
            r = matmul(K, h, F)
            if not r.any():
                continue
            parts.append(Ek)
            maps.append(h)
            c = left_nullspace(r, F)
            K = echelon(matmul(c, K, F), F)[0] if c.shape[0] else np.zeros((0, m), dtype=np.int64)
            if K.shape[0] == 0:
                break
    if K.shape[0]:
        raise CapExceeded("socle could not be embedded")
    E = direct_sum(*parts)
    E.name = f"E({M.name})"
    return E, np.concatenate(maps, axis=1)


def projective_cover(M: RightModule) -> tuple[RightModule, np.ndarray]:
    """``(P, epi)`` computed as the dual of the envelope of ``D(M)``."""
    if M.mdim == 0:
        return zero_module(M.algebra), np.zeros((0, 0), dtype=np.int64)
    E, emb = injective_envelope(dual(M))
    P = dual(E)
    P.name = f"P({M.name})"
    return P, np.ascontiguousarray(emb.T)


# -- resolutions ---------------------------------------------------------------


@dataclass
class MinResolution:
    """``maps[0]`` links the resolved module; ``maps[i]`` links terms ``i-1`` and ``i``.

    Injective: ``maps[0]: M -> I^0`` and ``maps[i]: I^{i-1} -> I^i``.
    Projective: ``maps[0]: P_0 -> M`` and ``maps[i]: P_i -> P_{i-1}``.
    """

    direction: str
    resolved: RightModule
    terms: list[RightModule] = field(default_factory=list)
    maps: list[np.ndarray] = field(default_factory=list)

    @property
    def dims(self) -> list[int]:
        return [T.mdim for T in self.terms]

    def length(self) -> int | None:
        """Index of the last nonzero term if a zero term was reached."""
        for i, T in enumerate(self.terms):
            if T.mdim == 0:
                return i - 1
        return None


def minimal_injective_resolution(M: RightModule, max_degree: int) -> MinResolution:
    if max_degree < 0:
        raise ValueError("max_degree must be non-negative")
    F = M.field
    res = MinResolution("injective", M)
    E, emb = injective_envelope(M)
    res.terms.append(E)
    res.maps.append(emb)
    prev, prev_map = E, emb
    for _ in range(max_degree):
        if prev.mdim == 0:
            res.terms.append(zero_module(M.algebra))
            res.maps.append(np.zeros((0, 0), dtype=np.int64))
            continue
        C, P, _ = quotient(prev, prev_map)
        E, emb = injective_envelope(C)
        d = matmul(P, emb, F) if C.mdim else np.zeros((prev.mdim, 0), dtype=np.int64)
        res.terms.append(E)
        res.maps.append(d)
        prev, prev_map = E, d
    return res


def minimal_projective_resolution(M: RightModule, max_degree: int) -> MinResolution:
    if max_degree < 0:
        raise ValueError("max_degree must be non-negative")
    F = M.field
    res = MinResolution("projective", M)
    P, epi = projective_cover(M)
    res.terms.append(P)
    res.maps.append(epi)
    prev, prev_map = P, epi
    for _ in range(max_degree):
        if prev.mdim == 0:
            res.terms.append(zero_module(M.algebra))
            res.maps.append(np.zeros((0, 0), dtype=np.int64))
            continue
        K, inc = kernel_module(prev, prev_map)
        P, epi = projective_cover(K)
        d = matmul(epi, inc, F) if K.mdim else np.zeros((0, prev.mdim), dtype=np.int64)
        res.terms.append(P)
        res.maps.append(d)
        prev, prev_map = P, d
    return res


def check_exact(res: MinResolution) -> bool:
    """Maps are homomorphisms, compose to zero, and ranks add up at every term."""
    F = res.resolved.field
    objs = [res.resolved] + res.terms
    for i, d in enumerate(res.maps):
        if res.direction == "injective":
            src, tgt = objs[i], objs[i + 1]
        else:
            src, tgt = objs[i + 1], objs[i]
        if not is_module_map(src, tgt, d):
            return False
    ranks = [rank(d, F) if d.size else 0 for d in res.maps]
    if res.direction == "injective":
        if ranks[0] != res.resolved.mdim:
            return False
        for i in range(len(res.maps) - 1):
            a, b = res.maps[i], res.maps[i + 1]
            if a.size and b.size and matmul(a, b, F).any():
                return False
            if ranks[i] + ranks[i + 1] != res.terms[i].mdim:
                return False
    else:
        if ranks[0] != res.resolved.mdim:
            return False
        for i in range(len(res.maps) - 1):
            a, b = res.maps[i], res.maps[i + 1]
            if a.size and b.size and matmul(b, a, F).any():
                return False
            if ranks[i] + ranks[i + 1] != res.terms[i].mdim:
                return False
    return True


def check_minimal(res: MinResolution) -> bool:
    """Injective: ``soc I^i`` lies in the image of the incoming map.
    Projective: the kernel of each outgoing map lies in ``P_i J``."""
    F = res.resolved.field
    for i, T in enumerate(res.terms):
        if T.mdim == 0:
            continue
        if res.direction == "injective":
            img = echelon(res.maps[i], F)
            soc = socle_basis(T)
            if reduce_against(soc, *img, F).any():
                return False
        else:
            ker = left_nullspace(res.maps[i], F)
            if ker.shape[0] == 0:
                continue
            rad = echelon(radical_basis(T), F)
            if reduce_against(ker, *rad, F).any():
                return False
    return True


# -- Ext -----------------------------------------------------------------------


def _hom_rank(basis: np.ndarray, images, F) -> int:
    if basis.shape[0] == 0:
        return 0
    flat = np.stack([images(h).reshape(-1) for h in basis])
    return rank(flat, F) if flat.size else 0


def ext_dim(M: RightModule, N: RightModule, i: int, method: str = "projective") -> int:
    """``dim Ext^i(M, N)`` from ``Hom(P_.(M), N)`` or ``Hom(M, I^.(N))``."""
    if i < 0:
        raise ValueError("degree must be non-negative")
    if method == "projective":
        return ext_dims_projective(M, N, i)[i]
    if method == "injective":
        return ext_dims_injective(M, N, i)[i]
    raise ValueError(f"unknown method {method!r}")


def ext_dims_projective(M: RightModule, N: RightModule, top_degree: int, res: MinResolution | None = None) -> list[int]:
    F = M.field
    if res is None or len(res.terms) < top_degree + 2:
        res = minimal_projective_resolution(M, top_degree + 1)
    homs = [hom_space(res.terms[j], N) for j in range(top_degree + 2)]
    # d^j : Hom(P_j, N) -> Hom(P_{j+1}, N), phi -> delta_{j+1} phi
    ranks = []
    for j in range(top_degree + 1):
        delta = res.maps[j + 1]
        if delta.size == 0:
            ranks.append(0)
        else:
            ranks.append(_hom_rank(homs[j], lambda h, dl=delta: matmul(dl, h, F), F))
    out = []
    for j in range(top_degree + 1):
        before = ranks[j - 1] if j else 0
        out.append(homs[j].shape[0] - ranks[j] - before)
    return out


def ext_dims_injective(M: RightModule, N: RightModule, top_degree: int, res: MinResolution | None = None) -> list[int]:
    F = M.field
    if res is None or len(res.terms) < top_degree + 2:
        res = minimal_injective_resolution(N, top_degree + 1)
    homs = [hom_space(M, res.terms[j]) for j in range(top_degree + 2)]
    ranks = []
    for j in range(top_degree + 1):
        d = res.maps[j + 1]
        if d.size == 0:
            ranks.append(0)
        else:
            ranks.append(_hom_rank(homs[j], lambda h, dd=d: matmul(h, dd, F), F))
    out = []
    for j in range(top_degree + 1):
        before = ranks[j - 1] if j else 0
        out.append(homs[j].shape[0] - ranks[j] - before)
    return out


# -- dimensions ----------------------------------------------------------------


def resolution_length(M: RightModule, cap: int) -> ExtDim:
    """Projective dimension read literally off the minimal resolution.

    ``Finite(n)`` when ``P_{n+1} = 0`` and ``P_n != 0``; ``AtLeast(cap)``
    when ``P_cap`` is still nonzero.
    """
    if cap < 1:
        raise ValueError("cap must be at least 1")
    if M.mdim == 0:
        return MINUS_INFINITY
    cur = M
    for n in range(cap):
        P, epi = projective_cover(cur)
        if P.mdim == cur.mdim:
            return Finite(n)
        cur, _ = kernel_module(P, epi)
    return AtLeast(cap)


def support_components(M: RightModule) -> list[np.ndarray]:
    """Coordinate blocks on which every action matrix is block diagonal.

    Each block spans a direct summand, found as a connected component of
    the graph joining ``a`` and ``b`` whenever some ``Act_i[a, b] != 0``.
    """
    m = M.mdim
    adj = (M.action != 0).any(axis=0)
    adj = adj | adj.T
    label = -np.ones(m, dtype=np.int64)
    comps = []
    for start in range(m):
        if label[start] >= 0:
            continue
        label[start] = len(comps)
        members = [start]
        frontier = np.array([start])
        while frontier.size:
            nb = np.flatnonzero(adj[frontier].any(axis=0) & (label < 0))
            label[nb] = len(comps)
            members.extend(nb.tolist())
            frontier = nb
        comps.append(np.array(sorted(members), dtype=np.int64))
    return comps


def restrict(M: RightModule, idx: np.ndarray) -> RightModule:
    act = M.action[:, idx][:, :, idx]
    return RightModule(M.algebra, act, name=f"{M.name}|blk")


_INFINITE = "infinite"


class _PdSolver:
    """Exact projective dimension with three reductions.

    ``pd`` of a direct sum is the maximum over the summands (support
    blocks); a semisimple block has the maximum ``pd`` of the simples it
    contains; and when a syzygy has a summand isomorphic to a module
    still being resolved, that module has infinite ``pd``.  Results for
    small indecomposable-looking blocks are remembered per algebra.
    """

    memo_limit = 96

    def __init__(self, A: StructureAlgebra):
        self.A = A
        self.memo: list[tuple[RightModule, object]] = A.derived.setdefault("pd_memo", [])
        self.J = None

    def pieces(self, X: RightModule) -> list[RightModule]:
        out: list[RightModule] = []
        comps = support_components(X)
        blocks = [X] if len(comps) == 1 else [restrict(X, c) for c in comps]
        for B in blocks:
            if not radical_basis(B).shape[0]:
                for S in simple_modules(self.A):
                    if S.mdim <= B.mdim and hom_space(S, B).shape[0]:
                        out.append(S)
            else:
                out.append(B)
        uniq: list[RightModule] = []
        for B in out:
            if not any(_same(B, C) for C in uniq):
                uniq.append(B)
        return uniq

    def lookup(self, X: RightModule):
        if X.mdim > self.memo_limit:
            return None
        for Y, val in self.memo:
            if _same_or_iso(X, Y):
                return val
        return None

    def store(self, X: RightModule, val):
        if X.mdim > self.memo_limit:
            return
        for k, (Y, _) in enumerate(self.memo):
            if _same_or_iso(X, Y):
                self.memo[k] = (Y, val)
                return
        self.memo.append((X, val))

    def solve(self, M: RightModule, cap: int) -> ExtDim:
        if cap < 1:
            raise ValueError("cap must be at least 1")
        if M.mdim == 0:
            return MINUS_INFINITY
        val = self._pd(M, cap, [])
        return AtLeast(cap) if val == _INFINITE else val

    def _pd(self, X: RightModule, budget: int, stack: list[RightModule]):
        pieces = self.pieces(X)
        if len(pieces) > 1 or pieces[0] is not X:
            out = MINUS_INFINITY
            for Y in pieces:
                v = self._pd_block(Y, budget, stack)
                if v == _INFINITE:
                    return _INFINITE
                out = out.join(v)
            return out
        return self._pd_block(X, budget, stack)

    def _pd_block(self, X: RightModule, budget: int, stack: list[RightModule]):
        known = self.lookup(X)
        if known == _INFINITE or (isinstance(known, ExtDim) and known.is_finite):
            return known if known == _INFINITE or known.value < budget else AtLeast(budget)
        if isinstance(known, ExtDim) and known.value >= budget:
            return AtLeast(budget)
        if any(Y.mdim == X.mdim and _same_or_iso(X, Y) for Y in stack):
            return _INFINITE
        P, epi = projective_cover(X)
        if P.mdim == X.mdim:
            self.store(X, Finite(0))
            return Finite(0)
        if budget == 1:
            self.store(X, AtLeast(1))
            return AtLeast(1)
        K, _ = kernel_module(P, epi)
        sub = self._pd(K, budget - 1, stack + [X])
        val = sub if sub == _INFINITE else sub.plus(1)
        self.store(X, val)
        return val


def _same(X: RightModule, Y: RightModule) -> bool:
    return X.mdim == Y.mdim and np.array_equal(X.action, Y.action)


def _same_or_iso(X: RightModule, Y: RightModule) -> bool:
    if X.mdim != Y.mdim:
        return False
    if _same(X, Y):
        return True
    try:
        return is_isomorphic(X, Y)
    except Inconclusive:
        return False


def projective_dimension(M: RightModule, cap: int) -> ExtDim:
    """Projective (= flat) dimension of ``M``, censored at ``cap``.

    Agrees with :func:`resolution_length`; see :class:`_PdSolver` for the
    reductions that keep large direct sums cheap.
    """
    return _PdSolver(M.algebra).solve(M, cap)


def projective_dimension_by_ext(M: RightModule, cap: int) -> ExtDim:
    """Smallest ``n`` with ``Ext^{n+1}(M, A/J) = 0``, using the injective route."""
    if M.mdim == 0:
        return MINUS_INFINITY
    T, _ = top(regular_module(M.algebra))
    key = ("top_injective_resolution", cap)
    A = M.algebra
    res = A.derived.get(key)
    if res is None:
        res = minimal_injective_resolution(T, cap + 1)
        A.derived[key] = res
    dims = ext_dims_injective(M, T, cap, res)
    for n in range(cap):
        if dims[n + 1] == 0:
            return Finite(n)
    return AtLeast(cap)


def injective_dimension(M: RightModule, cap: int) -> ExtDim:
    if M.mdim == 0:
        return MINUS_INFINITY
    return projective_dimension(dual(M), cap)


def is_injective(M: RightModule) -> bool:
    return all(ext_dim(S, M, 1) == 0 for S in simple_modules(M.algebra))


def is_projective(M: RightModule) -> bool:
    if M.mdim == 0:
        return True
    dims = ext_dims_projective_all_simples(M, 1)
    return all(d == 0 for d in dims)


def ext_dims_projective_all_simples(M: RightModule, i: int) -> list[int]:
    res = minimal_projective_resolution(M, i + 1)
    return [ext_dims_projective(M, S, i, res)[i] for S in simple_modules(M.algebra)]


def bass_numbers(M: RightModule, i: int) -> tuple[int, ...]:
    """Multiplicity of each ``E(S_k)`` in ``I^i(M)``: ``dim Ext^i(S_k, M) / dim End(S_k)``."""
    out = []
    for S in simple_modules(M.algebra):
        e = ext_dim(S, M, i)
        out.append(e // end_dim(S))
    return tuple(out)


def socle_multiplicities(M: RightModule) -> tuple[int, ...]:
    """Multiplicity of each simple in ``soc M`` (equals the Bass numbers when ``M`` is injective)."""
    return tuple(
        hom_space(S, M).shape[0] // end_dim(S) for S in simple_modules(M.algebra)
    )


# -- the r.fd profile ------------------------------------------------------------


@dataclass(frozen=True)
class RfdProfile:
    label: str
    entries: tuple[ExtDim, ...]
    cap: int
    dims: tuple[int, ...] = ()
    bass: tuple[tuple[int, ...], ...] = ()

    def __getitem__(self, i: int) -> ExtDim:
        if i < 0:
            return MINUS_INFINITY
        return self.entries[i]

    def __len__(self):
        return len(self.entries)

    def render(self, compat: bool = False) -> str:
        return "<" + ", ".join(e.render(compat) for e in self.entries) + ">"


def simple_envelope_dimensions(A: StructureAlgebra, cap: int) -> list[ExtDim]:
    key = ("simple_envelope_pd", cap)
    if key not in A.derived:
        A.derived[key] = [
            projective_dimension(simple_envelope(A, k)[0], cap) for k in range(len(simple_modules(A)))
        ]
    return A.derived[key]


def rfd_profile(
    A: StructureAlgebra,
    max_degree: int,
    cap: int,
    route: str = "both",
    seed: int = DEFAULT_SEED,
) -> RfdProfile:
    """``pd I^i(A_A)`` for ``i = 0..max_degree``.

    ``route="direct"`` resolves the regular module and measures each term;
    ``route="bass"`` reads the terms off Bass numbers ``Ext^i(S, A)`` and
    the dimensions of the simple envelopes; ``"both"`` runs the two and
    raises :class:`RouteMismatch` if they disagree.
    """
    if route not in ("direct", "bass", "both"):
        raise ValueError(f"unknown route {route!r}")
    R = regular_module(A)
    simple_modules(A, seed)
    key = ("rfd_profile", max_degree, cap, route)
    if key in A.derived:
        return A.derived[key]
    direct = bass_entries = None
    dims: tuple[int, ...] = ()
    bass: tuple[tuple[int, ...], ...] = ()
    if route in ("direct", "both"):
        res = minimal_injective_resolution(R, max_degree)
        direct = tuple(projective_dimension(T, cap) for T in res.terms)
        dims = tuple(res.dims)
    if route in ("bass", "both"):
        simples = simple_modules(A)
        pds = simple_envelope_dimensions(A, cap)
        Pres = minimal_projective_resolution_cached(A, max_degree)
        exts = [ext_dims_projective(S, R, max_degree, Pres[k]) for k, S in enumerate(simples)]
        ends = [end_dim(S) for S in simples]
        bass = tuple(
            tuple(exts[k][i] // ends[k] for k in range(len(simples))) for i in range(max_degree + 1)
        )
        bass_entries = tuple(
            join_all(pds[k] for k in range(len(simples)) if bass[i][k]) for i in range(max_degree + 1)
        )
        if not dims:
            dims = tuple(
                sum(bass[i][k] * simple_envelope(A, k)[0].mdim for k in range(len(simples)))
                for i in range(max_degree + 1)
            )
    if direct is not None and bass_entries is not None and direct != bass_entries:
        raise RouteMismatch(
            f"{A.name}: direct {[str(e) for e in direct]} vs bass {[str(e) for e in bass_entries]}"
        )
    entries = direct if direct is not None else bass_entries
    prof = RfdProfile(A.name, entries, cap, dims, bass)
    A.derived[key] = prof
    return prof


def minimal_projective_resolution_cached(A: StructureAlgebra, max_degree: int) -> list[MinResolution]:
    """Projective resolutions of every simple, to degree ``max_degree + 1``."""
    key = ("simple_projective_resolutions", max_degree)
    if key not in A.derived:
        A.derived[key] = [minimal_projective_resolution(S, max_degree + 1) for S in simple_modules(A)]
    return A.derived[key]
