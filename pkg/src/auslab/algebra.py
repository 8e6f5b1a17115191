"""Finite-dimensional associative unital algebras given by structure constants.

An algebra of dimension ``d`` over F_p stores ``mult[i, j]``, the
coefficient vector of ``e_i * e_j``, and the coefficient vector of 1.
Triangular constructions record the block idempotents so that modules
over them can be sliced back into triples (see :mod:`auslab.triples`).
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path

import numpy as np

from .linalg import PrimeField, echelon, matmul, rank, reduce_against


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class InvalidBimodule(ValueError):
    pass


class StructureAlgebra:
    """Associative unital algebra over a prime field.

    Instances are treated as immutable.  Derived data (opposite algebra,
    generators, radical and simple modules) is cached on the instance.
    """

    def __init__(self, field: PrimeField | int, mult, unit, name: str = "A"):
        self.field = field if isinstance(field, PrimeField) else PrimeField(field)
        p = self.field.p
        mult = np.asarray(mult, dtype=np.int64) % p
        unit = np.asarray(unit, dtype=np.int64).reshape(-1) % p
        d = unit.shape[0]
        if d < 1 or mult.shape != (d, d, d):
            raise ValueError(f"structure constants of shape {mult.shape} do not match dim {d}")
        mult.setflags(write=False)
        unit.setflags(write=False)
        self.mult = mult
        self.unit = unit
        self.name = name
        # derived data (radical, simples, envelopes of simples) filled in lazily
        self.derived: dict = {}

    @property
    def dim(self) -> int:
        return self.unit.shape[0]

    @property
    def p(self) -> int:
        return self.field.p

    def __repr__(self):
        return f"StructureAlgebra({self.name!r}, p={self.p}, dim={self.dim})"

    def same_table(self, other: "StructureAlgebra") -> bool:
        return (
            self.p == other.p
            and self.dim == other.dim
            and np.array_equal(self.mult, other.mult)
            and np.array_equal(self.unit, other.unit)
        )

    def __eq__(self, other):
        if not isinstance(other, StructureAlgebra):
            return NotImplemented
        return self is other or self.same_table(other)

    def __hash__(self):
        return hash((self.p, self.dim, self.mult.tobytes(), self.unit.tobytes()))

    # -- arithmetic -------------------------------------------------------

    def basis_vector(self, i: int) -> np.ndarray:
        v = np.zeros(self.dim, dtype=np.int64)
        v[i] = 1
        return v

    def mul(self, u, v) -> np.ndarray:
        u = np.asarray(u, dtype=np.int64)
        v = np.asarray(v, dtype=np.int64)
        return np.einsum("i,j,ijk->k", u, v, self.mult) % self.p

    @cached_property
    def right_mult(self) -> np.ndarray:
        """``right_mult[i]`` is the matrix of ``x -> x * e_i`` (row convention)."""
        R = np.ascontiguousarray(self.mult.transpose(1, 0, 2))
        R.setflags(write=False)
        return R

    @cached_property
    def left_mult(self) -> np.ndarray:
        """``left_mult[i]`` is the matrix of ``x -> e_i * x`` (row convention)."""
        L = self.mult.copy()
        L.setflags(write=False)
        return L

    def validate(self) -> list[str]:
        """Violated axioms, empty when the table is associative and unital."""
        p = self.p
        c = self.mult
        problems = []
        lhs = np.einsum("ijk,klx->ijlx", c, c) % p
        rhs = np.einsum("jlk,ikx->ijlx", c, c) % p
        bad = np.argwhere((lhs != rhs).any(axis=3))
        if bad.size:
            i, j, l = (int(x) for x in bad[0])
            problems.append(f"associativity fails at ({i},{j},{l})")
        left_unit = np.einsum("i,ijk->jk", self.unit, c) % p
        right_unit = np.einsum("j,ijk->ik", self.unit, c) % p
        eye = np.eye(self.dim, dtype=np.int64)
        for i in range(self.dim):
            if not np.array_equal(left_unit[i], eye[i]):
                problems.append(f"1*e_{i} != e_{i}")
                break
        for i in range(self.dim):
            if not np.array_equal(right_unit[i], eye[i]):
                problems.append(f"e_{i}*1 != e_{i}")
                break
        return problems

    def is_valid(self) -> bool:
        return not self.validate()

    @cached_property
    def opposite(self) -> "StructureAlgebra":
        op = StructureAlgebra(self.field, self.mult.transpose(1, 0, 2), self.unit, name=f"{self.name}^op")
        op.__dict__["opposite"] = self
        return op

    @cached_property
    def generators(self) -> np.ndarray:
        """Coefficient rows of elements generating the algebra.

        Tries one to four seeded random elements first; falls back to a
        greedy choice of basis elements.
        """
        F = self.field
        d = self.dim
        rng = np.random.default_rng(0xA05)
        for k in (1, 2, 3, 4):
            for _ in range(8):
                G = F.random(rng, k, d)
                if subalgebra_dim(self, G) == d:
                    G.setflags(write=False)
                    return G
        rows: list[np.ndarray] = []
        sub, piv = echelon(self.unit.reshape(1, -1), F)
        for i in range(d):
            if sub.shape[0] == d:
                break
            e = self.basis_vector(i).reshape(1, -1)
            if not reduce_against(e, sub, piv, F).any():
                continue
            rows.append(e[0])
            sub, piv = _spin(sub, [element_action(self.right_mult, g, self.p) for g in rows], F)
        G = np.array(rows, dtype=np.int64).reshape(-1, d)
        G.setflags(write=False)
        return G

    def is_commutative(self) -> bool:
        return np.array_equal(self.mult, self.mult.transpose(1, 0, 2))


def _spin(V: np.ndarray, mats, F: PrimeField, base=None) -> tuple[np.ndarray, list[int]]:
    """Smallest subspace containing the rows of ``V`` and stable under ``mats``.

    ``base`` may supply an already stable ``(echelon, pivots)`` pair to grow from.
    """
    if base is None:
        E, piv = echelon(V, F)
        frontier = E
    else:
        E, piv = base
        frontier = echelon(reduce_against(np.asarray(V, dtype=np.int64).reshape(-1, E.shape[1]), E, piv, F), F)[0]
        if frontier.shape[0] == 0:
            return E, piv
        E, piv = echelon(np.concatenate([E, frontier], axis=0), F)
    while frontier.shape[0] and mats:
        cand = np.concatenate([matmul(frontier, G, F) for G in mats], axis=0)
        res = reduce_against(cand, E, piv, F)
        new, _ = echelon(res, F)
        if new.shape[0] == 0:
            break
        E, piv = echelon(np.concatenate([E, new], axis=0), F)
        frontier = new
    return E, piv


def element_action(actions: np.ndarray, a, p: int) -> np.ndarray:
    """Matrix of the algebra element with coefficients ``a`` given basis actions."""
    a = np.asarray(a, dtype=np.int64)
    return np.tensordot(a, actions, axes=1) % p


# -- bimodules ------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class BimoduleData:
    """An S-R-bimodule ``M``.

    ``left[s]`` acts on column vectors (``s . x = left[s] @ x``) and
    ``right[r]`` acts on row vectors (``x . r = x @ right[r]``).
    """

    left_algebra: StructureAlgebra
    right_algebra: StructureAlgebra
    mdim: int
    left: np.ndarray
    right: np.ndarray
    name: str = "M"

    def __post_init__(self):
        m = self.mdim
        if self.left.shape != (self.left_algebra.dim, m, m):
            raise InvalidBimodule(f"left action has shape {self.left.shape}")
        if self.right.shape != (self.right_algebra.dim, m, m):
            raise InvalidBimodule(f"right action has shape {self.right.shape}")

    @property
    def field(self) -> PrimeField:
        return self.right_algebra.field

    def left_row(self) -> np.ndarray:
        """Left action as row-convention matrices (``x -> s.x`` for row ``x``)."""
        return np.ascontiguousarray(self.left.transpose(0, 2, 1))

    def validate(self) -> list[str]:
        S, R = self.left_algebra, self.right_algebra
        p = R.p
        m = self.mdim
        problems = []
        if S.p != R.p:
            return ["left and right algebras live over different fields"]
        eye = np.eye(m, dtype=np.int64)
        if not np.array_equal(element_action(self.left, S.unit, p), eye):
            problems.append("left unit does not act as identity")
        if not np.array_equal(element_action(self.right, R.unit, p), eye):
            problems.append("right unit does not act as identity")
        L, Rt = self.left, self.right
        prodL = np.einsum("iab,jbc->ijac", L, L) % p
        wantL = np.einsum("ijk,kac->ijac", S.mult, L) % p
        if not np.array_equal(prodL, wantL):
            problems.append("left action is not multiplicative")
        prodR = np.einsum("iab,jbc->ijac", Rt, Rt) % p
        wantR = np.einsum("ijk,kac->ijac", R.mult, Rt) % p
        if not np.array_equal(prodR, wantR):
            problems.append("right action is not multiplicative")
        Lrow = self.left_row()
        a = np.einsum("sab,rbc->srac", Lrow, Rt) % p
        b = np.einsum("rab,sbc->srac", Rt, Lrow) % p
        if not np.array_equal(a, b):
            problems.append("left and right actions do not commute")
        return problems


def regular_bimodule(A: StructureAlgebra) -> BimoduleData:
    """``A`` as an A-A-bimodule."""
    # left mult by e_s on column coefficient vectors: (L_s)[k, a] = c[s, a, k]
    left = np.ascontiguousarray(A.mult.transpose(0, 2, 1))
    return BimoduleData(A, A, A.dim, left, np.array(A.right_mult), name=A.name)


def zero_bimodule(S: StructureAlgebra, R: StructureAlgebra) -> BimoduleData:
    return BimoduleData(S, R, 0, np.zeros((S.dim, 0, 0), dtype=np.int64), np.zeros((R.dim, 0, 0), dtype=np.int64), "0")


# -- constructors ---------------------------------------------------------


def truncated_polynomial(p: int, n: int) -> StructureAlgebra:
    """F_p[x]/(x^n) with basis 1, x, ..., x^(n-1)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    c = np.zeros((n, n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            if i + j < n:
                c[i, j, i + j] = 1
    unit = np.zeros(n, dtype=np.int64)
    unit[0] = 1
    name = f"F_{p}" if n == 1 else (f"F_{p}[x]/(x^{n})")
    return StructureAlgebra(p, c, unit, name)


def prime_field(p: int) -> StructureAlgebra:
    return truncated_polynomial(p, 1)


def product(A: StructureAlgebra, B: StructureAlgebra) -> StructureAlgebra:
    if A.p != B.p:
        raise ValueError("factors live over different fields")
    a, b = A.dim, B.dim
    c = np.zeros((a + b,) * 3, dtype=np.int64)
    c[:a, :a, :a] = A.mult
    c[a:, a:, a:] = B.mult
    unit = np.concatenate([A.unit, B.unit])
    return StructureAlgebra(A.field, c, unit, f"{A.name}x{B.name}")


def path_algebra_A2(p: int) -> StructureAlgebra:
    """Path algebra of ``1 --a--> 2`` with basis e1, e2, a and ``e1 a = a = a e2``."""
    c = np.zeros((3, 3, 3), dtype=np.int64)
    c[0, 0, 0] = 1
    c[1, 1, 1] = 1
    c[0, 2, 2] = 1
    c[2, 1, 2] = 1
    return StructureAlgebra(p, c, [1, 1, 0], f"kA2_{p}")


def local_rad_square_zero(p: int) -> StructureAlgebra:
    """F_p<x,y>/(x,y)^2, commutative, basis 1, x, y."""
    c = np.zeros((3, 3, 3), dtype=np.int64)
    for i in range(3):
        c[0, i, i] = 1
        c[i, 0, i] = 1
    return StructureAlgebra(p, c, [1, 0, 0], f"F_{p}<x,y>/(x,y)^2")


def matrix_algebra(p: int, n: int) -> StructureAlgebra:
    """M_n(F_p) with basis E_ij at index ``i*n + j``."""
    d = n * n
    c = np.zeros((d, d, d), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            for l in range(n):
                c[i * n + j, j * n + l, i * n + l] = 1
    unit = np.zeros(d, dtype=np.int64)
    for i in range(n):
        unit[i * n + i] = 1
    return StructureAlgebra(p, c, unit, f"M_{n}(F_{p})")


def triangular_index(t: int) -> list[tuple[int, int]]:
    """Matrix positions ``(i, j)``, 1-based with ``j <= i``, in lexicographic order."""
    return [(i, j) for i in range(1, t + 1) for j in range(1, i + 1)]


def lower_triangular(A: StructureAlgebra, t: int) -> StructureAlgebra:
    """T_t(A): lower triangular t x t matrices over A.

    Basis ``E_ij (x) e_a`` ordered lexicographically on ``(i, j, a)``.
    """
    if t < 1:
        raise ValueError("t must be at least 1")
    pos = triangular_index(t)
    where = {ij: k for k, ij in enumerate(pos)}
    d = A.dim
    D = len(pos) * d
    c = np.zeros((D, D, D), dtype=np.int64)
    for (i, j), u in where.items():
        for (k, l), v in where.items():
            if j != k:
                continue
            w = where[(i, l)]
            c[u * d : (u + 1) * d, v * d : (v + 1) * d, w * d : (w + 1) * d] = A.mult
    unit = np.zeros(D, dtype=np.int64)
    for i in range(1, t + 1):
        u = where[(i, i)]
        unit[u * d : (u + 1) * d] = A.unit
    name = A.name if t == 1 else f"T_{t}({A.name})"
    return StructureAlgebra(A.field, c, unit, name)


@dataclass(frozen=True, eq=False)
class TriangularAlgebra:
    """Λ = [[R, 0], [M, S]] with its blocks.

    The basis of ``algebra`` is the R basis, then the M basis, then the
    S basis; an element ``(r, m, s)`` is the matrix ``[[r, 0], [m, s]]``.
    """

    R: StructureAlgebra
    S: StructureAlgebra
    M: BimoduleData
    algebra: StructureAlgebra = field(repr=False)

    @property
    def r_slice(self) -> slice:
        return slice(0, self.R.dim)

    @property
    def m_slice(self) -> slice:
        return slice(self.R.dim, self.R.dim + self.M.mdim)

    @property
    def s_slice(self) -> slice:
        return slice(self.R.dim + self.M.mdim, self.algebra.dim)

    @property
    def e_R(self) -> np.ndarray:
        e = np.zeros(self.algebra.dim, dtype=np.int64)
        e[self.r_slice] = self.R.unit
        return e

    @property
    def e_S(self) -> np.ndarray:
        e = np.zeros(self.algebra.dim, dtype=np.int64)
        e[self.s_slice] = self.S.unit
        return e

    def embed(self, r=None, m=None, s=None) -> np.ndarray:
        v = np.zeros(self.algebra.dim, dtype=np.int64)
        if r is not None:
            v[self.r_slice] = r
        if m is not None:
            v[self.m_slice] = m
        if s is not None:
            v[self.s_slice] = s
        return v


def triangular_from_bimodule(R: StructureAlgebra, S: StructureAlgebra, M: BimoduleData, name: str | None = None) -> TriangularAlgebra:
    """Λ = [[R, 0], [M, S]] for an S-R-bimodule M.

    Multiplication follows ``(r, m, s)(r', m', s') = (rr', m.r' + s.m', ss')``.
    """
    if M.left_algebra != S or M.right_algebra != R:
        raise InvalidBimodule("bimodule algebras do not match the diagonal blocks")
    problems = M.validate()
    if problems:
        raise InvalidBimodule("; ".join(problems))
    dr, dm, ds = R.dim, M.mdim, S.dim
    D = dr + dm + ds
    c = np.zeros((D, D, D), dtype=np.int64)
    r0, m0, s0 = 0, dr, dr + dm
    c[r0:m0, r0:m0, r0:m0] = R.mult
    c[s0:, s0:, s0:] = S.mult
    # m_b . r_j = row b of right[j]
    for j in range(dr):
        c[m0:s0, r0 + j, m0:s0] = M.right[j]
    # s_i . m_b = column b of left[i]
    for i in range(ds):
        c[s0 + i, m0:s0, m0:s0] = M.left[i].T
    unit = np.concatenate([R.unit, np.zeros(dm, dtype=np.int64), S.unit])
    lam = StructureAlgebra(R.field, c, unit, name or f"[[{R.name},0],[{M.name},{S.name}]]")
    return TriangularAlgebra(R, S, M, lam)


def row_bimodule(A: StructureAlgebra, t: int, T_prev: StructureAlgebra | None = None) -> BimoduleData:
    """A^(t-1): row vectors of length t-1, an A-T_{t-1}(A)-bimodule."""
    if t < 2:
        raise ValueError("row bimodule needs t >= 2")
    T_prev = T_prev if T_prev is not None else lower_triangular(A, t - 1)
    d = A.dim
    n = t - 1
    m = n * d
    left = np.zeros((d, m, m), dtype=np.int64)
    L = A.mult.transpose(0, 2, 1)  # column-convention left multiplication
    for j in range(n):
        left[:, j * d : (j + 1) * d, j * d : (j + 1) * d] = L
    pos = triangular_index(n)
    right = np.zeros((T_prev.dim, m, m), dtype=np.int64)
    for u, (k, l) in enumerate(pos):
        for b in range(d):
            # row vector with a at position k, times E_kl (x) b, lands at position l
            right[u * d + b, (k - 1) * d : k * d, (l - 1) * d : l * d] = A.right_mult[b]
    return BimoduleData(A, T_prev, m, left, right, name=f"{A.name}^({n})")


def lemma23_triangular(A: StructureAlgebra, t: int) -> TriangularAlgebra:
    """T_t(A) assembled as [[T_{t-1}(A), 0], [A^(t-1), A]]."""
    if t < 2:
        raise ValueError("the block form needs t >= 2")
    R = A if t == 2 else lemma23_triangular(A, t - 1).algebra
    M = row_bimodule(A, t, R)
    return triangular_from_bimodule(R, A, M, name=f"T_{t}({A.name})")


def corner_bimodule(tri: TriangularAlgebra) -> BimoduleData:
    """``eΛ`` for ``e = e_S`` as an eΛe-Λ-bimodule, with eΛe identified with S."""
    lam = tri.algebra
    p = lam.p
    idx = list(range(tri.m_slice.start, lam.dim))
    m = len(idx)
    right = np.ascontiguousarray(lam.right_mult[:, idx][:, :, idx])
    left = np.zeros((tri.S.dim, m, m), dtype=np.int64)
    for i in range(tri.S.dim):
        # left multiplication by (0, 0, s_i), column convention
        left[i] = lam.mult[tri.s_slice.start + i][idx][:, idx].T
    return BimoduleData(tri.S, lam, m, left % p, right % p, name=f"e{lam.name}")


# -- text format ----------------------------------------------------------

_COMMENT = re.compile(r"#.*$")


def _content_lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        line = _COMMENT.sub("", raw).strip()
        if line:
            yield no, line.split()


def _ints(tokens, no) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError as exc:
        raise ParseError(f"expected integers, got {' '.join(tokens)!r}", no) from exc


def parse_algebra(text: str, name: str = "A") -> StructureAlgebra:
    p = dim = None
    unit = None
    entries: dict[tuple[int, int], list[int]] = {}
    for no, tok in _content_lines(text):
        key, rest = tok[0], tok[1:]
        if key == "p":
            if p is not None or len(rest) != 1:
                raise ParseError("bad or repeated 'p' line", no)
            p = _ints(rest, no)[0]
            try:
                PrimeField(p)
            except ValueError as exc:
                raise ParseError(str(exc), no) from exc
        elif key == "dim":
            if dim is not None or len(rest) != 1:
                raise ParseError("bad or repeated 'dim' line", no)
            dim = _ints(rest, no)[0]
            if dim < 1:
                raise ParseError("dim must be positive", no)
        elif key == "unit":
            if dim is None:
                raise ParseError("'unit' before 'dim'", no)
            if unit is not None:
                raise ParseError("repeated 'unit' line", no)
            unit = _ints(rest, no)
            if len(unit) != dim:
                raise ParseError(f"unit needs {dim} coefficients", no)
        elif key == "mult":
            if dim is None:
                raise ParseError("'mult' before 'dim'", no)
            vals = _ints(rest, no)
            if len(vals) != dim + 2:
                raise ParseError(f"mult needs 2 indices and {dim} coefficients", no)
            i, j = vals[0], vals[1]
            if not (0 <= i < dim and 0 <= j < dim):
                raise ParseError(f"index out of range in mult {i} {j}", no)
            if (i, j) in entries:
                raise ParseError(f"duplicate mult line for ({i},{j})", no)
            entries[(i, j)] = vals[2:]
        else:
            raise ParseError(f"unknown keyword {key!r}", no)
    if p is None:
        raise ParseError("missing 'p' line")
    if dim is None:
        raise ParseError("missing 'dim' line")
    if unit is None:
        raise ParseError("missing 'unit' line")
    c = np.zeros((dim, dim, dim), dtype=np.int64)
    for (i, j), v in entries.items():
        c[i, j] = v
    return StructureAlgebra(p, c, unit, name)


def dump_algebra(A: StructureAlgebra) -> str:
    lines = [f"p {A.p}", f"dim {A.dim}", "unit " + " ".join(str(int(x)) for x in A.unit)]
    for i in range(A.dim):
        for j in range(A.dim):
            lines.append(f"mult {i} {j} " + " ".join(str(int(x)) for x in A.mult[i, j]))
    return "\n".join(lines) + "\n"


def load_algebra(path: str | Path) -> StructureAlgebra:
    path = Path(path)
    return parse_algebra(path.read_text(encoding="utf-8"), name=path.stem)


def save_algebra(A: StructureAlgebra, path: str | Path) -> None:
    Path(path).write_text(dump_algebra(A), encoding="utf-8")


def subalgebra_dim(A: StructureAlgebra, elements) -> int:
    """Dimension of the subalgebra generated by the given elements."""
    mats = [element_action(A.right_mult, g, A.p) for g in np.asarray(elements).reshape(-1, A.dim)]
    E, _ = _spin(A.unit.reshape(1, -1), mats, A.field)
    return rank(E, A.field)
