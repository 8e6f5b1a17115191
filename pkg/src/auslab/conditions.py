"""Auslander-type conditions on the r.fd profile and the transfer checks for T_t.

All verdicts are three-valued: a cap-censored entry ``>=c`` can leave a
bound undecided, in which case the report says so instead of guessing.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import StructureAlgebra, lemma23_triangular, lower_triangular
from .homological import MINUS_INFINITY, ExtDim, RfdProfile, rfd_profile

HOLDS, FAILS, INCONCLUSIVE = "holds", "fails", "inconclusive"
VERIFIED, REFUTED, CONSISTENT = "verified", "refuted", "consistent-under-cap"


def default_cap(*bounds: int) -> int:
    """A cap strictly above every bound being tested."""
    return max(1, sum(max(b, 0) for b in bounds) + 3)


def _serialize(pairs: dict) -> str:
    return "".join(f"{k}\t{pairs[k]}\n" for k in sorted(pairs))


@dataclass
class ConditionReport:
    label: str
    params: dict
    verdict: str
    witness: tuple[ExtDim, ...]
    cap: int
    violated_index: int | None = None
    violated_value: ExtDim | None = None
    algebra: str = ""

    @property
    def holds(self) -> bool | None:
        return {HOLDS: True, FAILS: False}.get(self.verdict)

    def as_dict(self) -> dict:
        d = {
            "algebra": self.algebra,
            "cap": self.cap,
            "condition": self.label,
            "verdict": self.verdict if self.verdict != INCONCLUSIVE else f"inconclusive({self.cap})",
            "witness": " ".join(e.render() for e in self.witness),
        }
        for k, v in self.params.items():
            d[f"param.{k}"] = v
        if self.violated_index is not None:
            d["violated.index"] = self.violated_index
            d["violated.value"] = self.violated_value.render()
        return d

    def serialize(self) -> str:
        return _serialize(self.as_dict())


def _bounded(A, profile: RfdProfile, label, params, bounds, cap) -> ConditionReport:
    """Check ``profile[i] <= bounds[i]`` for each listed index."""
    undecided = False
    for i, b in enumerate(bounds):
        ok = profile[i].leq(b)
        if ok is False:
            return ConditionReport(label, params, FAILS, profile.entries[: len(bounds)], cap, i, profile[i], A.name)
        if ok is None:
            undecided = True
    verdict = INCONCLUSIVE if undecided else HOLDS
    return ConditionReport(label, params, verdict, profile.entries[: len(bounds)], cap, algebra=A.name)


def _profile(A: StructureAlgebra, top: int, cap: int, route: str) -> RfdProfile:
    return rfd_profile(A, max(top, 0), cap, route=route)


def is_Gnk(A: StructureAlgebra, n: int, k: int, cap: int | None = None, route: str = "both") -> ConditionReport:
    """``pd I^i(A) <= i + k`` for ``0 <= i <= n - 1``."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be non-negative")
    cap = cap or default_cap(n, k)
    prof = _profile(A, n - 1, cap, route)
    return _bounded(A, prof, "G_n(k)", {"n": n, "k": k}, [i + k for i in range(n)], cap)


def is_ln_op(A: StructureAlgebra, l: int, n: int, cap: int | None = None, route: str = "both") -> ConditionReport:
    """``pd I^i(A) <= l - 1`` for ``0 <= i <= n - 1``."""
    if n < 0 or l < 0:
        raise ValueError("l and n must be non-negative")
    cap = cap or default_cap(l, n)
    prof = _profile(A, n - 1, cap, route)
    return _bounded(A, prof, "(l,n)^op", {"l": l, "n": n}, [l - 1] * n, cap)


def _all3(values) -> bool | None:
    values = list(values)
    if any(v is False for v in values):
        return False
    if any(v is None for v in values):
        return None
    return True


def _agreement(a: bool | None, b: bool | None) -> str:
    if a is None or b is None:
        return CONSISTENT
    return VERIFIED if a == b else REFUTED


@dataclass
class TheoremReport:
    theorem: str
    algebra: str
    t: int | None
    params: dict
    rows: list[dict] = field(default_factory=list)
    checks: list[tuple[str, str]] = field(default_factory=list)
    verdict: str = VERIFIED
    hypotheses: list[tuple[str, bool]] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        d = {"theorem": self.theorem, "algebra": self.algebra, "verdict": self.verdict}
        if self.t is not None:
            d["t"] = self.t
        for k, v in self.params.items():
            d[f"param.{k}"] = v
        for r in self.rows:
            i = r["i"]
            for key, val in r.items():
                if key != "i":
                    d[f"row.{i:03d}.{key}"] = val
        for name, v in self.checks:
            d[f"check.{name}"] = v
        for name, ok in self.hypotheses:
            d[f"hypothesis.{name}"] = "ok" if ok else "failed"
        for j, note in enumerate(self.notes):
            d[f"note.{j:02d}"] = note
        return d

    def serialize(self) -> str:
        return _serialize(self.as_dict())


def _combine(verdicts) -> str:
    verdicts = list(verdicts)
    if REFUTED in verdicts:
        return REFUTED
    if CONSISTENT in verdicts:
        return CONSISTENT
    return VERIFIED


def _hypotheses(A: StructureAlgebra, T: StructureAlgebra) -> list[tuple[str, bool]]:
    return [("base algebra valid", A.is_valid()), ("triangular algebra valid", T.is_valid())]


def _refuted_note(report: TheoremReport):
    if report.verdict == REFUTED:
        failed = [n for n, ok in report.hypotheses if not ok]
        if failed:
            report.notes.append("hypothesis check failed: " + ", ".join(failed))
        else:
            report.notes.append("all hypothesis checks passed; the discrepancy points at the implementation")


def gnk_iff_lnop(A: StructureAlgebra, n: int, k: int, cap: int | None = None) -> TheoremReport:
    """``G_n(k)`` against the family of ``(k+i, i)^op`` conditions, ``1 <= i <= n``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    cap = cap or default_cap(n, k)
    lhs = is_Gnk(A, n, k, cap)
    parts = [is_ln_op(A, k + i, i, cap) for i in range(1, n + 1)]
    rhs = _all3(p.holds for p in parts)
    rep = TheoremReport("Gnk<->lnop", A.name, None, {"n": n, "k": k, "cap": cap})
    rep.checks.append(("lhs.G_n(k)", lhs.verdict))
    for i, p in enumerate(parts, start=1):
        rep.checks.append((f"rhs.({k + i},{i})^op", p.verdict))
    rep.verdict = _agreement(lhs.holds, rhs)
    return rep


@dataclass
class DominantReport:
    algebra: str
    max_n: int
    cap: int
    dominant: list[int]
    inconclusive: list[int]
    profile: tuple[ExtDim, ...]

    def as_dict(self) -> dict:
        return {
            "algebra": self.algebra,
            "cap": self.cap,
            "condition": "dominant",
            "dominant": " ".join(map(str, self.dominant)) or "none",
            "inconclusive": " ".join(map(str, self.inconclusive)) or "none",
            "param.max": self.max_n,
            "witness": " ".join(e.render() for e in self.profile),
        }

    def serialize(self) -> str:
        return _serialize(self.as_dict())


def dominance(profile: RfdProfile, n: int) -> bool | None:
    """``profile[i] < profile[n]`` for every ``i < n``."""
    return _all3(profile[i].less_than(profile[n]) for i in range(n))


def dominant_numbers(A: StructureAlgebra, max_n: int, cap: int | None = None, route: str = "both") -> DominantReport:
    if max_n < 0:
        raise ValueError("max_n must be non-negative")
    cap = cap or default_cap(max_n)
    prof = _profile(A, max_n, cap, route)
    dom, unk = [], []
    for n in range(max_n + 1):
        v = dominance(prof, n)
        if v is True:
            dom.append(n)
        elif v is None:
            unk.append(n)
    return DominantReport(A.name, max_n, cap, dom, unk, prof.entries[: max_n + 1])


def triangular(A: StructureAlgebra, t: int) -> StructureAlgebra:
    if t < 1:
        raise ValueError("t must be at least 1")
    return A if t == 1 else lower_triangular(A, t)


def verify_theorem_3_6(
    A: StructureAlgebra, t: int, max_degree: int, cap: int | None = None, block_form: bool = False
) -> TheoremReport:
    """``pd I^i(T_t A) = max(pd I^i(A), pd I^{i-1}(A) + 1)`` for ``0 <= i <= max_degree``.

    The left side comes from the profile of ``T_t(A)`` itself, the right
    side only from the profile of ``A``; ``pd I^{-1}(A)`` is ``-inf``.
    For ``t = 1`` the right side is the profile of ``A`` unchanged.
    ``block_form`` builds ``T_t(A)`` by iterated one-step block extension
    instead of the direct matrix-unit table.
    """
    cap = cap or default_cap(max_degree, 1)
    if block_form and t > 1:
        T = lemma23_triangular(A, t).algebra
    else:
        T = triangular(A, t)
    base = rfd_profile(A, max_degree, cap)
    lhs = rfd_profile(T, max_degree, cap)
    rep = TheoremReport("triangular-profile", A.name, t, {"max_degree": max_degree, "cap": cap})
    rep.hypotheses = _hypotheses(A, T)
    verdicts = []
    for i in range(max_degree + 1):
        prev = base[i - 1] if i else MINUS_INFINITY
        # T_1(A) is A itself: no shifted summand
        rhs = base[i] if t == 1 else base[i].join(prev.plus(1))
        a = lhs[i].agrees(rhs)
        v = VERIFIED if a is True else REFUTED if a is False else CONSISTENT
        verdicts.append(v)
        rep.rows.append({"i": i, "lhs": lhs[i].render(), "rhs": rhs.render(), "base": base[i].render(), "verdict": v})
    rep.verdict = _combine(verdicts)
    _refuted_note(rep)
    return rep


def verify_theorem_3_7(A: StructureAlgebra, n: int, k: int, t: int, cap: int | None = None) -> TheoremReport:
    """``G_n(k)`` for ``A`` agrees with ``G_n(k)`` for ``T_t(A)``."""
    cap = cap or default_cap(n, k)
    T = triangular(A, t)
    a = is_Gnk(A, n, k, cap)
    b = is_Gnk(T, n, k, cap)
    rep = TheoremReport("gnk-transfer", A.name, t, {"n": n, "k": k, "cap": cap})
    rep.hypotheses = _hypotheses(A, T)
    rep.checks += [("base", a.verdict), ("triangular", b.verdict)]
    rep.verdict = _agreement(a.holds, b.holds)
    _refuted_note(rep)
    return rep


def _implication(premise: bool | None, conclusion: bool | None) -> str:
    if premise is False or conclusion is True:
        return VERIFIED
    if premise is True and conclusion is False:
        return REFUTED
    return CONSISTENT


def verify_corollary_3_8(
    A: StructureAlgebra, l: int, n: int, t: int, max_n: int | None = None, cap: int | None = None
) -> TheoremReport:
    """Transfer of ``(l, n)^op`` and of dominant numbers from ``A`` to ``T_t(A)``.

    Forward: ``A`` is ``(l, n)^op`` implies ``T_t(A)`` is ``(l+1, n)^op``.
    Converse: ``T_t(A)`` is ``(l, n)^op`` implies ``A`` is ``(l, n)^op``.
    Dominance: each dominant ``m <= max_n`` of ``A`` gives a dominant ``m+1`` of ``T_t(A)``.
    """
    max_n = n if max_n is None else max_n
    cap = cap or default_cap(l, n, max_n)
    T = triangular(A, t)
    rep = TheoremReport("lnop-dominant-transfer", A.name, t, {"l": l, "n": n, "max_n": max_n, "cap": cap})
    rep.hypotheses = _hypotheses(A, T)
    a_l = is_ln_op(A, l, n, cap)
    t_l1 = is_ln_op(T, l + 1, n, cap)
    t_l = is_ln_op(T, l, n, cap)
    fwd = _implication(a_l.holds, t_l1.holds)
    conv = _implication(t_l.holds, a_l.holds)
    rep.checks += [
        ("part1.base(l,n)", a_l.verdict),
        ("part1.triangular(l+1,n)", t_l1.verdict),
        ("part1.triangular(l,n)", t_l.verdict),
        ("part1.forward", fwd),
        ("part1.converse", conv),
    ]
    base_prof = rfd_profile(A, max_n, cap)
    tri_prof = rfd_profile(T, max_n + 1, cap)
    verdicts = [fwd, conv]
    for m in range(max_n + 1):
        d = dominance(base_prof, m)
        e = dominance(tri_prof, m + 1)
        v = _implication(d, e)
        verdicts.append(v)
        rep.rows.append({"i": m, "base_dominant": _tri(d), "shifted_dominant": _tri(e), "verdict": v})
    rep.verdict = _combine(verdicts)
    _refuted_note(rep)
    return rep


def _tri(v: bool | None) -> str:
    return {True: "yes", False: "no", None: "undecided"}[v]
