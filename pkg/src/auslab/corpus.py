"""The built-in algebra corpus: a JSON manifest plus a runner.

Each entry names a constructor and the values expected from it, every
expectation tagged with where it comes from.  Running an entry checks
those expectations and a fixed battery of cross-module invariants.
"""
from __future__ import annotations

import fnmatch
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from importlib import resources

from . import algebra as alg
from .conditions import VERIFIED, dominant_numbers, is_Gnk, is_ln_op, verify_theorem_3_6
from .homological import (
    ExtDim,
    RouteMismatch,
    injective_cogenerator,
    projective_dimension,
    projective_dimension_by_ext,
    resolution_length,
    rfd_profile,
    simple_envelope,
)
from .modules import (
    composition_multiplicities,
    dual,
    is_isomorphic,
    regular_module,
    simple_modules,
    socle,
    top,
)

TAGS = ("TRIVIAL", "DERIVED")


@dataclass
class CorpusEntry:
    name: str
    constructor: dict
    raw: dict
    max_degree: int = 3
    cap: int = 6
    seeds: tuple[int, ...] = (0xA05, 7)
    transfer: tuple[int, ...] = (2, 3)

    def build(self) -> alg.StructureAlgebra:
        A = build_algebra(self.constructor)
        A.name = self.name
        return A


@dataclass
class EntryResult:
    name: str
    checks: list[tuple[str, bool, str]] = field(default_factory=list)
    error: str | None = None

    @property
    def passed(self) -> bool:
        return self.error is None and all(ok for _, ok, _ in self.checks)

    def line(self) -> str:
        good = sum(ok for _, ok, _ in self.checks)
        if self.error:
            detail = f"error: {self.error}"
        else:
            detail = ", ".join(n for n, ok, _ in self.checks if not ok) or "-"
        status = "pass" if self.passed else "FAIL"
        return f"{self.name}\t{status}\t{good}/{len(self.checks)}\t{detail}"


def build_algebra(ctor: dict) -> alg.StructureAlgebra:
    kind = ctor["kind"]
    if kind == "prime_field":
        return alg.prime_field(ctor["p"])
    if kind == "truncated_polynomial":
        return alg.truncated_polynomial(ctor["p"], ctor["n"])
    if kind == "matrix_algebra":
        return alg.matrix_algebra(ctor["p"], ctor["n"])
    if kind == "path_algebra_A2":
        return alg.path_algebra_A2(ctor["p"])
    if kind == "local_rad_square_zero":
        return alg.local_rad_square_zero(ctor["p"])
    if kind == "product":
        A, B = (build_algebra(f) for f in ctor["factors"])
        return alg.product(A, B)
    if kind == "lower_triangular":
        return alg.lower_triangular(build_algebra(ctor["base"]), ctor["t"])
    if kind == "block_triangular":
        return alg.lemma23_triangular(build_algebra(ctor["base"]), ctor["t"]).algebra
    raise ValueError(f"unknown constructor kind {kind!r}")


def _check_tags(obj: dict, where: str):
    tag = obj.get("tag")
    if tag not in TAGS:
        raise ValueError(f"{where}: expectation without a provenance tag")
    if tag == "DERIVED" and not obj.get("oracle"):
        raise ValueError(f"{where}: DERIVED expectation must name its oracle")


def load_manifest(text: str | None = None) -> list[CorpusEntry]:
    if text is None:
        text = resources.files("auslab").joinpath("data/corpus.json").read_text(encoding="utf-8")
    data = json.loads(text)
    defaults = data.get("defaults", {})
    out = []
    for raw in data["entries"]:
        for key in ("dim", "profile"):
            if key in raw:
                _check_tags(raw[key], f"{raw['name']}.{key}")
        for c in raw.get("conditions", []):
            _check_tags(c, f"{raw['name']}.{c['check']}")
        out.append(
            CorpusEntry(
                raw["name"],
                raw["constructor"],
                raw,
                raw.get("max_degree", defaults.get("max_degree", 3)),
                raw.get("cap", defaults.get("cap", 6)),
                tuple(raw.get("seeds", defaults.get("seeds", (0xA05, 7)))),
                tuple(raw.get("transfer", defaults.get("transfer", (2, 3)))),
            )
        )
    names = [e.name for e in out]
    if len(set(names)) != len(names):
        raise ValueError("duplicate corpus entry names")
    return sorted(out, key=lambda e: e.name)


def select(entries: list[CorpusEntry], pattern: str | None) -> list[CorpusEntry]:
    if not pattern:
        return entries
    return [e for e in entries if fnmatch.fnmatchcase(e.name, pattern)]


def corpus_algebras(pattern: str | None = None) -> list[alg.StructureAlgebra]:
    return [e.build() for e in select(load_manifest(), pattern)]


def corpus_modules(A: alg.StructureAlgebra) -> list:
    """Small modules every entry is tested on: A_A, D(A), simples and their envelopes."""
    mods = [regular_module(A), injective_cogenerator(A)]
    for k, S in enumerate(simple_modules(A)):
        mods += [S, simple_envelope(A, k)[0]]
    return mods


def _condition(A, c: dict, cap: int) -> tuple[str, str]:
    kind = c["check"]
    if kind == "gnk":
        return f"gnk({c['n']},{c['k']})", is_Gnk(A, c["n"], c["k"], cap).verdict
    if kind == "lnop":
        return f"lnop({c['l']},{c['n']})", is_ln_op(A, c["l"], c["n"], cap).verdict
    if kind == "dominant":
        rep = dominant_numbers(A, c["max"], cap)
        return f"dominant({c['max']})", " ".join(map(str, rep.dominant))
    raise ValueError(f"unknown condition {kind!r}")


def run_entry(entry: CorpusEntry) -> EntryResult:
    res = EntryResult(entry.name)
    add = res.checks.append
    try:
        A = entry.build()
        add(("valid", A.is_valid(), ""))
        if "dim" in entry.raw:
            add(("dim", A.dim == entry.raw["dim"]["value"], str(A.dim)))
        text = alg.dump_algebra(A)
        add(("round-trip", alg.dump_algebra(alg.parse_algebra(text, A.name)) == text, ""))

        simple_modules(A, entry.seeds[0])
        try:
            prof = rfd_profile(A, entry.max_degree, entry.cap, route="both")
            add(("routes-agree", True, ""))
        except RouteMismatch as exc:
            add(("routes-agree", False, str(exc)))
            prof = rfd_profile(A, entry.max_degree, entry.cap, route="direct")
        if "profile" in entry.raw:
            want = tuple(ExtDim.parse(s) for s in entry.raw["profile"]["value"])
            add(("profile", prof.entries[: len(want)] == want, prof.render()))
        for c in entry.raw.get("conditions", []):
            label, got = _condition(A, c, entry.cap)
            add((label, got == c["expect"], got))

        mods = corpus_modules(A)
        R = mods[0]
        add(("jordan-holder", all(_seed_free(M, entry.seeds) for M in mods[:2]), ""))
        S_dual, _ = socle(dual(R))
        add(("socle-top-duality", is_isomorphic(S_dual, dual(top(R)[0])), ""))
        ext_cap = entry.raw.get("ext_cap", entry.cap)
        add(("pd-three-ways", all(_pd_agree(M, ext_cap) for M in mods), ""))

        want_t = entry.raw.get("transfer_verdict", VERIFIED)
        for t in entry.transfer:
            rep = verify_theorem_3_6(A, t, entry.max_degree, entry.cap)
            add((f"transfer-t{t}", rep.verdict == want_t, rep.verdict))
            mono = all(ExtDim.parse(r["lhs"]).less_than(ExtDim.parse(r["base"])) is not True for r in rep.rows)
            add((f"monotone-t{t}", mono, ""))
    except Exception as exc:  # reported per entry, never fatal for the run
        res.error = f"{type(exc).__name__}: {exc}"
    return res


def _seed_free(M, seeds) -> bool:
    first = composition_multiplicities(M, seeds[0])
    return all(composition_multiplicities(M, s) == first for s in seeds[1:])


def _pd_agree(M, cap: int) -> bool:
    a = resolution_length(M, cap)
    return a == projective_dimension(M, cap) == projective_dimension_by_ext(M, cap)


def run_corpus(pattern: str | None = None, jobs: int = 1) -> list[EntryResult]:
    entries = select(load_manifest(), pattern)
    if jobs > 1 and len(entries) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(run_entry, entries))
    else:
        results = [run_entry(e) for e in entries]
    return sorted(results, key=lambda r: r.name)


def summary(results: list[EntryResult]) -> str:
    lines = ["entry\tstatus\tchecks\tfailed"]
    lines += [r.line() for r in results]
    bad = sum(not r.passed for r in results)
    lines.append(f"total\t{'pass' if not bad else 'FAIL'}\t{len(results) - bad}/{len(results)}\t-")
    return "\n".join(lines) + "\n"
