"""``auslab`` command line.

Exit codes: 0 holds / verified, 1 fails / refuted, 2 bad input,
3 inconclusive / consistent-under-cap (or ``--strict`` with a censored entry).
"""
from __future__ import annotations

import argparse
import re
import sys
import time
from pathlib import Path

from .algebra import ParseError, StructureAlgebra, load_algebra, save_algebra
from .conditions import (
    CONSISTENT,
    FAILS,
    HOLDS,
    REFUTED,
    VERIFIED,
    default_cap,
    dominant_numbers,
    is_Gnk,
    is_ln_op,
    triangular,
    verify_corollary_3_8,
    verify_theorem_3_6,
    verify_theorem_3_7,
)
from .homological import rfd_profile
from .modules import DEFAULT_SEED

OK, FAILED, BAD_INPUT, UNDECIDED = 0, 1, 2, 3

_EXIT = {HOLDS: OK, VERIFIED: OK, FAILS: FAILED, REFUTED: FAILED, CONSISTENT: UNDECIDED}


class BadInput(Exception):
    pass


def _nonneg(text: str) -> int:
    try:
        v = int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {v}")
    return v


def _positive(text: str) -> int:
    v = _nonneg(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


def _mult_line(text: str, i: int, j: int) -> int | None:
    pat = re.compile(rf"^\s*mult\s+{i}\s+{j}(\s|$)")
    for no, line in enumerate(text.splitlines(), start=1):
        if pat.match(line):
            return no
    return None


def _diagnostics(path: Path, A: StructureAlgebra) -> list[str]:
    """Validation problems anchored to the offending line where possible."""
    text = path.read_text(encoding="utf-8")
    out = []
    for prob in A.validate():
        m = re.search(r"\((\d+),(\d+),(\d+)\)", prob)
        line = _mult_line(text, int(m.group(1)), int(m.group(2))) if m else None
        if line is None:
            line = next((n for n, ln in enumerate(text.splitlines(), 1) if ln.strip().startswith("unit")), 0)
        out.append(f"{path}:{line}: {prob}")
    return out


def _load(path: str, check: bool = True) -> StructureAlgebra:
    p = Path(path)
    try:
        A = load_algebra(p)
    except OSError as exc:
        raise BadInput(f"{path}: {exc.strerror or exc}") from exc
    except ParseError as exc:
        where = f"{path}:{exc.line}" if exc.line is not None else path
        msg = str(exc).split(": ", 1)[1] if exc.line is not None else str(exc)
        raise BadInput(f"{where}: {msg}") from exc
    if check:
        diags = _diagnostics(p, A)
        if diags:
            raise BadInput("\n".join(diags))
    return A


def cmd_validate(args) -> int:
    _load(args.file)
    print("ok")
    return OK


def cmd_analyze(args) -> int:
    A = _load(args.file)
    cap = args.cap if args.cap is not None else default_cap(args.max_degree)
    prof = rfd_profile(A, args.max_degree, cap, route=args.route, seed=args.seed)
    print("i\trfd\tdim")
    for i, (e, d) in enumerate(zip(prof.entries, prof.dims)):
        print(f"{i}\t{e.render(args.compat)}\t{d}")
    if args.plot:
        from .plotting import plot_profile

        plot_profile(prof, args.plot)
    if args.strict and any(e.is_censored for e in prof.entries):
        return UNDECIDED
    return OK


def cmd_check(args) -> int:
    A = _load(args.file)
    if args.condition == "gnk":
        rep = is_Gnk(A, args.n, args.k, args.cap)
    elif args.condition == "lnop":
        rep = is_ln_op(A, args.l, args.n, args.cap)
    else:
        rep = dominant_numbers(A, args.max, args.cap)
        sys.stdout.write(rep.serialize())
        return UNDECIDED if rep.inconclusive else OK
    sys.stdout.write(rep.serialize())
    return _EXIT.get(rep.verdict, UNDECIDED)


def cmd_tri(args) -> int:
    A = _load(args.file)
    T = triangular(A, args.t)
    try:
        save_algebra(T, args.output)
    except OSError as exc:
        raise BadInput(f"{args.output}: {exc.strerror or exc}") from exc
    return OK


def cmd_verify(args) -> int:
    A = _load(args.file)
    if args.statement == "thm36":
        rep = verify_theorem_3_6(A, args.t, args.max_degree, args.cap)
    elif args.statement == "thm37":
        rep = verify_theorem_3_7(A, args.n, args.k, args.t, args.cap)
    else:
        rep = verify_corollary_3_8(A, args.l, args.n, args.t, cap=args.cap)
    sys.stdout.write(rep.serialize())
    if getattr(args, "plot", None):
        from .plotting import plot_transfer

        plot_transfer(rep, args.plot)
    return _EXIT[rep.verdict]


def cmd_corpus(args) -> int:
    from .corpus import run_corpus, summary

    start = time.perf_counter()
    results = run_corpus(args.filter, args.jobs)
    if not results:
        raise BadInput(f"no corpus entry matches {args.filter!r}")
    sys.stdout.write(summary(results))
    print(f"corpus: {len(results)} entries in {time.perf_counter() - start:.2f}s", file=sys.stderr)
    return OK if all(r.passed for r in results) else FAILED


def _cap(p):
    p.add_argument("--cap", type=_positive, default=None, help="pd search bound (default: parameters + 3)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="auslab", description="Auslander-type conditions for finite-dimensional algebras over F_p.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check an algebra file")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("analyze", help="r.fd profile of the minimal injective resolution of A_A")
    p.add_argument("file")
    p.add_argument("--max-degree", type=_nonneg, required=True)
    _cap(p)
    p.add_argument("--seed", type=_nonneg, default=DEFAULT_SEED)
    p.add_argument("--strict", action="store_true", help="exit 3 if any entry is cap-censored")
    p.add_argument("--compat", action="store_true", help="print -inf as -1")
    p.add_argument("--route", choices=("both", "direct", "bass"), default="both")
    p.add_argument("--plot", metavar="PATH", help="also write a PNG/PDF/SVG figure of the profile")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("check", help="G_n(k), (l,n)^op and dominant numbers")
    p.add_argument("file")
    cs = p.add_subparsers(dest="condition", required=True)
    q = cs.add_parser("gnk")
    q.add_argument("--n", type=_nonneg, required=True)
    q.add_argument("--k", type=_nonneg, required=True)
    _cap(q)
    q = cs.add_parser("lnop")
    q.add_argument("--l", type=_nonneg, required=True)
    q.add_argument("--n", type=_nonneg, required=True)
    _cap(q)
    q = cs.add_parser("dominant")
    q.add_argument("--max", type=_nonneg, required=True)
    _cap(q)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("tri", help="write T_t(A) in the algebra format")
    p.add_argument("file")
    p.add_argument("--t", type=_positive, required=True)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_tri)

    p = sub.add_parser("verify", help="check the triangular transfer statements on one algebra")
    p.add_argument("file")
    vs = p.add_subparsers(dest="statement", required=True)
    q = vs.add_parser("thm36", help="profile of T_t(A) from the profile of A")
    q.add_argument("--t", type=_positive, required=True)
    q.add_argument("--max-degree", type=_nonneg, required=True)
    q.add_argument("--plot", metavar="PATH", help="also write a figure of both sides")
    _cap(q)
    q = vs.add_parser("thm37", help="G_n(k) for A versus T_t(A)")
    q.add_argument("--n", type=_positive, required=True)
    q.add_argument("--k", type=_nonneg, required=True)
    q.add_argument("--t", type=_positive, required=True)
    _cap(q)
    q = vs.add_parser("cor38", help="(l,n)^op and dominant numbers under T_t")
    q.add_argument("--l", type=_nonneg, required=True)
    q.add_argument("--n", type=_nonneg, required=True)
    q.add_argument("--t", type=_positive, required=True)
    _cap(q)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("corpus", help="built-in corpus")
    cs = p.add_subparsers(dest="action", required=True)
    q = cs.add_parser("run")
    q.add_argument("--filter", metavar="GLOB")
    q.add_argument("--jobs", type=_positive, default=1)
    p.set_defaults(func=cmd_corpus)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BadInput as exc:
        print(exc, file=sys.stderr)
        return BAD_INPUT
    except ValueError as exc:
        print(f"auslab: {exc}", file=sys.stderr)
        return BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
