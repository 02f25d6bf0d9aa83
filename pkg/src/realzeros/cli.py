"""Command-line interface.

Exit status: 0 on success, 1 when a hypothesis check or classification
fails (the report is still printed), 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from .algebra import DomainError, isolate_real_roots
from .classify import classify
from .expr import LowerError, ParseError, format_ratfun, parse_ratfun
from .families import (
    Family,
    FamilySpec,
    build_f3,
    build_f4,
)
from .ratfun import RatFun, compute_m
from .report import (
    Report,
    hypotheses_summary,
    intervals,
    match_summary,
    rat,
    root_certificates,
)
from .verify import OdeIdentity, check_hypotheses, f4_negative_roots, ode_residual

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"malformed rational {text!r}") from None


def _positive_rational(text: str) -> Fraction:
    x = _rational(text)
    if x <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive rational, got {text!r}")
    return x


def _frame(text: str) -> tuple[Fraction, Fraction, Fraction]:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("frame must be a1,a2,a3")
    return tuple(_rational(p) for p in parts)


def _parse(text: str) -> RatFun:
    try:
        return parse_ratfun(text)
    except (ParseError, LowerError) as exc:
        raise UsageError(str(exc)) from None


# --- worked example tables ---------------------------------------------------

def example_tables() -> list[tuple[str, RatFun]]:
    rows = [(f"g{n}", build_f3(n, 2)) for n in (1, 2, 3)]
    rows += [(f"h{n}", build_f3(n, -1)) for n in (1, 2, 3, 4)]
    rows += [(f"p{n}", build_f4(n)) for n in (1, 2, 3)]
    return rows


def tables_text() -> str:
    lines = ["# F3 with K = 2: g_n(z) = (z-2) H_n(3 - 4/z)"]
    rows = example_tables()
    for name, f in rows[:3]:
        lines.append(f"{name} = {format_ratfun(f)}")
    lines.append("# F3 with K = -1: h_n(z) = (z+1) H_n(-1/z)")
    for name, f in rows[3:7]:
        lines.append(f"{name} = {format_ratfun(f)}")
    lines.append("# F4: p_n(z) = H_n(1 - 2/z)")
    for name, f in rows[7:]:
        lines.append(f"{name} = {format_ratfun(f)}")
    return "\n".join(lines) + "\n"


# --- report builders --------------------------------------------------------

def verify_report(text: str, ode: tuple[str, Fraction] | None = None) -> tuple[Report, bool]:
    f = _parse(text)
    if f.is_constant():
        raise UsageError("expression is constant")
    h = check_hypotheses(f)
    rep = Report("verify", text, m=compute_m(f), hypotheses=hypotheses_summary(h),
                 certificates=root_certificates(f))
    ok = h.overall
    if ode is not None:
        coeff = _parse(ode[0])
        if not coeff.is_polynomial() or coeff.is_zero():
            raise UsageError("ODE coefficient must be a nonzero polynomial")
        if ode[1] == 0:
            raise UsageError("ODE constant must be nonzero")
        res = ode_residual(f, OdeIdentity(coeff.num, ode[1]))
        rep.ode = {"coefficient": format_ratfun(coeff, factor=False), "constant": rat(ode[1]),
                   "residual": format_ratfun(res, factor=False), "zero": res.is_zero()}
        ok = ok and res.is_zero()
    return rep, ok


def classify_report(text: str) -> tuple[Report, bool]:
    f = _parse(text)
    if f.is_constant():
        raise UsageError("expression is constant")
    fm = classify(f)
    rep = Report("classify", text, m=fm.m, hypotheses=hypotheses_summary(fm.hypotheses),
                 classification=match_summary(fm))
    return rep, fm.matched


def _emit(reports: list[Report], fmt: str, out) -> None:
    if fmt == "json":
        if len(reports) == 1:
            out.write(reports[0].to_json() + "\n")
        else:
            out.write("[\n" + ",\n".join(r.to_json() for r in reports) + "\n]\n")
    else:
        out.write("\n\n".join(r.to_text() for r in reports) + "\n")


def _read_batch(path: str) -> list[str]:
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise UsageError(f"cannot read batch file: {exc}") from None
    return [ln.strip() for ln in lines if ln.strip() and not ln.lstrip().startswith("#")]


def _run_many(builder, exprs: list[str], jobs: int):
    if len(exprs) == 1 or jobs <= 1:
        return [builder(e) for e in exprs]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(builder, exprs))


def _inputs(args) -> list[str]:
    exprs = []
    if args.expr is not None:
        exprs.append(args.expr)
    if args.batch:
        exprs.extend(_read_batch(args.batch))
    if not exprs:
        raise UsageError("an expression or --batch FILE is required")
    return exprs


# --- subcommands ------------------------------------------------------------

def cmd_construct(args, out) -> int:
    family = Family(args.family)
    kw = {}
    if family is Family.POWER:
        kw["Q"] = args.Q
    elif family in (Family.F2, Family.F3, Family.F4):
        kw["n"] = args.n
        if family is Family.F3:
            kw["K"] = args.K
    elif family is Family.BESSEL_TRUNC:
        kw["terms"] = args.terms
    missing = [k for k, v in kw.items() if v is None]
    if missing:
        raise UsageError(f"--family {family.value} requires --{missing[0]}")
    spec = FamilySpec(family, frame=args.frame or (1, 1, 0), **kw)
    out.write(format_ratfun(spec.build(), factor=not args.expanded) + "\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    ode = None
    if args.ode:
        ode = (args.ode[0], _rational(args.ode[1]))
    results = _run_many(lambda e: verify_report(e, ode), _inputs(args), args.jobs)
    _emit([r for r, _ in results], args.format, out)
    return EXIT_OK if all(ok for _, ok in results) else EXIT_FAIL


def cmd_classify(args, out) -> int:
    results = _run_many(classify_report, _inputs(args), args.jobs)
    _emit([r for r, _ in results], args.format, out)
    return EXIT_OK if all(ok for _, ok in results) else EXIT_FAIL


def cmd_roots(args, out) -> int:
    f = _parse(args.expr)
    if f.num.is_zero():
        raise UsageError("the zero function has no isolated roots")
    lo, hi = (args.interval if args.interval else (float("-inf"), float("inf")))
    if args.interval and not lo < hi:
        raise UsageError("--interval needs a < b")
    found = isolate_real_roots(f.num, args.width, lo, hi)
    rep = Report("roots", args.expr, certificates={
        "numerator": format_ratfun(RatFun(f.num), factor=False),
        "interval": [rat(lo), rat(hi)] if args.interval else ["-inf", "inf"],
        "count": len(found),
        "roots": intervals(found),
    })
    _emit([rep], args.format, out)
    return EXIT_OK


def cmd_tables(args, out) -> int:
    out.write(tables_text())
    return EXIT_OK


def cmd_f4roots(args, out) -> int:
    width = Fraction(1, 10**6)
    res = f4_negative_roots(args.bound, args.count, width=width)
    rep = Report("f4roots", f"f4 on [-{args.bound}, 0)", certificates={
        "requested": args.count,
        "found": len(res.intervals),
        "complete": res.complete,
        "roots": intervals(res.intervals),
    }, approximate={
        "tolerance": rat(width),
        "values": [f"{float((a + b) / 2):.7f}" for a, b in res.intervals],
    })
    _emit([rep], args.format, out)
    return EXIT_OK if res.complete else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="realzeros",
        description="Exact construction, verification and classification of "
                    "rational functions whose derivatives have only real zeros.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="print a canonical family member")
    c.add_argument("--family", required=True, choices=["power", "f2", "f3", "f4", "bessel"])
    c.add_argument("--n", type=int)
    c.add_argument("--K", type=_rational)
    c.add_argument("--Q", type=int)
    c.add_argument("--terms", type=int)
    c.add_argument("--frame", type=_frame, help="a1,a2,a3 for a1*g(a2*z+a3)")
    c.add_argument("--expanded", action="store_true", help="expand instead of factoring")
    c.set_defaults(func=cmd_construct)

    for name, func, helptext in (("verify", cmd_verify, "check the hypotheses"),
                                 ("classify", cmd_classify, "identify the family")):
        s = sub.add_parser(name, help=helptext)
        s.add_argument("expr", nargs="?")
        s.add_argument("--format", choices=["json", "text"], default="text")
        s.add_argument("--batch", metavar="FILE", help="one expression per line")
        s.add_argument("--jobs", type=int, default=4)
        if name == "verify":
            s.add_argument("--ode", nargs=2, metavar=("P-EXPR", "C"),
                           help="also check P*y'' = C*y")
        s.set_defaults(func=func)

    r = sub.add_parser("roots", help="isolate real roots of the numerator")
    r.add_argument("expr")
    r.add_argument("--interval", nargs=2, type=_rational, metavar=("A", "B"))
    r.add_argument("--width", type=_positive_rational)
    r.add_argument("--format", choices=["json", "text"], default="text")
    r.set_defaults(func=cmd_roots)

    t = sub.add_parser("tables", help="print the worked K=2, K=-1 and F4 examples")
    t.set_defaults(func=cmd_tables)

    f = sub.add_parser("f4roots", help="enclose negative roots of the Bessel-type series")
    f.add_argument("--count", type=int, default=2)
    f.add_argument("--bound", type=_positive_rational, default=Fraction(20))
    f.add_argument("--format", choices=["json", "text"], default="text")
    f.set_defaults(func=cmd_f4roots)
    return p


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (UsageError, DomainError) as exc:
        print(f"realzeros: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
