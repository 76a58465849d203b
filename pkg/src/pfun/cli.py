"""Command-line front end: ``pfun eval|check|const|roots|table``.

Exit codes: 0 success (all claims hold), 1 a claim is violated, 2 usage or
domain error, 3 inconclusive or numerical failure. Numbers are printed with
15 significant digits so repeated runs are byte-identical.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from typing import Callable, Optional, Sequence

from .convexity import CLAIMS, ConvexityReport, Verdict, check_claim, default_grid, get_claim, solve_r_p, solve_s_p
from .errors import DomainError, PFunError
from .forward import FunctionKind, forward_domain, forward_eval
from .inverse import InverseKind, inverse_domain, inverse_eval
from .special import as_p, b_p, c_p, pi_p

EXIT_OK = 0
EXIT_VIOLATED = 1
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3

TOL_ENV = "PFUN_TOL"

FUNCTIONS = [k.value for k in FunctionKind] + [k.value for k in InverseKind]
CONSTANTS = ("pi_p", "b_p", "c_p", "s_p", "r_p")


def fmt(v: float) -> str:
    return f"{v:.15g}"


def _num(v: float):
    """JSON-safe number at the printed precision (``null`` when not finite)."""
    return float(fmt(v)) if math.isfinite(v) else None


def _evaluator(name: str, p: float) -> tuple[Callable[[float], float], tuple[float, float, bool]]:
    try:
        kind = FunctionKind(name)
        return (lambda x: forward_eval(kind, p, x)), forward_domain(kind, p)
    except ValueError:
        kind = InverseKind(name)
        lo, hi, closed = inverse_domain(kind)
        if kind is InverseKind.ARCSINH:
            hi, closed = math.inf, False
        return (lambda x: inverse_eval(kind, p, x)), (lo, hi, closed)


def _domain_text(name: str, dom: tuple[float, float, bool]) -> str:
    lo, hi, closed = dom
    return f"{name}: x must lie in [{fmt(lo)}, {fmt(hi)}{']' if closed else ')'}"


def _in_domain(x: float, dom: tuple[float, float, bool]) -> bool:
    lo, hi, closed = dom
    return lo <= x <= hi if closed else lo <= x < hi


def _csv_text(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _fail(msg: str, code: int = EXIT_USAGE) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return code


def cmd_eval(args: argparse.Namespace) -> int:
    p = as_p(args.p)
    f, dom = _evaluator(args.fn, p)
    if not _in_domain(args.x, dom):
        return _fail(f"{_domain_text(args.fn, dom)}, got {fmt(args.x)}")
    value = f(args.x)
    if args.format == "json":
        _emit(json.dumps({"function": args.fn, "p": _num(p), "x": _num(args.x), "value": _num(value)}))
    elif args.format == "csv":
        _emit(_csv_text(["x", "value"], [[fmt(args.x), fmt(value)]]))
    else:
        _emit(fmt(value))
    return EXIT_OK


def _margin_tol() -> float:
    raw = os.environ.get(TOL_ENV)
    if raw is None or raw == "":
        return 1e-9
    try:
        tol = float(raw)
    except ValueError:
        raise DomainError(f"{TOL_ENV} must be a positive real number, got {raw!r}") from None
    if not (tol > 0 and math.isfinite(tol)):
        raise DomainError(f"{TOL_ENV} must be a positive real number, got {raw!r}")
    return tol


def _report_record(r: ConvexityReport) -> dict:
    rec = {
        "claim": r.claim_id,
        "p": _num(r.p),
        "verdict": r.verdict.value,
        "worst_margin": _num(r.worst_margin),
        "worst_point": [_num(r.worst_point[0]), _num(r.worst_point[1])],
        "pairs_checked": r.pairs_checked,
    }
    if r.note:
        rec["note"] = r.note
    return rec


def cmd_check(args: argparse.Namespace) -> int:
    tol = _margin_tol()
    if args.n < 2:
        return _fail("--n must be at least 2")
    claims = sorted(CLAIMS, key=lambda c: c.claim_id) if args.claim == "all" else [get_claim(args.claim)]
    ps = sorted({as_p(p) for p in args.p})
    grid = default_grid(args.n, tol)

    records = []
    verdicts = []
    for claim in claims:
        for p in ps:
            if not claim.p_ok(p):
                records.append({
                    "claim": claim.claim_id,
                    "p": _num(p),
                    "verdict": "Skipped",
                    "reason": f"p out of stated range ({claim.p_range})",
                })
                continue
            report = check_claim(claim, p, grid)
            verdicts.append(report.verdict)
            records.append(_report_record(report))

    if args.format == "json":
        _emit(json.dumps(records, indent=2))
    elif args.format == "csv":
        header = ["claim", "p", "verdict", "worst_margin", "worst_x", "worst_y", "pairs_checked", "note"]
        rows = []
        for rec in records:
            if rec["verdict"] == "Skipped":
                rows.append([rec["claim"], fmt(rec["p"]), "Skipped", "", "", "", "", rec["reason"]])
            else:
                wp = rec["worst_point"]
                rows.append([
                    rec["claim"], fmt(rec["p"]), rec["verdict"], _cell(rec["worst_margin"]),
                    _cell(wp[0]), _cell(wp[1]), rec["pairs_checked"], rec.get("note", ""),
                ])
        _emit(_csv_text(header, rows))
    else:
        lines = []
        for rec in records:
            head = f"{rec['claim']:<9} p={fmt(rec['p']):<5} {rec['verdict']:<12}"
            if rec["verdict"] == "Skipped":
                lines.append(f"{head} {rec['reason']}")
            else:
                wp = rec["worst_point"]
                lines.append(
                    f"{head} worst_margin={_cell(rec['worst_margin'])} "
                    f"at ({_cell(wp[0])}, {_cell(wp[1])}) pairs={rec['pairs_checked']}"
                )
        _emit("\n".join(lines))

    if Verdict.VIOLATED in verdicts:
        return EXIT_VIOLATED
    if Verdict.INCONCLUSIVE in verdicts:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def _cell(v: Optional[float]) -> str:
    return "nan" if v is None else fmt(v)


def cmd_const(args: argparse.Namespace) -> int:
    p = as_p(args.p)
    residual = None
    if args.name == "pi_p":
        value = pi_p(p)
    elif args.name == "b_p":
        value = b_p(p)
    elif args.name == "c_p":
        value = c_p(p)
    else:
        res = solve_s_p(p) if args.name == "s_p" else solve_r_p(p)
        value, residual = res.root, res.residual
    if args.format == "json":
        rec = {"name": args.name, "p": _num(p), "value": _num(value)}
        if residual is not None:
            rec["residual"] = _num(residual)
        _emit(json.dumps(rec))
    elif args.format == "csv":
        header = ["name", "p", "value"] + (["residual"] if residual is not None else [])
        row = [args.name, fmt(p), fmt(value)] + ([fmt(residual)] if residual is not None else [])
        _emit(_csv_text(header, [row]))
    else:
        _emit(fmt(value) if residual is None else f"{fmt(value)}\nresidual {fmt(residual)}")
    return EXIT_OK


def cmd_roots(args: argparse.Namespace) -> int:
    ps = sorted({as_p(p) for p in args.p})
    rows = []
    for p in ps:
        s, r = solve_s_p(p), solve_r_p(p)
        rows.append((p, s, r))
    if args.format == "json":
        _emit(json.dumps([
            {"p": _num(p), "s_p": _num(s.root), "s_p_residual": _num(s.residual),
             "r_p": _num(r.root), "r_p_residual": _num(r.residual)}
            for p, s, r in rows
        ], indent=2))
    elif args.format == "csv":
        header = ["p", "s_p", "s_p_residual", "r_p", "r_p_residual"]
        _emit(_csv_text(header, [
            [fmt(p), fmt(s.root), fmt(s.residual), fmt(r.root), fmt(r.residual)] for p, s, r in rows
        ]))
    else:
        _emit("\n".join(
            f"p={fmt(p)} s_p={fmt(s.root)} (residual {fmt(s.residual)}) "
            f"r_p={fmt(r.root)} (residual {fmt(r.residual)})"
            for p, s, r in rows
        ))
    return EXIT_OK


def _parse_domain(text: str) -> tuple[float, float]:
    lo_s, sep, hi_s = text.partition("..")
    if not sep:
        raise argparse.ArgumentTypeError(f"domain must look like lo..hi, got {text!r}")
    try:
        lo, hi = float(lo_s), float(hi_s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"domain bounds must be numbers, got {text!r}") from None
    if not lo < hi:
        raise argparse.ArgumentTypeError(f"domain needs lo < hi, got {text!r}")
    return lo, hi


def cmd_table(args: argparse.Namespace) -> int:
    p = as_p(args.p)
    if args.n < 2:
        return _fail("--n must be at least 2")
    f, dom = _evaluator(args.fn, p)
    lo, hi = args.domain
    if not (_in_domain(lo, dom) and _in_domain(hi, dom)):
        return _fail(f"{_domain_text(args.fn, dom)}, got {fmt(lo)}..{fmt(hi)}")
    step = (hi - lo) / (args.n - 1)
    xs = [lo + i * step for i in range(args.n - 1)] + [hi]
    rows = [(x, f(x)) for x in xs]
    if args.format == "json":
        _emit(json.dumps([{"x": _num(x), "value": _num(v)} for x, v in rows]))
    else:
        _emit(_csv_text(["x", "value"], [[fmt(x), fmt(v)] for x, v in rows]))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pfun",
        description="Generalized trigonometric functions and logarithmic-mean convexity checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    formats = ("text", "json", "csv")

    ev = sub.add_parser("eval", help="evaluate one p-function at one point")
    ev.add_argument("--fn", required=True, choices=FUNCTIONS)
    ev.add_argument("--p", required=True, type=float)
    ev.add_argument("--x", required=True, type=float)
    ev.add_argument("--format", choices=formats, default="text")
    ev.set_defaults(handler=cmd_eval)

    ck = sub.add_parser("check", help="grid-check the convexity claims")
    ck.add_argument("--claim", default="all", choices=["all"] + sorted(c.claim_id for c in CLAIMS))
    ck.add_argument("--p", required=True, type=float, action="append", help="repeat for several p")
    ck.add_argument("--n", type=int, default=40, help="grid points per axis")
    ck.add_argument("--format", choices=formats, default="text")
    ck.set_defaults(handler=cmd_check)

    co = sub.add_parser("const", help="print pi_p, b_p, c_p, s_p or r_p")
    co.add_argument("--name", required=True, choices=CONSTANTS)
    co.add_argument("--p", required=True, type=float)
    co.add_argument("--format", choices=formats, default="text")
    co.set_defaults(handler=cmd_const)

    ro = sub.add_parser("roots", help="solve for s_p and r_p")
    ro.add_argument("--p", required=True, type=float, action="append", help="repeat for several p")
    ro.add_argument("--format", choices=formats, default="text")
    ro.set_defaults(handler=cmd_roots)

    tb = sub.add_parser("table", help="tabulate a p-function for plotting")
    tb.add_argument("--fn", required=True, choices=FUNCTIONS)
    tb.add_argument("--p", required=True, type=float)
    tb.add_argument("--domain", required=True, type=_parse_domain, help="lo..hi")
    tb.add_argument("--n", type=int, default=50)
    tb.add_argument("--format", choices=("csv", "json"), default="csv")
    tb.set_defaults(handler=cmd_table)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except DomainError as exc:
        return _fail(str(exc), EXIT_USAGE)
    except PFunError as exc:
        return _fail(str(exc), EXIT_INCONCLUSIVE)


if __name__ == "__main__":
    sys.exit(main())
