"""Command line interface: polynomial tables, verification sweeps, exports.

Subcommands

  fpoly N       joint statistic polynomial of length N, optionally bound
  verify SUITE  rerun a module's cross-checks, reporting each one
  sequence STAT classical counting sequences and triangles
  lnk N K       Comtet-style coefficient word combination
  expand N      the normal-ordered operator expansion
  freq COUNTS   fixed-frequency inversion polynomial

Every command is deterministic for a fixed invocation; json and csv output
are byte-identical across runs (the plain verify report carries wall-clock
timings as a human convenience, json/csv never do).  Exit status: 0 on
success, 1 when a verification check fails, 2 on usage errors such as
out-of-range lengths.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import recurrence
from .invseq import MAX_BRUTE_LENGTH, fixed_freq_poly
from .oeis import STAT_NAMES
from .polyring import MultiPoly
from .qoperator import (SymExpr, comtet_coeff_explicit, operator_expansion)
from .verify import SUITES, run_suite


class UsageError(Exception):
    pass


# ------------------------------------------------------------- small utils

def _parse_bindings(text: str) -> dict[str, int]:
    bindings: dict[str, int] = {}
    for piece in text.split(","):
        piece = piece.strip()
        if not piece:
            continue
        name, _, value = piece.partition("=")
        name = name.strip()
        try:
            value = int(value)
        except ValueError:
            raise UsageError(f"binding {piece!r} is not var=integer") from None
        if name == "all":
            for var in "xyzpq":
                bindings[var] = value
        elif name in "xyzpq" and len(name) == 1:
            bindings[name] = value
        else:
            raise UsageError(f"unknown variable {name!r} in --bind")
    return bindings


def _parse_columns(text: str) -> list[int]:
    if not text.startswith("q="):
        raise UsageError("--columns expects the form q=1,0,-1")
    try:
        return [int(v) for v in text[2:].split(",") if v.strip() != ""]
    except ValueError:
        raise UsageError("--columns values must be integers") from None


def _parse_counts(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(v) for v in text.split(","))
    except ValueError:
        raise UsageError("counts must be comma-separated integers") from None


def _poly_text(poly: MultiPoly) -> str:
    # q-only values print in the compact table style (no stars)
    if poly.support_variables() <= {"q"}:
        return str(poly.as_qlaurent())
    return str(poly)


def _expr_json(expr: SymExpr) -> list[dict]:
    out = []
    for word, coeff in expr.sorted_items():
        out.append({
            "coeff": [[e, c] for e, c in sorted(coeff.items())],
            "factors": [[f.kind, f.deriv, f.shift] for f in word],
        })
    return out


def _emit(args, payload: dict, plain_lines: list[str],
          csv_rows: list[list]) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    elif args.format == "csv":
        for row in csv_rows:
            print(",".join(str(v) for v in row))
    else:
        for line in plain_lines:
            print(line)


def _effective_nmax(args, default: int) -> int:
    if args.nmax is not None and args.max_n is not None:
        raise UsageError("give the bound either positionally or via --max-n")
    value = args.nmax if args.nmax is not None else args.max_n
    return default if value is None else value


# ----------------------------------------------------------------- fpoly

def cmd_fpoly(args) -> int:
    n = args.n
    if not 1 <= n <= MAX_BRUTE_LENGTH:
        raise UsageError(f"length must be in 1..{MAX_BRUTE_LENGTH}")
    bindings = _parse_bindings(args.bind) if args.bind else {}

    if args.columns is not None:
        if bindings:
            raise UsageError("--columns already binds x = y = z = p = 1")
        qvalues = _parse_columns(args.columns)
        header = ["n", "poly"] + [f"q={v}" for v in qvalues]
        rows = []
        for m in range(1, n + 1):
            f = recurrence.inv_poly(m)
            rows.append([m, str(f)] + [f.evaluate(v) for v in qvalues])
        payload = {
            "command": "fpoly",
            "params": {"n": n, "columns": qvalues},
            "result": {"header": header, "rows": rows},
            "checks": [],
        }
        widths = [max(len(str(r[i])) for r in [header] + rows)
                  for i in range(len(header))]
        plain = ["  ".join(str(v).ljust(w) for v, w in zip(r, widths)).rstrip()
                 for r in [header] + rows]
        return _finish(args, payload, plain, [header] + rows)

    poly = recurrence.joint_poly(n)
    if bindings:
        poly = poly.eval_partial(bindings)
    text = _poly_text(poly)
    payload = {
        "command": "fpoly",
        "params": {"n": n, "bind": bindings},
        "result": {"text": text, "terms": poly.to_json_terms()},
        "checks": [],
    }
    csv_rows = [["coeff", "ex", "ey", "ez", "ep", "eq"]] + [
        [t["coeff"], t["ex"], t["ey"], t["ez"], t["ep"], t["eq"]]
        for t in poly.to_json_terms()]
    return _finish(args, payload, [text], csv_rows)


# ----------------------------------------------------------------- verify

def cmd_verify(args) -> int:
    nmax = _effective_nmax(args, default=8)
    if not 1 <= nmax <= 12:
        raise UsageError("bound must be in 1..12")
    results = run_suite(args.suite, nmax, args.trunc)
    checks = [{"name": r.name, "pass": r.passed, "detail": r.detail}
              for r in results]
    passed = sum(r.passed for r in results)
    payload = {
        "command": "verify",
        "params": {"suite": args.suite, "max_n": nmax, "trunc": args.trunc},
        "result": {"passed": passed, "total": len(results),
                   "ok": passed == len(results)},
        "checks": checks,
    }
    plain = [
        f"{'PASS' if r.passed else 'FAIL'}  {r.name}  ({r.seconds:.2f}s)  {r.detail}"
        for r in results]
    plain.append(f"passed {passed}/{len(results)} checks")
    csv_rows = [["name", "pass", "detail"]] + [
        [r.name, str(r.passed).lower(), r.detail] for r in results]
    _emit(args, payload, plain, csv_rows)
    return 0 if passed == len(results) else 1


# --------------------------------------------------------------- sequence

_SEQUENCE_BOUNDS = {"catalan": 14, "narayana": 14, "returns": 14,
                    "involutions": 14, "a114503": 10, "a056151": 9,
                    "eulerian": 9}


def _compute_sequence(stat: str, nmax: int):
    from . import identities, paths

    if stat == "catalan":
        return [paths.catalan(n) for n in range(1, nmax + 1)]
    if stat == "involutions":
        return [paths.involution_number(n) for n in range(1, nmax + 1)]
    if stat == "narayana":
        return [paths.narayana_row(n) for n in range(1, nmax + 1)]
    if stat == "returns":
        return [paths.returns_triangle_row(n) for n in range(1, nmax + 1)]
    if stat == "a114503":
        return [paths.peak_sum_row(n) for n in range(1, nmax + 1)]
    if stat == "a056151":
        return [identities.max_displacement_counts(n) for n in range(1, nmax + 1)]
    if stat == "eulerian":
        return [identities.eulerian_row(n) for n in range(1, nmax + 1)]
    raise UsageError(f"unknown statistic {stat!r}")


def cmd_sequence(args) -> int:
    bound = _SEQUENCE_BOUNDS[args.stat]
    nmax = _effective_nmax(args, default=min(bound, 8))
    if not 1 <= nmax <= bound:
        raise UsageError(f"bound for {args.stat} must be in 1..{bound}")
    values = _compute_sequence(args.stat, nmax)
    payload = {
        "command": "sequence",
        "params": {"stat": args.stat, "max_n": nmax},
        "result": {"values": values},
        "checks": [],
    }
    if isinstance(values[0], list):
        plain = [" ".join(str(v) for v in row) for row in values]
        csv_rows = values
    else:
        plain = [" ".join(str(v) for v in values)]
        csv_rows = [values]
    return _finish(args, payload, plain, csv_rows)


# -------------------------------------------------------------- lnk/expand

def cmd_lnk(args) -> int:
    if not 1 <= args.k <= args.n <= 10:
        raise UsageError("need 1 <= K <= N <= 10")
    expr = comtet_coeff_explicit(args.n, args.k)
    payload = {
        "command": "lnk",
        "params": {"n": args.n, "k": args.k},
        "result": {"text": str(expr), "words": _expr_json(expr)},
        "checks": [],
    }
    csv_rows = [["coeff", "word"]] + [
        [str(c), " ".join(f"{f.kind}:{f.deriv}:{f.shift}" for f in w)]
        for w, c in expr.sorted_items()]
    return _finish(args, payload, [str(expr)], csv_rows)


def cmd_expand(args) -> int:
    if not 1 <= args.n <= 9:
        raise UsageError("need 1 <= N <= 9")
    expr = operator_expansion(args.n)
    payload = {
        "command": "expand",
        "params": {"n": args.n},
        "result": {"text": str(expr), "words": _expr_json(expr)},
        "checks": [],
    }
    csv_rows = [["coeff", "word"]] + [
        [str(c), " ".join(f"{f.kind}:{f.deriv}:{f.shift}" for f in w)]
        for w, c in expr.sorted_items()]
    return _finish(args, payload, [str(expr)], csv_rows)


# ------------------------------------------------------------------- freq

def cmd_freq(args) -> int:
    counts = _parse_counts(args.counts)
    if len(counts) > 12:
        raise UsageError("vectors longer than 12 are out of bounds")
    try:
        poly = fixed_freq_poly(counts)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    mp = poly.to_multipoly()
    payload = {
        "command": "freq",
        "params": {"counts": list(counts)},
        "result": {"text": str(poly), "terms": mp.to_json_terms()},
        "checks": [],
    }
    csv_rows = [["coeff", "ex", "ey", "ez", "ep", "eq"]] + [
        [t["coeff"], t["ex"], t["ey"], t["ez"], t["ep"], t["eq"]]
        for t in mp.to_json_terms()]
    return _finish(args, payload, [str(poly)], csv_rows)


def _finish(args, payload, plain, csv_rows) -> int:
    _emit(args, payload, plain, csv_rows)
    return 0


# ------------------------------------------------------------------ parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="invq",
        description="Exact joint-statistic polynomials for inversion sequences.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("plain", "json", "csv"),
                       default="plain")

    p = sub.add_parser("fpoly", help="joint statistic polynomial of length N")
    p.add_argument("n", type=int)
    p.add_argument("--bind", metavar="VAR=INT,...",
                   help="bind variables, e.g. x=1,y=1 or all=1")
    p.add_argument("--columns", metavar="q=V1,V2,...",
                   help="tabulate the inversion marginal for n = 1..N "
                        "evaluated at the given q values")
    add_format(p)
    p.set_defaults(func=cmd_fpoly)

    p = sub.add_parser("verify", help="rerun a module's cross-checks")
    p.add_argument("suite", choices=tuple(SUITES) + ("all",))
    p.add_argument("nmax", nargs="?", type=int)
    p.add_argument("--max-n", type=int, dest="max_n")
    p.add_argument("--trunc", type=int,
                   help="series truncation for the identities suite")
    add_format(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sequence", help="classical counting sequences")
    p.add_argument("stat", choices=STAT_NAMES)
    p.add_argument("nmax", nargs="?", type=int)
    p.add_argument("--max-n", type=int, dest="max_n")
    add_format(p)
    p.set_defaults(func=cmd_sequence)

    p = sub.add_parser("lnk", help="Comtet-style coefficient of f_K at length N")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    add_format(p)
    p.set_defaults(func=cmd_lnk)

    p = sub.add_parser("expand", help="normal-ordered (g D_q)^N applied to f")
    p.add_argument("n", type=int)
    add_format(p)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("freq", help="fixed-frequency inversion polynomial")
    p.add_argument("counts", metavar="C0,C1,...")
    add_format(p)
    p.set_defaults(func=cmd_freq)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
