"""Command-line front end.

Usage:
    tallycone hb -n 3 --format json
    tallycone count -n 3 -G 2
    tallycone series -n 5 --prefix 6
    tallycone decompose --file groupH.json
    tallycone --selftest

Exit status: 0 on success, 1 when a verification fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import basis, counting, dual, formats, polytope, series
from .errors import TallyconeError
from .formats import dumps, format_fraction
from .sheets import ScoreSheet

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _teams(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if n < 2:
        raise argparse.ArgumentTypeError(f"need at least 2 teams, got {n}")
    return n


def _nonneg(text: str) -> int:
    try:
        g = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if g < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {g}")
    return g


def _positive(text: str) -> int:
    k = _nonneg(text)
    if k == 0:
        raise argparse.ArgumentTypeError("must be positive")
    return k


def _exponents(text: str) -> list[int]:
    try:
        ds = [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad exponent list: {text!r}")
    if not ds or min(ds) < 1:
        raise argparse.ArgumentTypeError("exponents must be positive integers")
    return ds


def workers() -> int:
    try:
        return max(1, int(os.environ.get("TALLYCONE_THREADS", "1")))
    except ValueError:
        return 1


# -- verbs -------------------------------------------------------------------

def _sheet_list_out(sheets: list[ScoreSheet], fmt: str) -> str:
    if fmt == "csv":
        return formats.sheets_to_csv(sheets)
    if fmt == "text":
        return "\n\n".join(str(s) for s in sheets) + "\n"
    return dumps(formats.sheets_to_json(sheets))


def cmd_hb(args):
    sheets = [h.sheet for h in basis.hilbert_basis(args.n)]
    return EXIT_OK, _sheet_list_out(sheets, args.format)


def cmd_verify_hb(args):
    if args.file:
        candidate = formats.read_sheet_list(args.file)
    else:
        candidate = [h.sheet for h in basis.hilbert_basis(args.n)]
    report = basis.verify_hilbert_basis(args.n, candidate, seed=args.seed,
                                        samples=args.samples)
    status = EXIT_OK if report.passed else EXIT_FAIL
    if args.format == "text":
        data = formats.report_to_json(report)
        lines = [f"generation: {data['generation']['status']} "
                 f"({report.checked_sheets} sheets, {len(report.generation_failures)} failures)",
                 f"irreducibility: {data['irreducibility']['status']} "
                 f"({report.checked_pairs} pairs, {len(report.irreducibility_failures)} failures)"]
        for s in report.generation_failures[:5]:
            lines.append("not generated:\n" + str(s))
        for x, y in report.irreducibility_failures[:5]:
            lines.append(f"reducible pair:\n{x}\nminus\n{y}")
        return status, "\n".join(lines) + "\n"
    return status, dumps(formats.report_to_json(report))


def cmd_decompose(args):
    target = formats.read_sheet(args.file)
    d = basis.decompose(target)
    if not d.is_valid():
        return EXIT_FAIL, dumps(formats.decomposition_to_json(d))
    if args.format == "text":
        return EXIT_OK, "\n +\n".join(str(p.sheet) for p in d.parts) + "\n"
    return EXIT_OK, dumps(formats.decomposition_to_json(d))


def _count(n: int, G: int, args) -> int:
    if args.unordered:
        if args.cumulative:
            return counting.count_unordered_cumulative(n, G)
        return counting.count_unordered(n, G)
    if args.brute_force:
        return counting.count_ordered_bruteforce(n, G)
    return counting.count_ordered(n, G)


def cmd_count(args):
    value = _count(args.n, args.G, args)
    if args.format == "json":
        return EXIT_OK, dumps({"teams": args.n, "G": args.G, "count": str(value)})
    return EXIT_OK, f"{value}\n"


def cmd_count_table(args):
    if args.g_min > args.g_max:
        raise UsageError("--g-min must not exceed --g-max")
    if args.unordered or args.brute_force:
        rows = [(g, _count(args.n, g, args)) for g in range(args.g_min, args.g_max + 1)]
    else:
        table = counting.count_table(args.n, args.g_max)
        rows = [(g, table[g]) for g in range(args.g_min, args.g_max + 1)]
    if args.format == "json":
        return EXIT_OK, dumps(formats.count_table_to_json(args.n, rows))
    return EXIT_OK, formats.count_table_to_csv(rows)


def cmd_quasipoly(args):
    p = args.period or counting.minimal_period(args.n, limit=_limit(args, 4))
    q = counting.fit_quasipolynomial(args.n, p)
    if args.format == "json":
        return EXIT_OK, dumps(q.to_json())
    lines = [f"period {q.period}, degree {q.degree}"]
    for c, row in enumerate(q.coefficients):
        terms = " + ".join(f"({format_fraction(a)})G^{l}" for l, a in enumerate(row) if a)
        lines.append(f"G = {c} mod {q.period}: {terms}")
    return EXIT_OK, "\n".join(lines) + "\n"


def _limit(args, default):
    return default + 1 if args.long_run else default


def cmd_period(args):
    p = counting.minimal_period(args.n, limit=_limit(args, 4))
    if args.format == "json":
        return EXIT_OK, dumps({"teams": args.n, "period": p})
    return EXIT_OK, f"{p}\n"


def cmd_multiplicity(args):
    e = counting.multiplicity_of(args.n, limit=_limit(args, 4))
    if args.format == "json":
        return EXIT_OK, dumps({"teams": args.n, "multiplicity": format_fraction(e)})
    return EXIT_OK, f"{format_fraction(e)}\n"


def cmd_series(args):
    den = args.denominator or list(series.default_denominator(args.n))
    if args.prefix:
        num = series.series_prefix(args.n, args.prefix, den)
    else:
        if args.n > 6 and not args.long_run:
            raise UsageError("full series for n > 6 needs --long-run (or use --prefix)")
        num = list(series.hilbert_series(args.n, den).numerator)
    if args.format == "json":
        return EXIT_OK, dumps(series.SeriesRep(tuple(num), tuple(den)).to_json())
    return EXIT_OK, (",".join(str(c) for c in num) + "\n"
                     + f"denominator: {series.format_denominator(den)}\n")


def cmd_expand(args):
    if args.file:
        rep = series.SeriesRep.from_json(json.loads(Path(args.file).read_text()))
    elif args.n:
        rep = series.hilbert_series(args.n)
    else:
        raise UsageError("expand needs --file or -n")
    coeffs = series.expand_series(rep, args.k)
    if args.format == "json":
        return EXIT_OK, dumps({"coefficients": [str(c) for c in coeffs]})
    return EXIT_OK, ",".join(str(c) for c in coeffs) + "\n"


def cmd_polytope(args):
    if args.action == "facets":
        return EXIT_OK, dumps(polytope.facet_system(args.n).to_json())
    if args.action == "vertices":
        r = polytope.verify_vertices(args.n, limit=_limit(args, 4))
        data = {"teams": r.teams, "dimension": r.dimension,
                "vertices": len(r.vertices),
                "not_vertices": [list(x) for x in r.not_vertices],
                "extra_lattice_points": [list(x) for x in r.extra_lattice_points],
                "status": "pass" if r.passed else "fail"}
        return (EXIT_OK if r.passed else EXIT_FAIL), dumps(data)
    tri = polytope.pulling_triangulation(args.n, long_run=args.long_run)
    data = tri.to_json()
    data["total_volume"] = tri.total_volume
    data["unimodular"] = tri.is_unimodular()
    if args.format == "text":
        out = (f"{len(tri.simplices)} simplices, total volume {tri.total_volume}, "
               f"unimodular: {tri.is_unimodular()}\n")
    else:
        out = dumps(data)
    return (EXIT_OK if tri.is_unimodular() else EXIT_FAIL), out


def cmd_dual_hb(args):
    system = dual.cone_system(args.n)
    points = dual.hilbert_basis_completion(system, cap=args.cap, long_run=args.long_run)
    sheets = [ScoreSheet(args.n, p) for p in points]
    return EXIT_OK, _sheet_list_out(sheets, args.format)


# -- selftest ----------------------------------------------------------------

def _check_counts(n: int) -> tuple[str, bool]:
    g_max = 6 if n <= 3 else 4
    ok = all(counting.count_ordered(n, g) == counting.count_ordered_bruteforce(n, g)
             for g in range(g_max + 1))
    return f"count_ordered vs brute force, n={n}", ok


def _check_series(n: int) -> tuple[str, bool]:
    rep = series.hilbert_series(n)
    k = sum(rep.denominator) + 16
    ok = series.expand_series(rep, k) == counting.count_table(n, k - 1)
    return f"series expansion vs count table, n={n}", ok


def _check_dual(n: int) -> tuple[str, bool]:
    got = set(dual.hilbert_basis_completion(dual.cone_system(n)))
    want = {h.cells for h in basis.hilbert_basis(n)}
    return f"dual completion vs constructive basis, n={n}", got == want


def _check_periods(n: int) -> tuple[str, bool]:
    p = counting.minimal_period(n)
    return f"minimal period divides lcm(1..{n}), n={n}", counting.lcm_upto(n) % p == 0


SELFTEST_CHECKS = [(_check_counts, n) for n in (2, 3, 4)] + \
                  [(_check_series, n) for n in (2, 3, 4)] + \
                  [(_check_dual, n) for n in (2, 3, 4)] + \
                  [(_check_periods, n) for n in (2, 3, 4)]


def _run_check(item):
    fn, n = item
    return fn(n)


def selftest() -> tuple[int, str]:
    k = workers()
    if k > 1:
        with ProcessPoolExecutor(max_workers=k) as pool:
            results = list(pool.map(_run_check, SELFTEST_CHECKS))
    else:
        results = [_run_check(item) for item in SELFTEST_CHECKS]
    lines = [f"{'PASS' if ok else 'FAIL'} {name}" for name, ok in results]
    status = EXIT_OK if all(ok for _, ok in results) else EXIT_FAIL
    return status, "\n".join(lines) + "\n"


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tallycone",
        description="Invariants of the monoid of ordered round-robin score sheets.")
    parser.add_argument("--selftest", action="store_true",
                        help="run the cross-oracle suite and exit")
    sub = parser.add_subparsers(dest="verb")

    def verb(name, func, needs_n=True, **kw):
        p = sub.add_parser(name, **kw)
        if needs_n:
            p.add_argument("-n", type=_teams, required=True, help="number of teams")
        p.add_argument("--format", choices=("json", "csv", "text"), default="text")
        p.add_argument("--seed", type=int, default=basis.DEFAULT_SEED)
        p.add_argument("--long-run", action="store_true",
                       help="allow the slow extended computations")
        p.add_argument("-o", "--output", help="write to this file instead of stdout")
        p.set_defaults(func=func)
        return p

    verb("hb", cmd_hb, help="constructive Hilbert basis")
    p = verb("verify-hb", cmd_verify_hb, help="verify a candidate Hilbert basis")
    p.add_argument("--file", help="candidate list (JSON array or CSV); default: hb")
    p.add_argument("--samples", type=_nonneg, default=1000)
    p = verb("decompose", cmd_decompose, needs_n=False,
             help="split an ordered sheet into Hilbert basis elements")
    p.add_argument("--file", required=True, help="sheet as JSON or CSV")
    p.set_defaults(format="json")
    for name, func, text in (("count", cmd_count, "Hilbert function at one G"),
                             ("count-table", cmd_count_table, "Hilbert function over a G range")):
        p = verb(name, func, help=text)
        if name == "count":
            p.add_argument("-G", type=_nonneg, required=True, help="total goals")
        else:
            p.add_argument("--g-min", type=_nonneg, default=0)
            p.add_argument("--g-max", "-G", type=_nonneg, required=True)
            p.set_defaults(format="csv")
        p.add_argument("--unordered", action="store_true", help="count all sheets")
        p.add_argument("--cumulative", action="store_true",
                       help="with --unordered: count sheets with at most G goals")
        p.add_argument("--brute-force", action="store_true",
                       help="use the enumeration oracle (small n, G only)")
    p = verb("quasipoly", cmd_quasipoly, help="fit the Hilbert quasipolynomial")
    p.add_argument("--period", type=_positive, help="assumed period (default: minimal)")
    verb("period", cmd_period, help="minimal quasipolynomial period")
    verb("multiplicity", cmd_multiplicity, help="multiplicity from the fitted leading term")
    p = verb("series", cmd_series, help="Hilbert series numerator")
    p.add_argument("--prefix", type=_positive, help="only the first K coefficients")
    p.add_argument("--denominator", type=_exponents,
                   help="comma-separated exponents d for factors (1-t^d)")
    p = verb("expand", cmd_expand, needs_n=False, help="expand a series representation")
    p.add_argument("-n", type=_teams, help="use the computed series for n teams")
    p.add_argument("--file", help="series JSON {numerator, denominator}")
    p.add_argument("-k", type=_positive, required=True, help="number of coefficients")
    p = verb("polytope", cmd_polytope, help="degree-one polytope checks")
    p.add_argument("--action", choices=("facets", "vertices", "triangulate"),
                   default="triangulate")
    p = verb("dual-hb", cmd_dual_hb, help="Hilbert basis by halfspace completion")
    p.add_argument("--cap", type=_positive, default=dual.DEFAULT_CAP)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.selftest:
        status, out = selftest()
        sys.stdout.write(out)
        return status
    if not args.verb:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        status, out = args.func(args)
    except (UsageError, TallyconeError, ValueError, OSError) as exc:
        print(f"tallycone {args.verb}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.output:
        Path(args.output).write_text(out)
    else:
        sys.stdout.write(out)
    return status


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
