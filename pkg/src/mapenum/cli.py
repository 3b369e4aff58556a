"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 internal
exactness failure. Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import tables_io
from ._backend import KERNELS
from .errors import ExactnessError, FixtureParseError, TableTooSmallError
from .rooted import (
    build_edge_table,
    build_edge_vertex_table,
    lookup,
    reinterpret_as_vertices,
)
from .series import (
    closed_form_value,
    compute_pg,
    fixed_genus_sequence,
    format_polynomial,
    render_rational,
)
from .unrooted import build_unrooted_table

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_EXACTNESS = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _nonneg(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _add_build_options(p):
    p.add_argument("--max-edges", type=_nonneg, required=True)
    p.add_argument("--max-genus", type=_nonneg, default=None,
                   help="defaults to max-edges // 2; larger values are clamped")
    p.add_argument("--threads", type=_positive, default=1)
    p.add_argument("--backend", choices=["auto", *sorted(KERNELS)], default="auto")


def _add_output_options(p):
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--out", type=Path, default=None, help="write here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mapenum",
        description="Exact counts of rooted and unrooted orientable maps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rooted", help="build rooted tables")
    _add_build_options(p)
    p.add_argument("--bivariate", action="store_true",
                   help="count by edges and vertices instead of edges alone")
    _add_output_options(p)

    p = sub.add_parser("unrooted", help="build the unrooted table by edges and vertices")
    _add_build_options(p)
    _add_output_options(p)

    p = sub.add_parser("value", help="print one rooted count")
    p.add_argument("--genus", type=_nonneg, required=True)
    p.add_argument("--edges", type=_nonneg, required=True)
    p.add_argument("--vertices", type=_nonneg, default=None)
    p.add_argument("--method", choices=["cc", "closed", "fixed"], default="cc",
                   help="cc: Carrell-Chapuy table; closed: closed formula from P_g; "
                        "fixed: genus-g recurrence seeded with m_g(2g..6g-4) from cc")

    p = sub.add_parser("poly", help="print P_g(m) and the rational form of M_g(z)")
    p.add_argument("--genus", type=_positive, required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("verify", help="check computed tables against fixtures")
    p.add_argument("--fixtures", type=Path, default=None,
                   help="fixture CSV (default: shipped reference fixtures)")
    p.add_argument("--table", type=Path, default=None,
                   help="exported CSV to check instead of building a table")
    p.add_argument("--max-genus", type=_nonneg, default=None,
                   help="select fixture records with genus <= this")
    p.add_argument("--max-edges", type=_nonneg, default=None,
                   help="select fixture records with edges <= this")
    p.add_argument("--threads", type=_positive, default=1)
    p.add_argument("--verbose", action="store_true", help="print passing records too")

    p = sub.add_parser("bench", help="time full table builds")
    p.add_argument("--max-edges", type=_nonneg, default=100)
    p.add_argument("--start", type=_nonneg, default=20)
    p.add_argument("--step", type=_positive, default=10)
    p.add_argument("--threads", type=_positive, default=1)
    p.add_argument("--backend", choices=["auto", *sorted(KERNELS)], default="auto")
    p.add_argument("--no-unrooted", action="store_true")
    p.add_argument("--compare-backends", action="store_true",
                   help="time the builds on every available kernel")
    p.add_argument("--csv", type=Path, default=None, help="also write the report as CSV")
    return parser


def _genus_bound(args):
    cap = args.max_edges // 2
    return cap if args.max_genus is None else min(args.max_genus, cap)


def _emit(table, args):
    if args.out is None:
        sys.stdout.write(tables_io.export(table, args.format).decode("utf-8"))
    else:
        tables_io.export(table, args.format, args.out)


def cmd_rooted(args):
    G = _genus_bound(args)
    if args.bivariate:
        table = build_edge_vertex_table(G, args.max_edges, threads=args.threads, backend=args.backend)
        table = reinterpret_as_vertices(table)
    else:
        table = build_edge_table(G, args.max_edges, backend=args.backend)
    _emit(table, args)
    return EXIT_OK


def _unrooted_table(G, E, threads=1, backend=None):
    rooted = build_edge_vertex_table(G, E, threads=threads, backend=backend)
    return build_unrooted_table(reinterpret_as_vertices(rooted), backend=backend)


def cmd_unrooted(args):
    _emit(_unrooted_table(_genus_bound(args), args.max_edges, args.threads, args.backend), args)
    return EXIT_OK


def rooted_value(g, n, method="cc", vertices=None):
    """One rooted count by the chosen method (see ``value --help``)."""
    if vertices is not None:
        if method != "cc":
            raise UsageError("--vertices is only supported with --method cc")
        if n < 2 * g:
            return 0
        table = reinterpret_as_vertices(build_edge_vertex_table(g, n))
        return lookup(table, g, n, vertices) if vertices <= n + 1 else 0
    if method == "cc":
        return lookup(build_edge_table(g, n), g, n)
    if g < 1:
        raise UsageError(f"--method {method} needs --genus >= 1")
    top = 6 * g - 4
    table = build_edge_table(g, top)
    if method == "closed":
        return closed_form_value(compute_pg(g, table), n)
    if n <= top:
        return table[g, n]
    return fixed_genus_sequence(g, table.rows[g][2 * g:top + 1], n)[n]


def cmd_value(args):
    print(rooted_value(args.genus, args.edges, args.method, args.vertices))
    return EXIT_OK


def cmd_poly(args):
    g = args.genus
    poly = compute_pg(g, build_edge_table(g, 6 * g - 4))
    if args.format == "json":
        sys.stdout.write(tables_io.poly_to_json(poly))
        return EXIT_OK
    form = render_rational(poly)
    print(f"genus {g}: P_{g}(m) coefficients, m^0 .. m^{poly.degree_bound}")
    for c in poly.coeffs:
        print(c)
    print(f"P_{g}(m) = {format_polynomial(poly.coeffs)}")
    print(f"M_{g}(z) = {form.text}")
    print(f"where {form.substitution}")
    return EXIT_OK


def cmd_verify(args):
    fixtures = tables_io.load_fixtures(args.fixtures)
    selected = [
        r for r in fixtures
        if (args.max_genus is None or r.genus <= args.max_genus)
        and (args.max_edges is None or r.edges <= args.max_edges)
    ]
    print(f"selected {len(selected)} of {len(fixtures)} fixture records", file=sys.stderr)
    if not selected:
        raise UsageError("no fixture records selected")
    if args.table is not None:
        table = tables_io.RecordTable(tables_io.parse_csv(args.table))
        report = tables_io.verify_fixtures(table, selected)
    else:
        kinds = {r.kind for r in selected}
        if kinds != {"unrooted"}:
            raise UsageError("building a table for verification supports unrooted fixtures only; "
                             "pass --table for other kinds")
        E = max(r.edges for r in selected)
        G = min(max(r.genus for r in selected), E // 2)
        report = tables_io.verify_fixtures(_unrooted_table(G, E, args.threads), selected)
    for line in report.lines(verbose=args.verbose):
        print(line)
    return EXIT_OK if report.ok else EXIT_MISMATCH


def cmd_bench(args):
    from . import bench

    if args.compare_backends:
        sizes = range(args.start, args.max_edges + 1, args.step)
        names = sorted(KERNELS)
        stages = ["rooted"] + ([] if args.no_unrooted else ["unrooted"])
        print("n | " + " | ".join(f"{stage} {name} (s)" for stage in stages for name in names))
        for n, rows in bench.compare_backends(sizes, args.threads, unrooted=not args.no_unrooted):
            cells = [f"{rows[name].seconds_rooted:.3f}" for name in names]
            if not args.no_unrooted:
                cells += [f"{rows[name].seconds_unrooted:.3f}" for name in names]
            print(f"{n} | " + " | ".join(cells))
        return EXIT_OK
    report = bench.run_trials(args.max_edges, args.step, args.start,
                              unrooted=not args.no_unrooted, threads=args.threads,
                              backend=args.backend)
    sys.stdout.write(report.format_text())
    if args.csv is not None:
        args.csv.write_text(report.to_csv(), encoding="utf-8")
    return EXIT_OK


COMMANDS = {
    "rooted": cmd_rooted,
    "unrooted": cmd_unrooted,
    "value": cmd_value,
    "poly": cmd_poly,
    "verify": cmd_verify,
    "bench": cmd_bench,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"mapenum: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ExactnessError as exc:
        print(f"mapenum: internal exactness failure: {exc}", file=sys.stderr)
        return EXIT_EXACTNESS
    except (FixtureParseError, TableTooSmallError) as exc:
        print(f"mapenum: error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except OSError as exc:
        print(f"mapenum: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
