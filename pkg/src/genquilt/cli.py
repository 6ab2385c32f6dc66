"""Command-line front end.

One verb per library area; every subcommand takes --format json|csv and
writes a single record (or CSV header + rows) to stdout.  All inputs are
flags, no configuration files or environment, so identical invocations
produce byte-identical output.  Unbounded integers are rendered as decimal
strings, rationals both as num/den and as a 12-place decimal.

Exit codes: 0 success, 2 usage or argument error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import platform
import sys
from fractions import Fraction

from . import __version__, greedy, numerics, quilt, quilt_count, stats
from .errors import BudgetExceededError
from .generacci import SBParams, decompose, generate
from .rendering import decimal_string, percent_string

DEFAULT_TOL = 1e-12


def _fmt_float(x: float | None) -> str:
    return "" if x is None else format(x, ".12g")


def _fraction_fields(name: str, value: Fraction) -> dict:
    return {
        name: f"{value.numerator}/{value.denominator}",
        f"{name}_decimal": decimal_string(value, 12),
    }


def _record(command: str, params: dict, rows: list[dict], tolerances: dict | None = None) -> dict:
    return {
        "command": command,
        "params": params,
        "rows": rows,
        "meta": {
            "tool": "genquilt",
            "version": __version__,
            "runtime": f"python {platform.python_version()}",
            "tolerances": tolerances or {},
        },
    }


def _sb(args: argparse.Namespace, parser: argparse.ArgumentParser) -> SBParams:
    if args.s is None or args.b is None:
        parser.error("generacci requires --s and --b")
    try:
        return SBParams(args.s, args.b)
    except ValueError as exc:
        parser.error(str(exc))
    raise AssertionError  # parser.error raises


def _cmd_seq(args, parser) -> dict:
    if args.target == "quilt":
        terms = quilt.quilt_terms(args.count).terms(args.count)
        params = {"target": "quilt", "count": args.count}
    else:
        sb = _sb(args, parser)
        terms = generate(sb, args.count).terms(args.count)
        params = {"target": "generacci", "s": sb.s, "b": sb.b, "count": args.count}
    rows = [{"n": n, "term": str(t)} for n, t in enumerate(terms, start=1)]
    return _record("seq", params, rows)


def _cmd_decompose(args, parser) -> dict:
    params: dict = {"target": args.target, "m": str(args.m)}
    if args.target == "quilt-greedy":
        outcome = greedy.greedy_decompose(args.m)
        rows = [
            {"index": i, "value": str(v), "legal": outcome.legal}
            for i, v in zip(outcome.decomposition.indices, outcome.decomposition.values)
        ]
    elif args.target == "quilt-greedy6":
        dec = greedy.greedy6_decompose(args.m)
        rows = [{"index": i, "value": str(v)} for i, v in zip(dec.indices, dec.values)]
    else:
        sb = _sb(args, parser)
        params.update({"s": sb.s, "b": sb.b})
        dec = decompose(generate(sb, 1), args.m)
        rows = [{"index": i, "value": str(v)} for i, v in zip(dec.indices, dec.values)]
    record = _record("decompose", params, rows)
    record["_columns"] = ["index", "value"]  # m = 0 decomposes to no rows
    return record


def _cmd_count(args, parser) -> dict:
    n = quilt_count.count_decompositions(args.m)
    rows = [{"m": str(args.m), "count": str(n)}]
    return _record("count", {"target": "quilt", "m": str(args.m)}, rows)


def _cmd_tables(args, parser) -> dict:
    if args.target == "quilt-count":
        tables = quilt_count.count_tables(args.n)
        rows = [
            {"n": n, "d": str(tables.d[n]), "c": str(tables.c[n]), "b": str(tables.b[n])}
            for n in range(1, args.n + 1)
        ]
    else:
        table = greedy.success_table(args.n)
        cache = quilt.shared_cache()
        rows = [
            {
                "n": n,
                "q": str(cache.term(n)),
                "h": str(table.h[n]),
                **_fraction_fields("rho", table.rho[n]),
                "rho_percent": percent_string(table.rho[n]),
            }
            for n in range(1, args.n + 1)
        ]
    return _record("tables", {"target": args.target, "n": args.n}, rows)


def _cmd_average(args, parser) -> dict:
    report = quilt_count.average_decompositions(args.n)
    row = {
        "n": report.n,
        "total": str(report.total),
        **_fraction_fields("average", report.average),
        "exponent_estimate": _fmt_float(report.exponent_estimate),
    }
    return _record("average", {"target": "quilt", "n": args.n}, [row])


def _root_row(label: str, report: numerics.RootReport) -> dict:
    return {
        "polynomial": label,
        "dominant_root": _fmt_float(report.dominant_root),
        "error_bound": _fmt_float(report.error_bound),
        "secondary_modulus": _fmt_float(report.secondary_modulus),
        "leading_constant": _fmt_float(report.leading_constant),
        "residual": _fmt_float(report.residual),
    }


def _with_fit(report: numerics.RootReport, terms: list[int], stride: int) -> numerics.RootReport:
    fit = numerics.fit_leading_constant(terms, report.dominant_root, stride)
    return numerics.RootReport(
        dominant_root=report.dominant_root,
        error_bound=report.error_bound,
        secondary_modulus=report.secondary_modulus,
        leading_constant=fit.value,
        residual=fit.residual,
    )


def _cmd_roots(args, parser) -> dict:
    tol = args.tol
    params: dict = {"target": args.target, "tol": _fmt_float(tol)}
    if args.target == "quilt":
        poly = numerics.quilt_char()
        report = numerics.dominant_root(poly, tol)
        report = _with_fit(report, quilt.quilt_terms(60).terms(60), 1)
        label = str(poly)
    elif args.target == "generacci":
        sb = _sb(args, parser)
        params.update({"s": sb.s, "b": sb.b})
        report = numerics.generacci_char_analysis(sb, tol)
        report = _with_fit(report, generate(sb, 60 * sb.b).terms(60 * sb.b), sb.b)
        label = str(numerics.generacci_char(sb))
    elif args.target == "quilt-count":
        poly = numerics.count_char()
        report = numerics.dominant_root(poly, tol)
        report = _with_fit(report, quilt_count.count_tables(100).d[1:], 1)
        label = str(poly)
    else:  # greedy-aux
        poly = numerics.greedy_aux_char()
        report = numerics.dominant_root(poly, tol)
        g_terms = [h + 1 for h in greedy.success_table(100).h[1:]]
        report = _with_fit(report, g_terms, 1)
        label = str(poly)
    return _record("roots", params, [_root_row(label, report)], tolerances={"tol": _fmt_float(tol)})


def _cmd_greedy(args, parser) -> dict:
    table = greedy.success_table(args.n)
    rho = table.rho[args.n]
    row = {
        "n": args.n,
        "h": str(table.h[args.n]),
        **_fraction_fields("rho", rho),
        "rho_percent": percent_string(rho),
    }
    return _record("greedy", {"target": "ratio", "n": args.n}, [row])


def _cmd_stats(args, parser) -> dict:
    sb = _sb(args, parser)
    fit = stats.gaussian_fit(sb, args.n_min, args.n_max)
    row = {
        "a_hat": _fmt_float(fit.a_hat),
        "b_hat": _fmt_float(fit.b_hat),
        "c_hat": _fmt_float(fit.c_hat),
        "d_hat": _fmt_float(fit.d_hat),
        "ks_distance": _fmt_float(fit.ks_distance),
    }
    params = {"target": "generacci", "s": sb.s, "b": sb.b, "n_min": args.n_min, "n_max": args.n_max}
    return _record("stats", params, [row])


def _cmd_normalize(args, parser) -> dict:
    try:
        indices = [int(part) for part in args.indices.split(",") if part.strip()]
    except ValueError:
        parser.error(f"--indices must be a comma-separated list of integers, got {args.indices!r}")
    trace = greedy.normalize_to_greedy6(indices)
    rows = [
        {
            "step": k,
            "move": step.move,
            "before": "+".join(map(str, step.before)),
            "after": "+".join(map(str, step.after)),
        }
        for k, step in enumerate(trace.steps, start=1)
    ]
    rows.append(
        {
            "step": "final",
            "move": "",
            "before": "",
            "after": "+".join(map(str, trace.final.indices)),
        }
    )
    params = {"target": "quilt", "indices": args.indices, "m": str(trace.final.total)}
    return _record("normalize", params, rows)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="genquilt",
        description="Exact sequences, decompositions, counts, and growth constants.",
    )

    def add(name: str, targets: list[str], **flags):
        sub = commands.add_parser(name)
        sub.add_argument("target", choices=targets)
        for flag, kw in flags.items():
            sub.add_argument(f"--{flag.replace('_', '-')}", **kw)
        sub.add_argument("--format", choices=("json", "csv"), default="json")
        return sub

    commands = parser.add_subparsers(dest="command", required=True)
    intarg = {"type": int, "required": True}
    sbargs = {"s": {"type": int}, "b": {"type": int}}
    add("seq", ["quilt", "generacci"], count=intarg, **sbargs)
    add("decompose", ["quilt-greedy", "quilt-greedy6", "generacci"], m=intarg, **sbargs)
    add("count", ["quilt"], m=intarg)
    add("tables", ["quilt-count", "greedy-success"], n=intarg)
    add("average", ["quilt"], n=intarg)
    add("roots", ["quilt", "generacci", "quilt-count", "greedy-aux"],
        tol={"type": float, "default": DEFAULT_TOL}, **sbargs)
    add("greedy", ["ratio"], n=intarg)
    add("stats", ["generacci"], n_min=intarg, n_max=intarg, **sbargs)
    add("normalize", ["quilt"], indices={"type": str, "required": True})
    return parser


_HANDLERS = {
    "seq": _cmd_seq,
    "decompose": _cmd_decompose,
    "count": _cmd_count,
    "tables": _cmd_tables,
    "average": _cmd_average,
    "roots": _cmd_roots,
    "greedy": _cmd_greedy,
    "stats": _cmd_stats,
    "normalize": _cmd_normalize,
}


def _emit(record: dict, fmt: str, out) -> None:
    fallback_columns = record.pop("_columns", [])
    if fmt == "json":
        out.write(json.dumps(record, indent=2))
        out.write("\n")
        return
    rows = record["rows"]
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(rows[0].keys() if rows else fallback_columns)
    for row in rows:
        writer.writerow([str(v) for v in row.values()])
    out.write(buf.getvalue())


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        record = _HANDLERS[args.command](args, parser)
    except BudgetExceededError as exc:
        print(f"genquilt: budget exceeded: {exc}", file=sys.stderr)
        return 3
    except (ValueError, ArithmeticError) as exc:
        print(f"genquilt: {exc}", file=sys.stderr)
        return 2
    _emit(record, args.format, sys.stdout)
    return 0


if __name__ == "__main__":
    sys.exit(main())
