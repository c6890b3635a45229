"""Command-line front end: per-graph invariant tables, bound evaluation,
exhaustive verification, attainer search, class ordering, and the
max-degree monotonicity probe.

Exit codes: 0 success (and zero violations for verify), 1 violations or
failed rows, 2 usage or input errors.  Output for a fixed command line and
input file is byte-identical across runs.  Set ABCSPECTRA_WORKERS to
control the per-graph worker pool (default: machine parallelism).
"""

import argparse
import json
import sys

from . import experiments as ex
from .bounds import bound_report, degree_upper_bound, degree_upper_bound_int
from .enumeration import GraphClassSpec
from .graph6 import Graph6Error, encode_graph6, parse_graph6, HEADER
from .graphs import family, FAMILIES
from .invariants import (abc_index, abc_spectral, estrada_bounds, r_minus_one)

THEOREM_IDS = {
    "thm2.1": "degree upper bound sqrt(delta + (2m-n+1)/delta - 2)",
    "cor2.2": "cycle-rank bound sqrt(n-2+2c/(n-1)) for c <= (n-1)/2",
    "cor2.3": "integer-step bound sqrt(delta + ceil((2m-n+1)/delta) - 2)",
    "cor2.4": "global cap sqrt(2n-4), equality only at the complete graph",
    "estrada": "row-sum sandwich (2/n)*ABC <= rho <= max row sum",
    "tree-upper": "tree bound sqrt(n-2), equality only at the star",
    "thm3.1": "tree ranking: star first, double star second, path last",
    "lem1.1": "tree ranking extremes (same checks as thm3.1)",
    "lem1.3": "unicyclic extremes: cycle min at sqrt(2), star+edge max",
    "lem3.3": "double star above sqrt(n-3.5)",
    "lem3.4": "max-degree n-3 trees below sqrt(n-3.5)",
}


def _parse_range(text, flag):
    text = text.strip()
    try:
        if ".." in text:
            lo, hi = text.split("..")
            values = list(range(int(lo), int(hi) + 1))
        else:
            values = [int(text)]
    except ValueError:
        raise ValueError(f"{flag} expects an integer or a lo..hi range, got {text!r}")
    if not values:
        raise ValueError(f"{flag} range {text!r} is empty")
    return values


def _parse_family(text):
    if ":" not in text:
        raise ValueError(f"--family expects name:params, got {text!r}")
    name, _, params = text.partition(":")
    if name not in FAMILIES:
        raise ValueError(f"--family {name!r} unknown; choose from {sorted(FAMILIES)}")
    try:
        args = [int(p) for p in params.split(",") if p.strip()]
    except ValueError:
        raise ValueError(f"--family parameters must be integers, got {params!r}")
    built = family(name, *args)
    label = f"{name}:{params}"
    if isinstance(built, tuple):
        return [(f"{label}#{i}", member) for i, member in enumerate(built)]
    return [(label, built)]


def _load_inputs(args):
    """(label, graph, error) triples from the single configured source."""
    if (args.input is None) == (args.family is None):
        raise ValueError("exactly one input source is required: "
                         "a graph6 file argument or --family")
    if args.family is not None:
        return [(label, g, None) for label, g in _parse_family(args.family)]
    entries = []
    with open(args.input, "r", encoding="ascii") as handle:
        for lineno, raw in enumerate(handle, start=1):
            text = raw.strip()
            if not text or text == HEADER:
                continue
            try:
                entries.append((f"line {lineno}", parse_graph6(text), None))
            except Graph6Error as exc:
                entries.append((f"line {lineno}", None, str(exc)))
    return entries


def _render_table(header, rows, out):
    widths = [len(h) for h in header]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    out.write("  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip() + "\n")
    for row in rows:
        out.write("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() + "\n")


def _num(value, fmt):
    if value is None:
        return ""
    if isinstance(value, float):
        return f"{value:.10g}" if fmt == "table" else repr(value)
    return str(value)


def _emit(header, rows, args):
    out = open(args.output, "w", encoding="utf-8") if args.output else sys.stdout
    try:
        if args.format == "json":
            payload = [dict(zip(header, row)) for row in rows]
            json.dump(payload, out, indent=2)
            out.write("\n")
        elif args.format == "csv":
            out.write(",".join(header) + "\n")
            for row in rows:
                out.write(",".join(row) + "\n")
        else:
            _render_table(header, rows, out)
    finally:
        if args.output:
            out.close()


def cmd_compute(args):
    entries = _load_inputs(args)
    header = ["source", "graph6", "n", "m", "delta", "c", "abc_index",
              "r_minus_one", "rho", "estrada_lower", "estrada_upper",
              "deg_bound", "deg_bound_int", "error"]
    if args.perron:
        header.insert(-1, "perron")
    rows = []
    failed = 0
    for label, g, err in entries:
        if err is not None:
            failed += 1
            rows.append([label] + [""] * (len(header) - 2) + [err])
            continue
        if not g.connected:
            failed += 1
            row = [label, encode_graph6(g), str(g.n), str(g.m),
                   str(g.max_degree), ""]
            row += [_num(abc_index(g), args.format),
                    _num(r_minus_one(g), args.format)]
            row += [""] * (5 + (1 if args.perron else 0))
            row.append("disconnected graph: spectral columns refused")
            rows.append(row)
            continue
        cells = [label, encode_graph6(g), str(g.n), str(g.m),
                 str(g.max_degree), str(g.cycle_rank),
                 _num(abc_index(g), args.format),
                 _num(r_minus_one(g), args.format)]
        res = abc_spectral(g)
        lo, hi = estrada_bounds(g) if g.n >= 2 else (0.0, 0.0)
        cells += [_num(res.radius, args.format), _num(lo, args.format),
                  _num(hi, args.format)]
        if g.n >= 2:
            cells += [_num(degree_upper_bound(g.n, g.m, g.max_degree), args.format),
                      _num(degree_upper_bound_int(g.n, g.m, g.max_degree),
                           args.format)]
        else:
            cells += ["", ""]
        if args.perron:
            cells.append(" ".join(_num(float(v), args.format) for v in res.perron))
        cells.append("")
        rows.append(cells)
    _emit(header, rows, args)
    return 1 if failed else 0


def cmd_bounds(args):
    entries = _load_inputs(args)
    header = ["source", "graph6", "n", "m", "delta", "excess", "k",
              "deg_bound", "deg_bound_int", "estrada_lower", "estrada_upper",
              "class_bounds", "error"]
    rows = []
    failed = 0
    for label, g, err in entries:
        if err is None and not g.connected:
            err = "disconnected graph: bounds refused"
        if err is None and g.n < 2:
            err = "single vertex: bounds refused"
        if err is not None:
            failed += 1
            graph6_cell = "" if g is None else encode_graph6(g)
            rows.append([label, graph6_cell] + [""] * (len(header) - 3) + [err])
            continue
        rep = bound_report(g)
        labeled = ";".join(f"{k}={_num(v, args.format)}"
                           for k, v in sorted(rep.class_bounds.items()))
        rows.append([label, encode_graph6(g), str(rep.n), str(rep.m),
                     str(rep.delta), str(rep.excess), str(rep.k),
                     _num(rep.degree_bound, args.format),
                     _num(rep.degree_bound_int, args.format),
                     _num(rep.estrada_lower, args.format),
                     _num(rep.estrada_upper, args.format),
                     labeled, ""])
    _emit(header, rows, args)
    return 1 if failed else 0


def _class_spec(args, n, default_kind=None):
    kind = args.klass or default_kind
    if kind is None:
        raise ValueError("--class is required for this command")
    return GraphClassSpec(kind, n, c=args.c, delta=args.delta, m=args.m)


def _run_verify(args, n):
    theorem = args.theorem
    if theorem in ("thm2.1", "cor2.3", "cor2.4", "estrada"):
        spec = _class_spec(args, n, "connected")
        bound = {"thm2.1": "degree", "cor2.3": "degree-int",
                 "cor2.4": "complete", "estrada": "estrada"}[theorem]
        return ex.verify_upper_bound(spec, bound, args.tol)
    if theorem == "cor2.2":
        spec = _class_spec(args, n)
        return ex.verify_upper_bound(spec, "cyclomatic", args.tol)
    if theorem == "tree-upper":
        spec = _class_spec(args, n, "trees")
        return ex.verify_upper_bound(spec, "tree", args.tol)
    if theorem in ("thm3.1", "lem1.1"):
        return ex.verify_tree_ordering(n, args.tol)
    if theorem == "lem1.3":
        return ex.verify_unicyclic_extremes(n, args.tol)
    if theorem == "lem3.3":
        return ex.verify_double_star_gate([n], args.tol)
    if theorem == "lem3.4":
        return ex.verify_near_max_degree_trees([n], args.tol)
    raise ValueError(f"--theorem {theorem!r} unknown; choose from "
                     f"{sorted(THEOREM_IDS)}")


def _write_reports(reports, args):
    if not args.output:
        return
    if args.format == "json" or args.output.endswith(".json"):
        payload = [r.to_json_dict() for r in reports]
        with open(args.output, "w", encoding="ascii") as handle:
            json.dump(payload if len(payload) > 1 else payload[0], handle,
                      indent=2)
            handle.write("\n")
    else:
        with open(args.output, "w", encoding="ascii") as handle:
            handle.write(ex.CSV_HEADER + "\n")
            for rep in reports:
                for row in rep.rows:
                    handle.write(row.csv() + "\n")


def cmd_verify(args):
    reports = []
    for n in _parse_range(args.n, "--n"):
        rep = _run_verify(args, n)
        reports.append(rep)
        status = "pass" if rep.passed else "FAIL"
        print(f"{args.theorem} {rep.class_label}: graphs={rep.summary['graphs']} "
              f"violations={rep.violations} {status}")
    _write_reports(reports, args)
    return 0 if all(r.passed for r in reports) else 1


def cmd_search(args):
    reports = []
    for n in _parse_range(args.n, "--n"):
        spec = _class_spec(args, n, "connected")
        rep = ex.find_attainers(spec, args.tol)
        reports.append(rep)
        print(f"attainers {rep.class_label}: {len(rep.summary['attainers'])} found "
              f"(star={rep.summary['contains_star']} "
              f"complete={rep.summary['contains_complete']})")
        for key in rep.summary["attainers"]:
            print(f"  {key}")
    _write_reports(reports, args)
    return 0


def cmd_order(args):
    reports = []
    for n in _parse_range(args.n, "--n"):
        spec = _class_spec(args, n, "connected")
        rep = ex.order_class(spec, args.tol)
        reports.append(rep)
        print(f"ordering {rep.class_label}: {rep.summary['graphs']} graphs, "
              f"{len(rep.summary['ties'])} tie group(s)")
        if not args.output:
            for row in rep.rows:
                print(f"  {row.rho!r}  {row.key}")
    _write_reports(reports, args)
    return 0


def cmd_probe(args):
    if args.question != "q4.2":
        raise ValueError(f"--question {args.question!r} unknown; only q4.2 is available")
    reports = []
    for n in _parse_range(args.n, "--n"):
        spec = _class_spec(args, n, "trees")
        rep = ex.probe_delta_monotonicity(spec, args.tol)
        reports.append(rep)
        witness = rep.summary["witness_below"]
        print(f"probe {rep.class_label}: monotone from max degree "
              f"{rep.summary['monotone_level']}")
        if witness:
            hi, lo = witness["higher_degree"], witness["lower_degree"]
            print(f"  blocked below by delta={hi['delta']} rho={hi['rho']!r} ({hi['key']})")
            print(f"            vs       delta={lo['delta']} rho={lo['rho']!r} ({lo['key']})")
    _write_reports(reports, args)
    return 0


def _add_io_flags(parser, formats=("table", "csv", "json")):
    parser.add_argument("--format", choices=formats, default=formats[0])
    parser.add_argument("--output", help="write to this path instead of stdout")


def _add_class_flags(parser):
    parser.add_argument("--class", dest="klass",
                        choices=["trees", "connected", "unicyclic", "c-cyclic",
                                 "trees-max-degree"])
    parser.add_argument("--n", required=True, help="order or lo..hi range")
    parser.add_argument("--m", type=int, help="edge count filter (connected class)")
    parser.add_argument("--c", type=int, help="cycle rank (c-cyclic class)")
    parser.add_argument("--delta", type=int, help="max degree (trees-max-degree)")
    parser.add_argument("--tol", type=float, default=ex.DEFAULT_TOL)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="abcspectra",
        description="ABC matrix spectral radius toolkit: invariants, bounds, "
                    "exhaustive verification, and extremal search over small "
                    "graph classes.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="per-graph invariant table")
    p.add_argument("input", nargs="?", help="newline-delimited graph6 file")
    p.add_argument("--family",
                   help="family spec name:params, e.g. cycle:8 or double_star:5,1")
    p.add_argument("--perron", action="store_true",
                   help="include the unit eigenvector of the radius")
    _add_io_flags(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("bounds", help="per-graph bound report")
    p.add_argument("input", nargs="?")
    p.add_argument("--family")
    _add_io_flags(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("verify", help="exhaustive check of a named result")
    p.add_argument("--theorem", required=True, choices=sorted(THEOREM_IDS),
                   help="; ".join(f"{k}: {v}" for k, v in sorted(THEOREM_IDS.items())))
    _add_class_flags(p)
    _add_io_flags(p, formats=("csv", "json"))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="bound attainer search")
    p.add_argument("--attainers", action="store_true",
                   help="list graphs meeting the degree bound with equality")
    _add_class_flags(p)
    _add_io_flags(p, formats=("csv", "json"))
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("order", help="rank a class by spectral radius")
    _add_class_flags(p)
    _add_io_flags(p, formats=("csv", "json"))
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("probe", help="max-degree monotonicity exploration")
    p.add_argument("--question", default="q4.2")
    _add_class_flags(p)
    _add_io_flags(p, formats=("csv", "json"))
    p.set_defaults(func=cmd_probe)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
