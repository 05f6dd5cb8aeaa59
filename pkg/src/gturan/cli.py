"""Command-line entry point: ``gturan <subcommand>`` or ``python -m gturan``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .constructions import FAMILIES, FamilySpec, InvalidParameters, build, defining_property_check
from .counting import count_copies, count_induced
from .graph import GraphError, PatternId, parse_graph, resolve, to_edge_text, to_graph6
from .harness import EXIT_BUDGET, emit_report, verify_table, write_thresholds
from .oracle import Kind, evaluate, lookup, table
from .search import BudgetExceeded, max_copies
from .symmetrize import parts, run_preserving_independent_set, run_to_multipartite

PATTERN_NAMES = [p.value for p in PatternId]


def _read_graph(arg: str):
    """A graph6 / edge-list string, a file holding one, or '-' for stdin."""
    if arg == "-":
        text = sys.stdin.read()
    elif Path(arg).is_file():
        text = Path(arg).read_text()
    else:
        text = arg
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise GraphError("no graph in input")
    return parse_graph(lines[0])


def _write(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _parse_params(raw: str | None) -> tuple:
    if not raw:
        return ()
    return tuple(int(x) for x in raw.replace(" ", "").split(",") if x)


def _graph_text(g, fmt: str) -> str:
    return (to_edge_text(g) if fmt == "edges" else to_graph6(g)) + "\n"


def cmd_count(args) -> int:
    g = _read_graph(args.input)
    h = resolve(args.h)
    value = count_induced(h, g) if args.induced else count_copies(h, g)
    if args.json:
        print(json.dumps({"h": args.h, "n": g.n, "induced": args.induced, "count": value}))
    else:
        print(value)
    return 0


def cmd_construct(args) -> int:
    spec = FamilySpec(args.family, _parse_params(args.params))
    g = build(spec)
    if args.json:
        doc = {"family": spec.family, "params": list(spec.params), "n": g.n, "edges": g.num_edges,
               "graph6": to_graph6(g), "property_holds": defining_property_check(spec, g)}
        _write(json.dumps(doc) + "\n", args.out)
    else:
        _write(_graph_text(g, args.format), args.out)
    return 0


def _value_doc(h, f, n) -> dict:
    e = lookup(h, f)
    v = evaluate(h, f, n)
    return {"h": e.h.value, "f": e.f.value, "n": n, "kind": v.kind.value, "value": v.value,
            "source": v.source, "coefficient": v.coefficient, "exponent": v.exponent,
            "threshold": v.threshold, "validity": v.validity.value if v.validity else None,
            "rule": e.rule, "citation": e.citation}


def _table_text(fmt: str, n: int | None) -> str:
    cells = list(table().values())
    if fmt == "json":
        docs = [_value_doc(e.h, e.f, n) if n else
                {"h": e.h.value, "f": e.f.value, "kind": e.kind.value, "rule": e.rule, "citation": e.citation}
                for e in cells]
        return json.dumps(docs, indent=2) + "\n"
    if fmt == "csv":
        lines = ["h,f,kind,value,rule"]
        for e in cells:
            val = evaluate(e.h, e.f, n).value if n else ""
            lines.append(f"{e.h.value},{e.f.value},{e.kind.value},{'' if val is None else val},\"{e.rule}\"")
        return "\n".join(lines) + "\n"
    head = "| H \\ F | " + " | ".join(PATTERN_NAMES) + " |\n" + "|---" * (len(PATTERN_NAMES) + 1) + "|\n"
    rows = []
    for h in PatternId:
        cells_txt = []
        for f in PatternId:
            e = lookup(h, f)
            if e.kind is Kind.ZERO:
                cells_txt.append("0")
            elif n and e.kind is Kind.EXACT:
                cells_txt.append(f"{e.kind.letter} {evaluate(h, f, n).value}")
            else:
                cells_txt.append(e.kind.letter)
        rows.append(f"| {h.value} | " + " | ".join(cells_txt) + " |\n")
    return head + "".join(rows)


def cmd_formula(args) -> int:
    if args.h and args.f:
        if args.n is None:
            raise SystemExit("formula: --n is required with --h and --f")
        doc = _value_doc(args.h, args.f, args.n)
        if args.json:
            print(json.dumps(doc))
        else:
            shown = doc["value"] if doc["value"] is not None else f"~ {doc['coefficient']:.4g} n^{doc['exponent']}"
            print(f"ex({args.n}, {doc['h']}, {doc['f']}) = {shown}  [{doc['kind']}; {doc['rule']}; {doc['citation']}]")
        return 0
    _write(_table_text("json" if args.json else args.format, args.n), args.out)
    return 0


def cmd_search(args) -> int:
    res = max_copies(args.h, args.f, args.n, maximal_only=args.maximal_only, workers=args.workers)
    if args.emit_extremal:
        Path(args.emit_extremal).write_text("".join(c.graph6() + "\n" for c in res.extremal))
    doc = {"h": res.h.value, "f": res.f.value, "n": res.n, "maximum": res.maximum,
           "extremal": [c.graph6() for c in res.extremal], "graphs_visited": res.graphs_visited,
           "elapsed": round(res.elapsed, 3)}
    if args.json:
        print(json.dumps(doc))
    else:
        print(f"ex({res.n}, {res.h.value}, {res.f.value}) = {res.maximum}  "
              f"({len(res.extremal)} extremal, {res.graphs_visited} graphs, {res.elapsed:.2f}s)")
        for c in res.extremal:
            print(c.graph6())
    return 0


def cmd_symmetrize(args) -> int:
    g = _read_graph(args.input)
    if args.preserve is not None:
        trace = run_preserving_independent_set(g, args.h, _parse_params(args.preserve))
    else:
        trace = run_to_multipartite(g, args.h)
    if args.trace:
        Path(args.trace).write_text(trace.to_json() + "\n")
    print(to_graph6(trace.final))
    print(f"N({args.h}): {trace.initial_count} -> {trace.final_count} in {len(trace.steps)} steps; "
          f"parts {parts(trace.final)}", file=sys.stderr)
    return 0


def _cells(raw: list[str] | None):
    if not raw:
        return None
    out = []
    for item in raw:
        h, f = item.split(",")
        out.append((PatternId(h), PatternId(f)))
    return out


def cmd_verify(args) -> int:
    report = verify_table(args.n, _cells(args.cells), args.workers)
    text = emit_report(report, args.format, args.out, include_timings=args.timings)
    if args.out is None:
        sys.stdout.write(text)
    if args.write_thresholds:
        write_thresholds(report, args.write_thresholds)
    s = report.summary
    print(f"verify n<={report.n_max}: {s['cells']} cells, {s['allN_mismatches']} AllN mismatches, "
          f"thresholds stable: {s['thresholds_stable']}", file=sys.stderr)
    return report.exit_code


def cmd_report(args) -> int:
    _write(_table_text(args.format, args.n), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gturan", description="Generalized Turan numbers ex(n, H, F) of small graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    def pattern(sp, name, required=True):
        sp.add_argument(f"--{name}", required=required, choices=PATTERN_NAMES, help=f"pattern {name.upper()}")

    c = sub.add_parser("count", help="N(H, G) for a graph in graph6 or 'n; u-v,...' form")
    pattern(c, "h")
    c.add_argument("--input", required=True, help="graph string, file, or - for stdin")
    c.add_argument("--induced", action="store_true")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_count)

    c = sub.add_parser("construct", help="build a named family")
    c.add_argument("--family", required=True, choices=FAMILIES)
    c.add_argument("--params", default="", help="comma-separated integers")
    c.add_argument("--format", choices=["graph6", "edges"], default="graph6")
    c.add_argument("--out")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_construct)

    c = sub.add_parser("formula", help="oracle value of one cell, or the whole table")
    pattern(c, "h", required=False)
    pattern(c, "f", required=False)
    c.add_argument("--n", type=int)
    c.add_argument("--format", choices=["markdown", "csv", "json"], default="markdown")
    c.add_argument("--out")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_formula)

    c = sub.add_parser("search", help="exhaustive maximum with all extremal graphs")
    pattern(c, "h")
    pattern(c, "f")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--maximal-only", action=argparse.BooleanOptionalAction, default=True)
    c.add_argument("--emit-extremal", metavar="PATH", help="write extremal graphs as graph6 lines")
    c.add_argument("--workers", type=int, default=1)
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_search)

    c = sub.add_parser("symmetrize", help="Zykov symmetrization to a complete multipartite graph")
    c.add_argument("--input", required=True)
    pattern(c, "h")
    c.add_argument("--preserve", help="comma-separated independent vertex set to keep independent")
    c.add_argument("--trace", metavar="PATH", help="write the step trace as JSON")
    c.set_defaults(func=cmd_symmetrize)

    c = sub.add_parser("verify", help="oracle vs search over the table; exit 2 on an AllN mismatch")
    c.add_argument("--n", type=int, default=9)
    c.add_argument("--cells", nargs="*", metavar="H,F")
    c.add_argument("--workers", type=int, default=1)
    c.add_argument("--format", choices=["markdown", "csv", "json"], default="markdown")
    c.add_argument("--out")
    c.add_argument("--timings", action="store_true", help="include timings in JSON output")
    c.add_argument("--write-thresholds", metavar="PATH")
    c.set_defaults(func=cmd_verify)

    c = sub.add_parser("report", help="dump the oracle table")
    c.add_argument("--n", type=int, help="fill exact cells with their value at n")
    c.add_argument("--format", choices=["markdown", "csv", "json"], default="markdown")
    c.add_argument("--out")
    c.set_defaults(func=cmd_report)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (GraphError, InvalidParameters, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
