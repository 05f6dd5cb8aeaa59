"""Table-wide verification: oracle values against exhaustive search maxima."""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import asdict, dataclass, field
from math import comb
from pathlib import Path
from typing import Iterable

from .constructions import rs_triangle_graph
from .graph import PatternId, contains_subgraph, to_graph6
from .oracle import (Kind, OracleEntry, Validity, evaluate, load_thresholds, lookup, realize,
                     s4_k3_split_printed, s4_k3_value, table, thm_311_display)
from .search import MAX_SEARCH_N, BudgetExceeded, column_scan

EXIT_OK = 0
EXIT_MISMATCH = 2
EXIT_BUDGET = 3

THRESHOLD_VERSION = 1


@dataclass
class CellRecord:
    h: str
    f: str
    kind: str
    validity: str | None
    rule: str
    citation: str
    n_values: list[int]
    oracle: list[int | None]
    search: list[int]
    agree: list[bool | None]
    threshold: int | None = None
    stored_threshold: int | None = None
    exceptions: list[tuple[int, int]] = field(default_factory=list)
    ratios: list[float | None] = field(default_factory=list)
    counterexamples: list[dict] = field(default_factory=list)
    witness_graph6: str | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def failed(self) -> bool:
        return bool(self.counterexamples)


@dataclass
class VerificationReport:
    n_max: int
    cells: list[CellRecord]
    summary: dict
    timings: dict[str, float] = field(default_factory=dict)

    def record(self, h, f) -> CellRecord:
        key = (PatternId(h).value, PatternId(f).value)
        for c in self.cells:
            if (c.h, c.f) == key:
                return c
        raise KeyError(key)

    @property
    def exit_code(self) -> int:
        return EXIT_MISMATCH if self.summary["allN_mismatches"] else EXIT_OK

    def thresholds(self) -> dict[str, int | None]:
        return {f"{c.h},{c.f}": c.threshold for c in self.cells if c.validity == Validity.N_LARGE_ENOUGH.value}


def _select(cells: Iterable | None) -> list[OracleEntry]:
    if cells is None:
        return list(table().values())
    return [lookup(h, f) for h, f in cells]


def measured_threshold(n_values: list[int], agree: list[bool | None]) -> int | None:
    """Least n0 such that search and oracle agree for every tested n >= n0."""
    n0 = None
    for n, ok in zip(reversed(n_values), reversed(agree)):
        if not ok:
            break
        n0 = n
    return n0


def _notes(e: OracleEntry, n_values: list[int], search: list[int]) -> list[str]:
    out = []
    key = (e.h, e.f)
    if key == (PatternId.T1, PatternId.C4):
        for n, s in zip(n_values, search):
            if n % 2 == 0 and n >= 4:
                out.append(f"n={n}: search {s}, N(T1,F(n)) {comb(n, 2) - (2 * n - 3)}, "
                           f"printed even display C(n,2)-2n-3 = {thm_311_display(n)}")
    if key == (PatternId.K2, PatternId.M2):
        for n, s in zip(n_values, search):
            if n % 3 == 0:
                out.append(f"n={n}: search {s}; the 'n if 3 | n' reading gives {n}")
    if key == (PatternId.S4, PatternId.K3):
        from .oracle import multipartite_count

        for n, s in zip(n_values, search):
            k = s4_k3_split_printed(n)
            printed = max(multipartite_count(PatternId.S4, [a, n - a]) for a in (k, k + 1) if 0 <= a <= n)
            if printed != s:
                out.append(f"n={n}: search {s}, printed split k={k} gives {printed}, "
                           f"corrected split gives {s4_k3_value(n)}")
    if e.kind is Kind.BOUNDS_ONLY:
        ok = all(all((g.rows[u] & g.rows[v]).bit_count() == 1 for u, v in g.edges())
                 for g in (rs_triangle_graph(m) for m in (1, 2, 4, 8, 16)))
        out.append(f"RSTriangleGraph witness (m = 1, 2, 4, 8, 16): every edge in exactly one triangle: {ok}")
    if e.notes:
        out.append(e.notes)
    return out


def verify_table(n_max: int = 9, cells: Iterable | None = None, workers: int = 1) -> VerificationReport:
    """Compare the oracle with exhaustive search on every selected cell for n in [|V(h)|, n_max]."""
    if n_max > MAX_SEARCH_N:
        raise BudgetExceeded(f"n_max = {n_max} exceeds the search budget of {MAX_SEARCH_N}")
    entries = _select(cells)
    by_f: dict[PatternId, list[PatternId]] = {}
    for e in entries:
        by_f.setdefault(e.f, []).append(e.h)

    scans = {}
    timings = {}
    for f, hs in sorted(by_f.items(), key=lambda kv: list(PatternId).index(kv[0])):
        t0 = time.perf_counter()
        lo = min(h.order for h in hs)
        for n in range(lo, n_max + 1):
            scans[(f, n)] = column_scan(f, n, hs, workers)
        timings[f.value] = round(time.perf_counter() - t0, 3)

    stored = load_thresholds()
    records = []
    mismatches = 0
    for e in entries:
        n_values = list(range(e.h.order, n_max + 1))
        oracle, search, agree, ratios, cex, exc = [], [], [], [], [], []
        for n in n_values:
            sc = scans[(e.f, n)]
            s = sc.maxima[e.h]
            v = evaluate(e.h, e.f, n)
            search.append(s)
            oracle.append(v.value)
            if v.source == "exception":
                exc.append((n, v.value))
            if v.kind in (Kind.ASYMPTOTIC, Kind.BOUNDS_ONLY):
                agree.append(None)
                ratios.append(round(s / v.leading_term(n), 6))
                continue
            ok = s == v.value
            agree.append(ok)
            if not ok and e.validity is Validity.ALL_N:
                item = {"n": n, "oracle": v.value, "search": s}
                if s > v.value:
                    item["graph6"] = to_graph6(sc.witnesses[e.h])
                elif e.construction is not None:
                    item["graph6"] = to_graph6(realize(e.construction(n), n))
                cex.append(item)
        rec = CellRecord(
            h=e.h.value, f=e.f.value, kind=e.kind.value,
            validity=e.validity.value if e.kind is Kind.EXACT else None,
            rule=e.rule, citation=e.citation, n_values=n_values, oracle=oracle, search=search,
            agree=agree, exceptions=exc, ratios=ratios, counterexamples=cex,
        )
        if e.kind is not Kind.ZERO and n_values:
            rec.witness_graph6 = to_graph6(scans[(e.f, n_max)].witnesses[e.h])
        if e.kind is Kind.EXACT and e.validity is Validity.N_LARGE_ENOUGH:
            rec.threshold = measured_threshold(n_values, agree)
            rec.stored_threshold = stored.get(cell_id(e))
        rec.notes = _notes(e, n_values, search)
        mismatches += bool(cex)
        records.append(rec)

    nle = [r for r in records if r.validity == Validity.N_LARGE_ENOUGH.value]
    zero_ok = all(
        (r.kind == Kind.ZERO.value) == contains_subgraph(PatternId(r.h).graph, PatternId(r.f).graph)
        for r in records)
    summary = {
        "cells": len(records),
        "zero_cells": sum(r.kind == Kind.ZERO.value for r in records),
        "nonzero_cells": sum(r.kind != Kind.ZERO.value for r in records),
        "allN_cells": sum(r.validity == Validity.ALL_N.value for r in records),
        "allN_mismatches": mismatches,
        "zero_partition_matches_containment": zero_ok,
        "thresholds_stable": all(r.stored_threshold is None or r.stored_threshold == r.threshold for r in nle),
        "threshold_file_version": THRESHOLD_VERSION,
    }
    return VerificationReport(n_max, records, summary, timings)


def cell_id(e: OracleEntry) -> str:
    return f"{e.h.value},{e.f.value}"


def threshold_document(report: VerificationReport) -> dict:
    return {"version": THRESHOLD_VERSION, "n_max": report.n_max,
            "thresholds": dict(sorted(report.thresholds().items()))}


def write_thresholds(report: VerificationReport, path: str | Path) -> None:
    Path(path).write_text(json.dumps(threshold_document(report), indent=2, sort_keys=True) + "\n")


# ---------------------------------------------------------------------------
# emission


CSV_FIELDS = ["h", "f", "kind", "validity", "n", "oracle", "search", "agree", "ratio", "exception"]


def _csv(report: VerificationReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_FIELDS)
    for r in report.cells:
        if r.kind == Kind.ZERO.value:
            continue
        exc = dict(r.exceptions)
        for i, n in enumerate(r.n_values):
            ratio = r.ratios[i] if r.ratios else ""
            agree = "" if r.agree[i] is None else str(r.agree[i]).lower()
            w.writerow([r.h, r.f, r.kind, r.validity or "", n,
                        "" if r.oracle[i] is None else r.oracle[i], r.search[i], agree, ratio,
                        exc.get(n, "")])
    return buf.getvalue()


def _json(report: VerificationReport, include_timings: bool) -> str:
    doc = {"n_max": report.n_max, "summary": report.summary,
           "cells": [asdict(c) for c in report.cells]}
    if include_timings:
        doc["timings"] = report.timings
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _annotation(r: CellRecord) -> str:
    if r.kind == Kind.ZERO.value:
        return "0"
    if r.kind == Kind.EXACT.value:
        if r.failed:
            return "E FAIL"
        if r.validity == Validity.N_LARGE_ENOUGH.value:
            return f"E n0={r.threshold}" if r.threshold is not None else "E n0>n_max"
        return "E ok" + ("*" if r.exceptions else "")
    last = next((x for x in reversed(r.ratios) if x is not None), None)
    return f"{r.kind[0]} r={last:.3f}" if last is not None else r.kind[0]


def _markdown(report: VerificationReport) -> str:
    grid = {(r.h, r.f): _annotation(r) for r in report.cells}
    names = [p.value for p in PatternId]
    lines = [f"# ex(n, H, F) verified for n <= {report.n_max}", "",
             "Rows H, columns F. E ok: exact for every tested n (* known exception used); "
             "E n0: NLargeEnough, measured threshold; A/B r: search maximum over leading term at n_max.", "",
             "| H \\ F | " + " | ".join(names) + " |",
             "|---" * (len(names) + 1) + "|"]
    for h in names:
        lines.append(f"| {h} | " + " | ".join(grid.get((h, f), "") for f in names) + " |")
    lines += ["", "## Summary", ""]
    lines += [f"- {k}: {v}" for k, v in report.summary.items()]
    detail = [r for r in report.cells if r.kind != Kind.ZERO.value]
    if detail:
        lines += ["", "## Cells", ""]
    for r in detail:
        lines.append(f"### ({r.h}, {r.f}) {r.kind}" + (f", {r.validity}" if r.validity else ""))
        lines.append("")
        lines.append(f"- rule: {r.rule}")
        lines.append(f"- source: {r.citation}")
        lines.append(f"- n: {r.n_values}")
        lines.append(f"- search: {r.search}")
        if r.kind == Kind.EXACT.value:
            lines.append(f"- oracle: {r.oracle}")
        else:
            lines.append(f"- ratio to leading term: {r.ratios}")
        if r.exceptions:
            lines.append(f"- known exceptions used: {r.exceptions}")
        if r.threshold is not None or r.validity == Validity.N_LARGE_ENOUGH.value:
            lines.append(f"- measured threshold: {r.threshold}")
        for c in r.counterexamples:
            lines.append(f"- MISMATCH: {c}")
        for note in r.notes:
            lines.append(f"- note: {note}")
        lines.append("")
    return "\n".join(lines).rstrip("\n") + "\n"


def render(report: VerificationReport, fmt: str = "markdown", include_timings: bool = False) -> str:
    if fmt == "csv":
        return _csv(report)
    if fmt == "json":
        return _json(report, include_timings)
    if fmt in ("markdown", "md"):
        return _markdown(report)
    raise ValueError(f"unknown report format {fmt!r}")


def emit_report(report: VerificationReport, fmt: str = "markdown", path: str | Path | None = None,
                include_timings: bool = False) -> str:
    """Render the report; write it to ``path`` when given.  Output bytes depend only on the report."""
    text = render(report, fmt, include_timings)
    if path is not None:
        Path(path).write_text(text)
    return text
