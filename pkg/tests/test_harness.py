import csv
import io
import json

import pytest

from gturan.cli import main
from gturan.graph import PatternId, from_graph6
from gturan.harness import (EXIT_BUDGET, EXIT_MISMATCH, EXIT_OK, emit_report, measured_threshold, threshold_document,
                            verify_table)
from gturan.oracle import OracleEntry, Kind, table
from gturan.search import BudgetExceeded

P = PatternId


@pytest.fixture(scope="module")
def small_report():
    return verify_table(6)


def test_small_run_passes(small_report):
    s = small_report.summary
    assert s["cells"] == 100 and s["zero_cells"] == 46 and s["nonzero_cells"] == 54
    assert s["allN_mismatches"] == 0 and s["zero_partition_matches_containment"]
    assert small_report.exit_code == EXIT_OK


def test_examples(small_report):
    r = small_report.record(P.M2, P.P4)
    i = r.n_values.index(4)
    assert r.oracle[i] == r.search[i] == 1 and (4, 1) in r.exceptions
    r = small_report.record(P.P3, P.B2)
    i = r.n_values.index(5)
    assert (r.search[i], r.oracle[i], r.agree[i]) == (10, 9, False)
    assert not r.counterexamples


def test_zero_cells_are_zero(small_report):
    for r in small_report.cells:
        if r.kind == Kind.ZERO.value:
            assert all(s == 0 for s in r.search)


def test_emission_is_deterministic(small_report, tmp_path):
    for fmt in ("csv", "json", "markdown"):
        a = emit_report(small_report, fmt, tmp_path / f"a.{fmt}")
        b = emit_report(verify_table(6), fmt)
        assert a == b == (tmp_path / f"a.{fmt}").read_text()


def test_markdown_grid_has_46_zeros():
    report = verify_table(4, cells=[])
    md = emit_report(report, "markdown")
    assert md.count("|") > 0 and "K4" in md
    full = emit_report(verify_table(5), "markdown")
    grid = [ln for ln in full.splitlines() if ln.startswith("| ") and not ln.startswith("| H")]
    assert len(grid) == 10
    assert sum(cell.strip() == "0" for ln in grid for cell in ln.split("|")[2:-1]) == 46


def test_single_cell_json():
    doc = json.loads(emit_report(verify_table(5, cells=[(P.M2, P.S4)]), "json"))
    assert len(doc["cells"]) == 1
    rec = doc["cells"][0]
    for key in ("h", "f", "n_values", "oracle", "search", "agree", "threshold", "exceptions", "notes"):
        assert key in rec
    assert rec["oracle"] == rec["search"]


def test_csv_rows(small_report):
    rows = list(csv.DictReader(io.StringIO(emit_report(small_report, "csv"))))
    expected = sum(len(r.n_values) for r in small_report.cells if r.kind != Kind.ZERO.value)
    assert len(rows) == expected
    assert {(r["h"], r["f"]) for r in rows}.__len__() == 54


def test_timings_kept_out_of_default_output(small_report):
    assert "timings" not in json.loads(emit_report(small_report, "json"))
    assert "timings" in json.loads(emit_report(small_report, "json", include_timings=True))


def test_measured_threshold():
    assert measured_threshold([3, 4, 5, 6], [False, True, False, True]) == 6
    assert measured_threshold([3, 4, 5], [True, True, True]) == 3
    assert measured_threshold([3, 4], [True, False]) is None


def test_threshold_document(small_report):
    doc = threshold_document(small_report)
    assert doc["version"] >= 1 and doc["n_max"] == 6
    assert doc["thresholds"]["P3,B2"] == 6


def test_mismatch_reports_counterexample(monkeypatch):
    bad = OracleEntry(P.K2, P.K3, Kind.EXACT, rule="wrong", formula=lambda n: n)
    patched = dict(table())
    patched[(P.K2, P.K3)] = bad
    monkeypatch.setattr("gturan.oracle.table", lambda: patched)
    report = verify_table(5, cells=[(P.K2, P.K3)])
    assert report.exit_code == EXIT_MISMATCH
    cex = report.record(P.K2, P.K3).counterexamples
    assert cex
    beaten = [c for c in cex if c["search"] > c["oracle"]]
    assert beaten and all(from_graph6(c["graph6"]).num_edges == c["search"] for c in beaten)


def test_budget():
    with pytest.raises(BudgetExceeded):
        verify_table(11)
    assert main(["verify", "--n", "11"]) == EXIT_BUDGET


def test_t1_c4_note_mentions_display():
    r = verify_table(6, cells=[(P.T1, P.C4)]).record(P.T1, P.C4)
    assert any("C(n,2)-2n-3" in note for note in r.notes)
