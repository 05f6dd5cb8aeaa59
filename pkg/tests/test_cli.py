import json

import pytest

from gturan.cli import main
from gturan.graph import from_graph6


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_count(capsys):
    code, out, _ = run(capsys, "count", "--h", "K3", "--input", "4; 0-1,0-2,0-3,1-2,1-3,2-3")
    assert code == 0 and out.strip() == "4"
    code, out, _ = run(capsys, "count", "--h", "P4", "--input", "5; 0-1,1-2,2-3,3-4,4-0", "--induced", "--json")
    assert json.loads(out)["count"] == 5


def test_construct(capsys, tmp_path):
    code, out, _ = run(capsys, "construct", "--family", "Friendship", "--params", "7")
    g = from_graph6(out.strip())
    assert g.n == 7 and g.degree(0) == 6
    path = tmp_path / "d.txt"
    run(capsys, "construct", "--family", "DGraph", "--params", "3,7", "--format", "edges", "--out", str(path))
    assert path.read_text().startswith("7; ")
    code, out, _ = run(capsys, "construct", "--family", "RSTriangleGraph", "--params", "4", "--json")
    assert json.loads(out)["property_holds"] is True


def test_formula(capsys):
    code, out, _ = run(capsys, "formula", "--h", "P3", "--f", "C4", "--n", "9", "--json")
    doc = json.loads(out)
    assert doc["value"] == 36 and doc["kind"] == "Exact"
    code, out, _ = run(capsys, "formula", "--h", "K3", "--f", "C4", "--n", "100")
    assert "n^1.5" in out
    code, out, _ = run(capsys, "formula", "--format", "csv")
    assert len(out.strip().splitlines()) == 101


def test_search(capsys, tmp_path):
    path = tmp_path / "ext.g6"
    code, out, _ = run(capsys, "search", "--h", "T1", "--f", "C4", "--n", "6", "--emit-extremal", str(path), "--json")
    doc = json.loads(out)
    assert doc["maximum"] == 6
    assert [from_graph6(x).n for x in path.read_text().split()] == [6] * len(doc["extremal"])


def test_symmetrize(capsys, tmp_path):
    trace = tmp_path / "t.json"
    code, out, err = run(capsys, "symmetrize", "--input", "5; 0-1,1-2,2-3,3-4,4-0", "--h", "K2", "--trace", str(trace))
    assert from_graph6(out.strip()).num_edges == 6
    assert json.loads(trace.read_text())["final_count"] == 6
    code, out, err = run(capsys, "symmetrize", "--input", "6; 0-1,0-2,0-3,0-4,0-5", "--h", "K2", "--preserve",
                         "1,2,3,4,5")
    assert code == 0


def test_verify_and_report(capsys, tmp_path):
    out_path = tmp_path / "r.json"
    code, _, err = run(capsys, "verify", "--n", "5", "--cells", "M2,P4", "P3,B2", "--format", "json",
                       "--out", str(out_path))
    assert code == 0 and "0 AllN mismatches" in err
    assert len(json.loads(out_path.read_text())["cells"]) == 2
    code, out, _ = run(capsys, "report", "--format", "markdown")
    assert out.count("\n") == 12


def test_bad_input(capsys):
    code, _, err = run(capsys, "count", "--h", "K3", "--input", "3; 0-5")
    assert code == 1 and "error" in err
    with pytest.raises(SystemExit):
        main(["count", "--h", "K9", "--input", "A_"])
