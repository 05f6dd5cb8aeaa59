from itertools import combinations

import pytest

from gturan.canon import canonical_form
from gturan.constructions import matching
from gturan.counting import count_copies
from gturan.graph import Graph, PatternId, contains_subgraph
from gturan.oracle import Kind, nonzero_cells
from gturan.search import (BudgetExceeded, brute_force_labeled, column_scan, enumerate_f_free, is_maximal_free,
                           max_copies, max_copies_by_classes)

P = PatternId
NONZERO = [(e.h, e.f) for e in nonzero_cells()]


def labeled_classes(n, f):
    pairs = list(combinations(range(n), 2))
    forms = set()
    for mask in range(1 << len(pairs)):
        rows = [0] * n
        for i, (u, v) in enumerate(pairs):
            if mask >> i & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        g = Graph.trusted(rows)
        if f is None or not contains_subgraph(g, f):
            forms.add(canonical_form(g))
    return forms


@pytest.mark.parametrize("n, f, count", [(4, P.K3, 7), (3, P.K4, 4), (4, P.C4, 8)])
def test_enumerate_examples(n, f, count):
    # C4, B2 and K4 are the 4-vertex classes containing a 4-cycle, so 11 - 3 remain
    assert len(list(enumerate_f_free(n, f))) == count == len(labeled_classes(n, f))


@pytest.mark.parametrize("n, count", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156), (7, 1044)])
def test_class_counts_of_all_graphs(n, count):
    assert len(list(enumerate_f_free(n, None))) == count


@pytest.mark.parametrize("f", list(PatternId))
@pytest.mark.parametrize("n", [4, 5, 6])
def test_enumeration_matches_labeled_bucketing(n, f):
    stream = [canonical_form(g) for g in enumerate_f_free(n, f)]
    assert len(stream) == len(set(stream))
    assert set(stream) == labeled_classes(n, f)


@pytest.mark.parametrize("f", [P.K3, P.C4, P.B2])
def test_maximal_only_stream_is_edge_maximal(f):
    full = list(enumerate_f_free(6, f))
    maximal = list(enumerate_f_free(6, f, maximal_only=True))
    assert 0 < len(maximal) < len(full)
    for g in maximal:
        for u, v in g.non_edges():
            assert contains_subgraph(g.add_edge(u, v), f)


def test_max_copies_examples():
    r = max_copies(P.M2, P.P3, 6)
    assert r.maximum == 3 and r.extremal == [canonical_form(matching(3))]
    assert max_copies(P.K3, P.M2, 7).maximum == 1
    r = max_copies(P.T1, P.C4, 4)
    assert r.maximum == 1 and r.extremal == [canonical_form(P.T1.graph)]


def test_extremal_graphs_are_verified_and_complete():
    r = max_copies(P.P3, P.B2, 5, maximal_only=False)
    assert r.maximum == 10
    every = {canonical_form(g) for g in enumerate_f_free(5, P.B2) if count_copies(P.P3, g) == 10}
    assert set(r.extremal) == every


@pytest.mark.parametrize("h, f, n, value", [(P.P3, P.C4, 5, 10), (P.K2, P.K3, 5, 6), (P.S4, P.M2, 5, 4)])
def test_brute_force_examples(h, f, n, value):
    assert brute_force_labeled(h, f, n) == value


@pytest.mark.parametrize("h, f", NONZERO, ids=[f"{h.value}-{f.value}" for h, f in NONZERO])
def test_engines_agree_up_to_six(h, f):
    for n in range(1, 7):
        assert max_copies(h, f, n).maximum == brute_force_labeled(h, f, n), n


@pytest.mark.parametrize("h, f", NONZERO, ids=[f"{h.value}-{f.value}" for h, f in NONZERO])
def test_maximal_only_is_lossless_up_to_seven(h, f):
    for n in range(1, 8):
        assert max_copies(h, f, n, maximal_only=True).maximum == max_copies(h, f, n, maximal_only=False).maximum


def test_column_scan_matches_per_cell_search():
    scan = column_scan(P.C4, 7)
    for h in PatternId:
        assert scan.maxima[h] == max_copies(h, P.C4, 7).maximum
        assert not contains_subgraph(scan.witnesses[h], P.C4)


def test_workers_do_not_change_results():
    a = max_copies(P.P4, P.C4, 7, workers=1)
    b = max_copies(P.P4, P.C4, 7, workers=2)
    assert (a.maximum, a.extremal) == (b.maximum, b.extremal)
    assert column_scan(P.B2, 7, workers=2).maxima == column_scan(P.B2, 7).maxima


def test_class_stream_and_fast_maximum_agree():
    for h, f in [(P.C4, P.K4), (P.T1, P.C4), (P.M2, P.S4)]:
        assert max_copies_by_classes(h, f, 7) == max_copies(h, f, 7).maximum


def test_budgets():
    with pytest.raises(BudgetExceeded):
        max_copies(P.K2, P.K3, 11)
    with pytest.raises(BudgetExceeded):
        brute_force_labeled(P.K2, P.K3, 7)
    with pytest.raises(BudgetExceeded):
        next(enumerate_f_free(11, P.K3))


def test_is_maximal_free():
    k33 = Graph.trusted(tuple(0b111000 if v < 3 else 0b000111 for v in range(6)))
    assert is_maximal_free(k33.rows, P.K3.graph)
    assert not is_maximal_free(Graph.empty(3).rows, P.K3.graph)


def test_zero_cells_search_to_zero():
    for h in (P.K4, P.B2, P.T1):
        assert max_copies(h, P.K3, 6).maximum == 0


def test_nonzero_kinds_are_consistent_with_search():
    # every nonzero cell has some F-free graph holding a copy of H
    for e in nonzero_cells():
        assert e.kind is not Kind.ZERO
        assert max_copies(e.h, e.f, 6).maximum > 0
