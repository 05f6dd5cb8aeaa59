from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs, permuted
from gturan.canon import (automorphism_order, automorphisms, canonical_form, canonical_form_exhaustive,
                          canonical_graph, canonical_labeling, code_of, is_isomorphic, same_orbit)
from gturan.graph import Graph, PatternId

P = PatternId


def all_labeled(n):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        rows = [0] * n
        for i, (u, v) in enumerate(pairs):
            if mask >> i & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        yield Graph.trusted(rows)


def test_relabeled_c4_has_same_form():
    c4 = P.C4.graph
    assert canonical_form(c4) == canonical_form(c4.relabel([2, 0, 3, 1]))
    assert canonical_form(c4) != canonical_form(P.P4.graph)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_form_agrees_with_exhaustive_on_every_small_graph(n):
    """Refinement-based and permutation-based keys induce the same partition."""
    pairs = {(canonical_form(g), canonical_form_exhaustive(g)) for g in all_labeled(n)}
    fast = {a for a, _ in pairs}
    slow = {b for _, b in pairs}
    assert len(pairs) == len(fast) == len(slow)


@pytest.mark.parametrize("n, classes", [(4, 11), (5, 34), (6, 156)])
def test_six_vertex_partition_against_exhaustive(n, classes):
    """Each fast class is one isomorphism class, and class representatives are pairwise non-isomorphic."""
    reps = {}
    for g in all_labeled(n):
        code, order = canonical_labeling(g)
        assert code_of(g.rows, order) == code  # the key is the code of a relabeling of g
        reps.setdefault(code, g)
    assert len(reps) == classes
    assert len({canonical_form_exhaustive(g) for g in reps.values()}) == classes


@given(graphs(max_n=12), st.data())
def test_form_invariant_under_relabeling(g, data):
    h = data.draw(permuted(g))
    assert canonical_form(g) == canonical_form(h)
    assert canonical_graph(g) == canonical_graph(h)
    assert is_isomorphic(g, h)


@given(graphs(max_n=7), graphs(max_n=7))
def test_form_equality_matches_exhaustive(g, h):
    if g.n != h.n:
        assert not is_isomorphic(g, h)
        return
    assert (canonical_form(g) == canonical_form(h)) == (canonical_form_exhaustive(g) == canonical_form_exhaustive(h))


@given(graphs(max_n=9))
def test_canonical_graph_round_trips_through_graph6(g):
    form = canonical_form(g)
    assert canonical_form(form.graph()) == form
    assert canonical_form(Graph.trusted(canonical_graph(g).rows)) == form
    assert form.graph6()


@pytest.mark.parametrize("p, order", [(P.K4, 24), (P.P4, 2), (P.T1, 2), (P.C4, 8), (P.B2, 4), (P.M2, 8),
                                      (P.S4, 6), (P.K3, 6), (P.P3, 2), (P.K2, 2)])
def test_automorphism_orders(p, order):
    assert automorphism_order(p.graph) == order
    assert len(automorphisms(p.graph)) == order


def test_same_orbit():
    t1 = P.T1.graph
    assert same_orbit(t1, 1, 2)
    assert not same_orbit(t1, 0, 3)
    assert same_orbit(P.C4.graph, 0, 2)
