from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gturan.canon import is_isomorphic
from gturan.constructions import (FAMILIES, FamilySpec, InvalidParameters, book, build, defining_property_check,
                                  multipartite, rs_triangle_graph, star, three_ap_free_set, turan_graph,
                                  turan_parts)
from gturan.counting import count_copies
from gturan.graph import Graph, PatternId, contains_subgraph, from_edge_list, is_complete_multipartite

P = PatternId


def test_turan_9_3_is_k333():
    g = build(FamilySpec("TuranGraph", (9, 3)))
    assert is_isomorphic(g, multipartite([3, 3, 3]))
    assert turan_parts(10, 3) == [4, 3, 3]


def test_d_graph_7():
    g = build(FamilySpec("DGraph", (3, 7)))
    expected = from_edge_list(7, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert g == expected


def test_g_graph_is_star():
    g = build(FamilySpec("GGraph", (8, 3, 1)))
    assert is_isomorphic(g, star(8))


def test_friendship_6():
    g = build(FamilySpec("Friendship", (6,)))
    assert g.degree(0) == 5
    assert sorted(g.degrees()) == [1, 2, 2, 2, 2, 5]
    assert g.num_edges == 5 + 2


@pytest.mark.parametrize("spec", [FamilySpec("Friendship", (9,)), FamilySpec("RSTriangleGraph", (8,)),
                                  FamilySpec("TwoRegularTriangleFree", (5,)), FamilySpec("DGraph", (3, 10)),
                                  FamilySpec("TuranGraph", (7, 3)), FamilySpec("Star", (6,))])
def test_defining_property_examples(spec):
    assert defining_property_check(spec)


@pytest.mark.parametrize("spec", [
    FamilySpec("TuranGraph", (5, 0)), FamilySpec("DGraph", (0, 4)), FamilySpec("GGraph", (3, 3, 2)),
    FamilySpec("Friendship", (0,)), FamilySpec("TwoRegularTriangleFree", (3,)), FamilySpec("RSTriangleGraph", (0,)),
    FamilySpec("Nope", ()), FamilySpec("Star", (1, 2)),
])
def test_invalid_parameters(spec):
    with pytest.raises(InvalidParameters):
        build(spec)


@given(st.integers(1, 40), st.integers(1, 6))
def test_turan_graph_edge_count(n, r):
    g = turan_graph(n, r)
    parts = turan_parts(n, r)
    assert g.num_edges == sum(a * b for i, a in enumerate(parts) for b in parts[i + 1:])
    assert is_complete_multipartite(g)
    if r == 2:
        assert g.num_edges == n * n // 4


@given(st.integers(1, 30))
def test_rs_triangle_graph_counts(m):
    g = rs_triangle_graph(m)
    s = len(three_ap_free_set(m))
    assert g.num_edges == 3 * m * s
    assert count_copies(P.K3, g) == m * s
    assert defining_property_check(FamilySpec("RSTriangleGraph", (m,)), g)


@given(st.integers(1, 80))
def test_three_ap_free(m):
    s = three_ap_free_set(m)
    members = set(s)
    assert all(not (a + c == 2 * b) for a in s for b in s for c in s if a < b < c)
    assert members <= set(range(1, m + 1))


@given(st.integers(1, 6), st.integers(1, 20))
def test_d_graph_freeness(k, n):
    assert defining_property_check(FamilySpec("DGraph", (k, n)))


def test_book_two_is_b2():
    assert is_isomorphic(book(2), P.B2.graph)


@pytest.mark.parametrize("family", FAMILIES)
def test_build_is_deterministic(family):
    params = {"TuranGraph": (7, 3), "CompleteMultipartite": (1, 2, 3), "CompleteBipartite": (2, 3),
              "DGraph": (3, 7), "CliquePlusIndependent": (2, 4), "GGraph": (8, 3, 1), "Friendship": (7,),
              "Star": (5,), "Path": (5,), "Cycle": (5,), "Matching": (3,), "TGraph": (2,), "Book": (3,),
              "TwoRegularTriangleFree": (6,), "RSTriangleGraph": (5,)}[family]
    spec = FamilySpec(family, params)
    assert build(spec) == build(spec)
    assert defining_property_check(spec)


def test_clique_plus_independent_and_t_graph():
    g = build(FamilySpec("CliquePlusIndependent", (2, 3)))
    assert g.num_edges == 1 + 6
    t = build(FamilySpec("TGraph", (1,)))
    assert is_isomorphic(t, P.T1.graph)
    assert not contains_subgraph(build(FamilySpec("Matching", (4,))), P.P3)
    assert build(FamilySpec("Path", (1,))) == Graph.empty(1)
    assert count_copies(P.S4, star(6)) == comb(5, 3)
