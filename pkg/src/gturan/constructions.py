"""Named graph families used as extremal or lower-bound constructions."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable

from .graph import Graph, GraphError, PatternId, contains_subgraph, from_edge_list


class InvalidParameters(GraphError):
    pass


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple = field(default_factory=tuple)

    def build(self) -> Graph:
        return build(self)

    def __str__(self):
        return f"{self.family}({', '.join(map(str, self.params))})"


def _clique_edges(vertices) -> list[tuple[int, int]]:
    return list(combinations(vertices, 2))


def multipartite(parts: list[int] | tuple[int, ...]) -> Graph:
    if any(p < 0 for p in parts):
        raise InvalidParameters(f"negative part size in {parts}")
    labels = []
    for i, size in enumerate(parts):
        labels += [i] * size
    n = len(labels)
    edges = [(u, v) for u, v in combinations(range(n), 2) if labels[u] != labels[v]]
    return from_edge_list(n, edges)


def turan_parts(n: int, r: int) -> list[int]:
    """Balanced part sizes, larger parts first."""
    if r < 1:
        raise InvalidParameters("Turan graph needs r >= 1")
    q, extra = divmod(n, r)
    return [q + 1] * extra + [q] * (r - extra)


def turan_graph(n: int, r: int) -> Graph:
    return multipartite(turan_parts(n, r))


def complete_bipartite(a: int, b: int) -> Graph:
    return multipartite([a, b])


def d_graph(k: int, n: int) -> Graph:
    """floor(n/k) disjoint copies of K_k plus a clique on the leftover vertices."""
    if k < 1 or n < 0:
        raise InvalidParameters("D(k, n) needs k >= 1, n >= 0")
    edges = []
    start = 0
    while start < n:
        edges += _clique_edges(range(start, min(start + k, n)))
        start += k
    return from_edge_list(n, edges)


def clique_plus_independent(s: int, t: int) -> Graph:
    """K_{s,t} with the part of size s turned into a clique; clique is 0..s-1."""
    if s < 0 or t < 0:
        raise InvalidParameters("need s, t >= 0")
    edges = _clique_edges(range(s)) + [(u, s + v) for u in range(s) for v in range(t)]
    return from_edge_list(s + t, edges)


def g_graph(n: int, k: int, l: int) -> Graph:
    """Parts A (independent, n-k+l), B (l universal vertices), C (clique, k-2l), no A-C edges.

    Labels: B first, then C, then A.
    """
    if l < 0 or k - 2 * l < 0 or n < k - l:
        raise InvalidParameters(f"G_(n,k,l) needs l >= 0, k-2l >= 0, n >= k-l; got {(n, k, l)}")
    b = list(range(l))
    c = list(range(l, k - l))
    edges = _clique_edges(b) + _clique_edges(c)
    edges += [(u, v) for u in b for v in range(l, n)]
    return from_edge_list(n, edges)


def friendship(n: int) -> Graph:
    """Vertex 0 joined to all others, plus a maximum matching 1-2, 3-4, ... on the rest."""
    if n < 1:
        raise InvalidParameters("friendship graph needs n >= 1")
    edges = [(0, v) for v in range(1, n)]
    edges += [(v, v + 1) for v in range(1, n - 1, 2)]
    return from_edge_list(n, edges)


def star(n: int) -> Graph:
    if n < 1:
        raise InvalidParameters("star needs n >= 1")
    return from_edge_list(n, [(0, v) for v in range(1, n)])


def path(n: int) -> Graph:
    if n < 1:
        raise InvalidParameters("path needs n >= 1")
    return from_edge_list(n, [(v, v + 1) for v in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidParameters("cycle needs n >= 3")
    return from_edge_list(n, [(v, (v + 1) % n) for v in range(n)])


def matching(l: int) -> Graph:
    if l < 0:
        raise InvalidParameters("matching needs l >= 0")
    return from_edge_list(2 * l, [(2 * i, 2 * i + 1) for i in range(l)])


def t_graph(l: int) -> Graph:
    """Triangle 0,1,2 with l pendant vertices on vertex 0."""
    if l < 0:
        raise InvalidParameters("T_l needs l >= 0")
    return from_edge_list(l + 3, [(0, 1), (1, 2), (0, 2)] + [(0, 3 + i) for i in range(l)])


def book(k: int) -> Graph:
    """k triangles on the common edge 0-1."""
    if k < 0:
        raise InvalidParameters("book needs k >= 0")
    return from_edge_list(k + 2, [(0, 1)] + [(x, 2 + i) for i in range(k) for x in (0, 1)])


def two_regular_triangle_free(n: int) -> Graph:
    if n < 4:
        raise InvalidParameters("a triangle-free 2-regular graph needs n >= 4")
    return cycle(n)


def three_ap_free_set(m: int) -> list[int]:
    """Greedy subset of 1..m with no x + z = 2y for distinct members."""
    chosen: list[int] = []
    members: set[int] = set()
    for c in range(1, m + 1):
        # c is the largest so far, so it can only close a progression as its top
        if any(2 * b - c in members for b in chosen):
            continue
        chosen.append(c)
        members.add(c)
    return chosen


def rs_triangle_graph(m: int) -> Graph:
    """Tripartite X=[m], Y=[2m], Z=[3m] with triangles (x, x+s, x+2s) for s in a 3-AP-free set.

    X occupies labels 0..m-1, Y m..3m-1, Z 3m..6m-1.
    """
    if m < 1:
        raise InvalidParameters("RS triangle graph needs m >= 1")
    s_set = three_ap_free_set(m)
    edges = []
    for x in range(1, m + 1):
        for s in s_set:
            a, b, c = x - 1, m + (x + s) - 1, 3 * m + (x + 2 * s) - 1
            edges += [(a, b), (b, c), (a, c)]
    return from_edge_list(6 * m, edges)


_BUILDERS: dict[str, Callable[..., Graph]] = {
    "TuranGraph": turan_graph,
    "CompleteMultipartite": lambda *parts: multipartite(list(parts)),
    "CompleteBipartite": complete_bipartite,
    "DGraph": d_graph,
    "CliquePlusIndependent": clique_plus_independent,
    "GGraph": g_graph,
    "Friendship": friendship,
    "Star": star,
    "Path": path,
    "Cycle": cycle,
    "Matching": matching,
    "TGraph": t_graph,
    "Book": book,
    "TwoRegularTriangleFree": two_regular_triangle_free,
    "RSTriangleGraph": rs_triangle_graph,
}

FAMILIES = tuple(_BUILDERS)


def build(spec: FamilySpec) -> Graph:
    try:
        builder = _BUILDERS[spec.family]
    except KeyError:
        raise InvalidParameters(f"unknown family {spec.family!r}; choose from {', '.join(FAMILIES)}") from None
    try:
        return builder(*spec.params)
    except TypeError as exc:
        raise InvalidParameters(f"{spec.family}: {exc}") from None


def _every_edge_in_one_triangle(g: Graph) -> bool:
    return all((g.rows[u] & g.rows[v]).bit_count() == 1 for u, v in g.edges())


def defining_property_check(spec: FamilySpec, g: Graph | None = None) -> bool:
    """Characteristic freeness/regularity property of the family.

    Families without a listed property check only that the rebuilt graph
    matches ``g``.
    """
    if g is None:
        g = build(spec)
    fam, p = spec.family, spec.params
    if fam == "Friendship":
        return not contains_subgraph(g, PatternId.C4)
    if fam == "DGraph":
        k = p[0]
        return not contains_subgraph(g, path(k + 1)) and not contains_subgraph(g, star(k + 1))
    if fam == "TwoRegularTriangleFree":
        return all(d == 2 for d in g.degrees()) and not contains_subgraph(g, PatternId.K3)
    if fam == "RSTriangleGraph":
        return _every_edge_in_one_triangle(g)
    if fam == "TuranGraph":
        return not contains_subgraph(g, complete_graph(p[1] + 1)) if g.n > p[1] else True
    if fam == "Star":
        return not contains_subgraph(g, PatternId.P4) if g.n >= 4 else True
    return g == build(spec)


def complete_graph(n: int) -> Graph:
    return Graph.complete(n)
