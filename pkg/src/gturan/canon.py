"""Canonical forms for small graphs.

The search is the usual individualise-and-refine tree: refine an ordered
partition to an equitable one, branch on the first smallest non-singleton
cell, and keep the smallest adjacency code over all leaves.  Two prunings keep
the tree small for n <= 10: vertices of a cell that are twins of each other
(same neighbourhood apart from one another) lead to identical subtrees, so only
one per twin class is expanded; and automorphisms found at the leaves prune
root-level branches lying in an already explored orbit.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Sequence

from .graph import Graph, SizeExceeded


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Isomorphism-class key; ``code`` packs the upper triangle in graph6 bit order."""

    n: int
    code: int

    def graph(self) -> Graph:
        rows = [0] * self.n
        k = self.n * (self.n - 1) // 2
        for j in range(1, self.n):
            for i in range(j):
                k -= 1
                if self.code >> k & 1:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
        return Graph(self.n, tuple(rows))

    def graph6(self) -> str:
        from .graph import to_graph6

        return to_graph6(self.graph())


def code_of(rows: Sequence[int], order: Sequence[int]) -> int:
    """Upper-triangle bit string of the graph relabeled so ``order[i]`` becomes ``i``.

    Bits run over pairs (0,1), (0,2), (1,2), (0,3), ... with the first pair
    most significant, so integer order equals lexicographic order of strings.
    """
    code = 0
    for j in range(1, len(order)):
        rj = rows[order[j]]
        for i in range(j):
            code = code << 1 | (rj >> order[i] & 1)
    return code


def _refine(rows: Sequence[int], cells: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    queue = [_mask(c) for c in cells]
    while queue:
        splitter = queue.pop()
        out: list[tuple[int, ...]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[int, list[int]] = {}
            for v in cell:
                groups.setdefault((rows[v] & splitter).bit_count(), []).append(v)
            if len(groups) == 1:
                out.append(cell)
                continue
            changed = True
            for k in sorted(groups):
                part = tuple(groups[k])
                out.append(part)
                queue.append(_mask(part))
        if changed:
            cells = out
    return cells


def _mask(cell: Sequence[int]) -> int:
    m = 0
    for v in cell:
        m |= 1 << v
    return m


def _twin_reps(rows: Sequence[int], cell: Sequence[int]) -> list[int]:
    reps: list[int] = []
    for v in cell:
        for u in reps:
            if rows[u] & ~(1 << v) == rows[v] & ~(1 << u):
                break
        else:
            reps.append(v)
    return reps


class _Orbits:
    """Union-find over vertices, fed by automorphisms found at the leaves."""

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, v: int) -> int:
        while self.parent[v] != v:
            self.parent[v] = self.parent[self.parent[v]]
            v = self.parent[v]
        return v

    def join(self, perm_a: Sequence[int], perm_b: Sequence[int]) -> None:
        for a, b in zip(perm_a, perm_b):
            ra, rb = self.find(a), self.find(b)
            if ra != rb:
                self.parent[max(ra, rb)] = min(ra, rb)


def canonical_labeling(g: Graph, coloring: Sequence[Sequence[int]] | None = None) -> tuple[int, list[int]]:
    """Return ``(code, order)``: ``order[i]`` is the vertex placed at position ``i``.

    ``coloring`` is an optional ordered partition of the vertices; only
    colour-preserving relabelings are considered.
    """
    return labeling(g.rows, g.n, coloring)


def labeling(rows: Sequence[int], n: int, coloring: Sequence[Sequence[int]] | None = None) -> tuple[int, list[int]]:
    """:func:`canonical_labeling` on raw adjacency rows."""
    if n == 0:
        return 0, []
    if coloring is None:
        start = [tuple(range(n))]
    else:
        start = [tuple(c) for c in coloring if len(c)]
    best_code = -1
    best_order: list[int] = []
    orbits = _Orbits(n)

    def visit(cells: list[tuple[int, ...]]) -> None:
        nonlocal best_code, best_order
        cells = _refine(rows, cells)
        if len(cells) == n:
            order = [c[0] for c in cells]
            code = code_of(rows, order)
            if best_code < 0 or code < best_code:
                best_code, best_order = code, order
            elif code == best_code:
                orbits.join(best_order, order)
            return
        idx = min((i for i, c in enumerate(cells) if len(c) > 1), key=lambda i: (len(cells[i]), i))
        target = cells[idx]
        for v in _twin_reps(rows, target):
            rest = tuple(u for u in target if u != v)
            visit(cells[:idx] + [(v,), rest] + cells[idx + 1:])

    # root-level orbit pruning is only sound before any individualisation
    cells0 = _refine(rows, start)
    if len(cells0) == n:
        order = [c[0] for c in cells0]
        return code_of(rows, order), order
    idx = min((i for i, c in enumerate(cells0) if len(c) > 1), key=lambda i: (len(cells0[i]), i))
    target = cells0[idx]
    tried: list[int] = []
    for v in _twin_reps(rows, target):
        if any(orbits.find(v) == orbits.find(t) for t in tried):
            continue
        tried.append(v)
        rest = tuple(u for u in target if u != v)
        visit(cells0[:idx] + [(v,), rest] + cells0[idx + 1:])
    return best_code, best_order


def canonical_form(g: Graph) -> CanonicalForm:
    return CanonicalForm(g.n, canonical_labeling(g)[0])


def canonical_graph(g: Graph) -> Graph:
    return canonical_form(g).graph()


def is_isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.num_edges != b.num_edges or sorted(a.degrees()) != sorted(b.degrees()):
        return False
    return canonical_form(a) == canonical_form(b)


def same_orbit(g: Graph, u: int, v: int) -> bool:
    """True iff some automorphism of ``g`` maps ``u`` to ``v``."""
    if u == v:
        return True
    rest_u = [w for w in range(g.n) if w != u]
    rest_v = [w for w in range(g.n) if w != v]
    return canonical_labeling(g, [[u], rest_u])[0] == canonical_labeling(g, [[v], rest_v])[0]


def vertex_orbit_key(g: Graph, v: int) -> int:
    """Isomorphism-invariant key of the rooted graph ``(g, v)``."""
    return canonical_labeling(g, [[v], [w for w in range(g.n) if w != v]])[0]


# exhaustive reference, kept deliberately naive


def canonical_form_exhaustive(g: Graph) -> CanonicalForm:
    """Minimum code over every vertex ordering; the oracle for small graphs."""
    if g.n > 8:
        raise SizeExceeded(f"exhaustive canonical form supports n <= 8, got {g.n}")
    best = min(code_of(g.rows, order) for order in permutations(range(g.n)))
    return CanonicalForm(g.n, best)


def automorphisms(g: Graph) -> list[tuple[int, ...]]:
    """All automorphisms as tuples ``p`` with ``p[v]`` the image of ``v``; brute force."""
    if g.n > 8:
        raise SizeExceeded(f"automorphism enumeration supports n <= 8, got {g.n}")
    edges = set(g.edges())
    degs = g.degrees()
    out = []
    for p in permutations(range(g.n)):
        if any(degs[v] != degs[p[v]] for v in range(g.n)):
            continue
        if all(g.has_edge(p[u], p[v]) for u, v in edges):
            out.append(p)
    return out


def automorphism_order(g: Graph) -> int:
    return len(automorphisms(g))
