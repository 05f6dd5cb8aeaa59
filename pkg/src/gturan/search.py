"""Exhaustive maximisation of N(H, G) over F-free graphs on n vertices.

Graphs are grown one vertex at a time by canonical augmentation: a child is
kept only if the vertex just added is, up to automorphism, the child's
canonical deletion vertex, and isomorphic siblings from one parent are merged.
Every isomorphism class then appears exactly once per level.

Maxima do not need isomorph rejection at the last level: every class on n
vertices is a one-vertex extension of some class on n-1 vertices, so scanning
all F-free extensions of the (n-1)-level classes visits every class at least
once, which is all a maximum needs.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .canon import CanonicalForm, canonical_form, labeling
from .counting import census_rows, count_copies
from .graph import Graph, PatternId, bits, contains_subgraph, contains_subgraph_at, resolve

MAX_SEARCH_N = 10
DEFAULT_SEARCH_N = 9
MAX_BRUTE_N = 6


class BudgetExceeded(RuntimeError):
    pass


@dataclass
class SearchResult:
    h: PatternId
    f: PatternId
    n: int
    maximum: int
    extremal: list[CanonicalForm]
    graphs_visited: int
    elapsed: float = field(default=0.0, compare=False)


def _check_budget(n: int, limit: int = MAX_SEARCH_N) -> None:
    if n > limit:
        raise BudgetExceeded(f"n = {n} exceeds the search budget of {limit}")


def _extend(rows: Sequence[int], s: int) -> list[int]:
    new = 1 << len(rows)
    out = [r | new if s >> i & 1 else r for i, r in enumerate(rows)]
    out.append(s)
    return out


def free_extensions(rows: Sequence[int], f: Graph) -> Iterator[int]:
    """Neighbourhoods ``s`` of a new vertex that keep the graph F-free.

    Relies on ``rows`` being F-free and on F-containment being monotone in
    ``s``: once a partial neighbourhood creates F, no superset is tried.
    """
    n = len(rows)
    size = n + 1

    def rec(i: int, s: int) -> Iterator[int]:
        if i == n:
            yield s
            return
        yield from rec(i + 1, s)
        t = s | 1 << i
        if not contains_subgraph_at(_extend(rows, t), size, f, n):
            yield from rec(i + 1, t)

    return rec(0, 0)


def _is_canonical_child(rows: list[int]) -> int | None:
    """Canonical code of the child if its last vertex is a canonical deletion vertex."""
    n = len(rows)
    new = n - 1
    deg = [r.bit_count() for r in rows]
    dn = deg[new]
    if dn < max(deg):
        return None
    top = [v for v in range(n) if deg[v] == dn]
    inv = {v: sum(deg[u] for u in bits(rows[v])) for v in top}
    best = max(inv.values())
    if inv[new] != best:
        return None
    cls = [v for v in top if inv[v] == best]
    code, order = labeling(rows, n)
    if len(cls) == 1:
        return code
    pos = {v: i for i, v in enumerate(order)}
    w = min(cls, key=pos.__getitem__)
    if w == new:
        return code
    rest_new = [v for v in range(n) if v != new]
    rest_w = [v for v in range(n) if v != w]
    if labeling(rows, n, [[new], rest_new])[0] == labeling(rows, n, [[w], rest_w])[0]:
        return code
    return None


def canonical_children(rows: Sequence[int], f: Graph) -> list[list[int]]:
    """One representative per isomorphism class of F-free children whose canonical parent is ``rows``."""
    seen: set[int] = set()
    out = []
    need = max((r.bit_count() for r in rows), default=0)
    for s in free_extensions(rows, f):
        if s.bit_count() < need:
            continue
        child = _extend(rows, s)
        code = _is_canonical_child(child)
        if code is not None and code not in seen:
            seen.add(code)
            out.append(child)
    return out


def _grow(rows: list[int], target: int, f: Graph) -> Iterator[list[int]]:
    if len(rows) == target:
        yield rows
        return
    for child in canonical_children(rows, f):
        yield from _grow(child, target, f)


def classes(n: int, f: Graph | None) -> Iterator[list[int]]:
    """Adjacency rows of one representative per class of F-free graphs on n vertices."""
    f = _forbidden(f)
    return _grow([], n, f)


def _forbidden(f) -> Graph:
    if f is None:
        # nothing forbidden: a pattern that never fits
        return Graph.complete(MAX_SEARCH_N + 1)
    return resolve(f)


def is_maximal_free(rows: Sequence[int], f: Graph) -> bool:
    """Every non-edge, once added, creates a copy of F."""
    n = len(rows)
    for u, v in combinations(range(n), 2):
        if rows[u] >> v & 1:
            continue
        plus = list(rows)
        plus[u] |= 1 << v
        plus[v] |= 1 << u
        if not contains_subgraph_at(plus, n, f, u):
            return False
    return True


def enumerate_f_free(n: int, f: PatternId | Graph | None, maximal_only: bool = False) -> Iterator[Graph]:
    """One graph per isomorphism class of F-free graphs on n vertices.

    ``f=None`` forbids nothing.  With ``maximal_only`` only edge-maximal
    F-free graphs are produced.
    """
    _check_budget(n)
    fg = _forbidden(f)
    for rows in _grow([], n, fg):
        if maximal_only and not is_maximal_free(rows, fg):
            continue
        yield Graph.trusted(rows)


# ---------------------------------------------------------------------------
# maxima


@dataclass
class ColumnScan:
    """Maxima of all requested patterns over F-free graphs on n vertices."""

    f: PatternId
    n: int
    maxima: dict[PatternId, int]
    witnesses: dict[PatternId, Graph]
    visited: int
    elapsed: float = 0.0


def _units(n: int, f: Graph) -> list[list[int]]:
    depth = max(0, min(n - 1, n - 4))
    return list(_grow([], depth, f))


def _scan_unit(args) -> tuple[dict, dict, int]:
    unit, n, f, hs = args
    best = {h: -1 for h in hs}
    wit: dict = {}
    visited = 0
    for parent in _grow(unit, n - 1, f):
        for s in free_extensions(parent, f):
            child = _extend(parent, s)
            visited += 1
            counts = census_rows(child)
            for h in hs:
                c = counts[h]
                if c > best[h]:
                    best[h] = c
                    wit[h] = child
    return best, wit, visited


def _map(fn, items: list, workers: int):
    if workers > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, items, chunksize=max(1, len(items) // (8 * workers))))
    return [fn(x) for x in items]


def column_scan(f: PatternId | str, n: int, hs: Iterable[PatternId] = tuple(PatternId),
                workers: int = 1) -> ColumnScan:
    """Maximise every pattern in ``hs`` over F-free graphs on n vertices in one pass."""
    _check_budget(n)
    f = PatternId(f)
    fg = f.graph
    hs = tuple(PatternId(h) for h in hs)
    t0 = time.perf_counter()
    if n == 0:
        empty = Graph.empty(0)
        return ColumnScan(f, 0, {h: 0 for h in hs}, {h: empty for h in hs}, 1)
    results = _map(_scan_unit, [(u, n, fg, hs) for u in _units(n, fg)], workers)
    maxima = {h: -1 for h in hs}
    witnesses: dict[PatternId, Graph] = {}
    visited = 0
    for best, wit, vis in results:  # unit order, so ties keep the earliest witness
        visited += vis
        for h in hs:
            if best[h] > maxima[h]:
                maxima[h] = best[h]
                witnesses[h] = Graph.trusted(wit[h])
    return ColumnScan(f, n, maxima, witnesses, visited, time.perf_counter() - t0)


def _extremal_unit(args) -> tuple[int, list[list[int]], int]:
    unit, n, f, h, maximal_only = args
    best = -1
    found: list[list[int]] = []
    visited = 0
    for parent in _grow(unit, n - 1, f):
        for s in free_extensions(parent, f):
            child = _extend(parent, s)
            visited += 1
            c = census_rows(child)[h]
            if c < best:
                continue
            if maximal_only and not is_maximal_free(child, f):
                continue
            if c > best:
                best, found = c, []
            found.append(child)
    return best, found, visited


def max_copies(h: PatternId | str, f: PatternId | str, n: int, maximal_only: bool = True,
               workers: int = 1) -> SearchResult:
    """ex(n, H, F) with every extremal graph, by exhaustive search.

    With ``maximal_only`` (the default) extremal graphs are restricted to
    edge-maximal F-free ones; the maximum is unaffected because adding edges
    never lowers a copy count.
    """
    _check_budget(n)
    h, f = PatternId(h), PatternId(f)
    t0 = time.perf_counter()
    fg = f.graph
    if n == 0:
        return SearchResult(h, f, 0, 0, [CanonicalForm(0, 0)], 1, 0.0)
    results = _map(_extremal_unit, [(u, n, fg, h, maximal_only) for u in _units(n, fg)], workers)
    best = max(r[0] for r in results)
    forms: set[CanonicalForm] = set()
    visited = 0
    for value, found, vis in results:
        visited += vis
        if value == best:
            forms.update(canonical_form(Graph.trusted(rows)) for rows in found)
    extremal = sorted(forms)
    for form in extremal:
        g = form.graph()
        assert not contains_subgraph(g, fg) and count_copies(h, g) == best
    return SearchResult(h, f, n, best, extremal, visited, time.perf_counter() - t0)


def max_copies_by_classes(h: PatternId | str, f: PatternId | str, n: int, maximal_only: bool = False) -> int:
    """Maximum over the isomorph-free stream; slower, used to cross-check :func:`max_copies`."""
    h = PatternId(h)
    return max(census_rows(g.rows)[h] for g in enumerate_f_free(n, f, maximal_only))


def brute_force_labeled(h: PatternId | str, f: PatternId | str, n: int) -> int:
    """Maximum over all 2^C(n,2) labeled graphs; no isomorphism machinery."""
    _check_budget(n, MAX_BRUTE_N)
    hg, fg = resolve(h), resolve(f)
    pairs = list(combinations(range(n), 2))
    best = 0
    for mask in range(1 << len(pairs)):
        rows = [0] * n
        for i, (u, v) in enumerate(pairs):
            if mask >> i & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        g = Graph.trusted(rows)
        if contains_subgraph(g, fg):
            continue
        best = max(best, count_copies(hg, g))
    return best
