"""Exact copy counts N(H, G).

Two independent routes: a backtracking embedder (injective edge-preserving
maps divided by |Aut(H)|) that works for any small pattern, and closed-form
degree/codegree identities for the ten named patterns.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import combinations
from math import comb

from .canon import CanonicalForm, automorphism_order as _aut_order, canonical_form, code_of
from .graph import Graph, PatternId, SizeExceeded, bits, embedding_plan, resolve

MAX_PATTERN = 8


class PatternTooLarge(SizeExceeded):
    pass


def _check_pattern(h: Graph) -> None:
    if h.n > MAX_PATTERN:
        raise PatternTooLarge(f"patterns are limited to {MAX_PATTERN} vertices, got {h.n}")


@lru_cache(maxsize=None)
def automorphism_order(h: Graph | PatternId) -> int:
    h = resolve(h)
    _check_pattern(h)
    return _aut_order(h)


def count_embeddings(h: Graph, g: Graph) -> int:
    """Number of injective maps V(h) -> V(g) sending edges to edges."""
    if h.n > g.n:
        return 0
    if h.n == 0:
        return 1
    _, back = embedding_plan(h)
    rows = g.rows
    full = (1 << g.n) - 1
    last = len(back) - 1
    images = [0] * len(back)

    def rec(depth: int, used: int) -> int:
        cand = full & ~used
        for j in back[depth]:
            cand &= rows[images[j]]
        if depth == last:
            return cand.bit_count()
        total = 0
        while cand:
            low = cand & -cand
            cand ^= low
            images[depth] = low.bit_length() - 1
            total += rec(depth + 1, used | low)
        return total

    return rec(0, 0)


def count_copies(h: Graph | PatternId, g: Graph) -> int:
    """N(H, G): subgraphs of G isomorphic to H, not necessarily induced."""
    h = resolve(h)
    _check_pattern(h)
    emb = count_embeddings(h, g)
    aut = automorphism_order(h)
    assert emb % aut == 0
    return emb // aut


@lru_cache(maxsize=65536)
def _small_class(n: int, code: int) -> CanonicalForm:
    return canonical_form(CanonicalForm(n, code).graph())


def induced_census(g: Graph, k: int) -> Counter:
    """Counter of canonical forms over all k-vertex induced subgraphs of ``g``."""
    out: Counter = Counter()
    rows = g.rows
    for sub in combinations(range(g.n), k):
        out[_small_class(k, code_of(rows, sub))] += 1
    return out


def count_induced(h: Graph | PatternId, g: Graph) -> int:
    """Number of vertex subsets of G whose induced subgraph is isomorphic to H."""
    h = resolve(h)
    _check_pattern(h)
    if h.n > g.n:
        return 0
    target = canonical_form(h)
    rows = g.rows
    return sum(1 for sub in combinations(range(g.n), h.n)
               if _small_class(h.n, code_of(rows, sub)) == target)


# ---------------------------------------------------------------------------
# closed forms


def pattern_census(g: Graph) -> dict[PatternId, int]:
    """All ten pattern counts from degree, codegree and triangle statistics."""
    return census_rows(g.rows)


def census_rows(rows) -> dict[PatternId, int]:
    n = len(rows)
    deg = [r.bit_count() for r in rows]
    m = sum(deg) // 2
    p3 = sum(d * (d - 1) // 2 for d in deg)
    s4 = sum(d * (d - 1) * (d - 2) // 6 for d in deg)

    tri_at = [0] * n  # triangles through each vertex
    tri3 = 0  # each triangle counted once per edge
    b2 = 0
    p4_paths = 0
    k4_6 = 0  # each K4 counted once per edge
    for v in range(n):
        rv = rows[v]
        for u in bits(rv & ((1 << v) - 1)):
            common = rv & rows[u]
            c = common.bit_count()
            tri3 += c
            tri_at[u] += c
            tri_at[v] += c
            b2 += c * (c - 1) // 2
            p4_paths += (deg[u] - 1) * (deg[v] - 1)
            if c > 1:
                inner = 0
                for w in bits(common):
                    inner += (rows[w] & common).bit_count()
                k4_6 += inner // 2
    k3 = tri3 // 3
    # tri_at counted each triangle twice per vertex (two incident edges)
    t1 = sum((t // 2) * (deg[x] - 2) for x, t in enumerate(tri_at))

    c4_2 = 0
    for v in range(n):
        rv = rows[v]
        for u in range(v):
            c = (rv & rows[u]).bit_count()
            c4_2 += c * (c - 1) // 2

    return {
        PatternId.K2: m,
        PatternId.P3: p3,
        PatternId.K3: k3,
        PatternId.M2: m * (m - 1) // 2 - p3,
        PatternId.S4: s4,
        PatternId.P4: p4_paths - 3 * k3,
        PatternId.C4: c4_2 // 2,
        PatternId.T1: t1,
        PatternId.B2: b2,
        PatternId.K4: k4_6 // 6,
    }


def count_copies_fast(h: PatternId | str, g: Graph) -> int:
    h = PatternId(h)
    rows = g.rows
    deg = [r.bit_count() for r in rows]
    if h is PatternId.K2:
        return sum(deg) // 2
    if h is PatternId.P3:
        return sum(comb(d, 2) for d in deg)
    if h is PatternId.S4:
        return sum(comb(d, 3) for d in deg)
    if h is PatternId.M2:
        return comb(sum(deg) // 2, 2) - sum(comb(d, 2) for d in deg)
    return pattern_census(g)[h]
