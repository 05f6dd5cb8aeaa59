"""Labeled simple graphs stored as adjacency bit rows.

A :class:`Graph` is an immutable value: ``rows[v]`` is an int whose bit ``u``
is set iff ``uv`` is an edge.  Everything else in the package (counting,
search, symmetrization) works directly on these rows.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 512


class GraphError(ValueError):
    """Invalid vertex, edge or graph text."""


class SizeExceeded(ValueError):
    """An exact routine was asked for a graph larger than it supports."""


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n > MAX_VERTICES:
            raise SizeExceeded(f"at most {MAX_VERTICES} vertices are supported, got {self.n}")
        if self.n < 0:
            raise GraphError(f"negative vertex count {self.n}")
        if len(self.rows) != self.n:
            raise GraphError("need one adjacency row per vertex")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full or row >> v & 1:
                raise GraphError(f"row {v} has a loop or an out-of-range bit")
            for u in bits(row):
                if not self.rows[u] >> v & 1:
                    raise GraphError(f"adjacency not symmetric at {u}-{v}")

    # construction helpers

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> Graph:
        full = (1 << n) - 1
        return cls(n, tuple(full ^ (1 << v) for v in range(n)))

    @classmethod
    def from_rows(cls, rows: Sequence[int]) -> Graph:
        return cls(len(rows), tuple(rows))

    @classmethod
    def trusted(cls, rows: Sequence[int]) -> Graph:
        """Skip validation; for rows produced by the package's own generators."""
        g = object.__new__(cls)
        object.__setattr__(g, "n", len(rows))
        object.__setattr__(g, "rows", tuple(rows))
        return g

    # queries

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.rows[v]))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in bits(self.rows[v] & ((1 << v) - 1))]

    def non_edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, v in combinations(range(self.n), 2) if not self.rows[u] >> v & 1]

    @property
    def num_edges(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def isolated_vertices(self) -> list[int]:
        return [v for v, r in enumerate(self.rows) if not r]

    # derived graphs

    def add_edge(self, u: int, v: int) -> Graph:
        _check_pair(self.n, u, v)
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def remove_edge(self, u: int, v: int) -> Graph:
        _check_pair(self.n, u, v)
        rows = list(self.rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, tuple(rows))

    def complement(self) -> Graph:
        full = (1 << self.n) - 1
        return Graph(self.n, tuple(full ^ r ^ (1 << v) for v, r in enumerate(self.rows)))

    def induced(self, vertices: Sequence[int]) -> Graph:
        """Induced subgraph, relabeled so ``vertices[i]`` becomes ``i``."""
        pos = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            r = 0
            for u in bits(self.rows[v]):
                if u in pos:
                    r |= 1 << pos[u]
            rows.append(r)
        return Graph(len(vertices), tuple(rows))

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph in which old vertex ``v`` is renamed ``perm[v]``."""
        rows = [0] * self.n
        for v, r in enumerate(self.rows):
            m = 0
            for u in bits(r):
                m |= 1 << perm[u]
            rows[perm[v]] = m
        return Graph(self.n, tuple(rows))

    def disjoint_union(self, other: Graph) -> Graph:
        shift = self.n
        return Graph(self.n + other.n, self.rows + tuple(r << shift for r in other.rows))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


def _check_pair(n: int, u: int, v: int) -> None:
    if not (0 <= u < n and 0 <= v < n):
        raise GraphError(f"edge {u}-{v} has an endpoint outside [0, {n})")
    if u == v:
        raise GraphError(f"loop at vertex {u}")


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if not 0 <= n <= MAX_VERTICES:
        raise GraphError(f"vertex count {n} outside [0, {MAX_VERTICES}]")
    rows = [0] * n
    for u, v in edges:
        _check_pair(n, u, v)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


# ---------------------------------------------------------------------------
# named small patterns


class PatternId(str, enum.Enum):
    K2 = "K2"
    P3 = "P3"
    K3 = "K3"
    M2 = "M2"
    S4 = "S4"
    P4 = "P4"
    C4 = "C4"
    T1 = "T1"
    B2 = "B2"
    K4 = "K4"

    @property
    def graph(self) -> Graph:
        return _PATTERN_GRAPHS[self]

    @property
    def order(self) -> int:
        return self.graph.n

    def __str__(self):
        return self.value


_PATTERN_EDGES = {
    PatternId.K2: (2, [(0, 1)]),
    PatternId.P3: (3, [(0, 1), (1, 2)]),
    PatternId.K3: (3, [(0, 1), (1, 2), (0, 2)]),
    PatternId.M2: (4, [(0, 1), (2, 3)]),
    PatternId.S4: (4, [(0, 1), (0, 2), (0, 3)]),
    PatternId.P4: (4, [(0, 1), (1, 2), (2, 3)]),
    PatternId.C4: (4, [(0, 1), (1, 2), (2, 3), (0, 3)]),
    # triangle 0,1,2 with pendant 3 on vertex 0
    PatternId.T1: (4, [(0, 1), (1, 2), (0, 2), (0, 3)]),
    # K4 minus the edge 2-3: triangles 012 and 013 share 01
    PatternId.B2: (4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]),
    PatternId.K4: (4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
}
_PATTERN_GRAPHS = {p: from_edge_list(n, e) for p, (n, e) in _PATTERN_EDGES.items()}

PATTERNS: tuple[PatternId, ...] = tuple(PatternId)


def resolve(p: PatternId | str | Graph) -> Graph:
    if isinstance(p, Graph):
        return p
    return PatternId(p).graph


# ---------------------------------------------------------------------------
# subgraph containment


def _embedding_order(h: Graph) -> list[int]:
    """Vertex order for backtracking: each vertex has a mapped neighbour when possible."""
    order: list[int] = []
    seen = 0
    degs = h.degrees()
    while len(order) < h.n:
        frontier = [v for v in range(h.n) if not seen >> v & 1 and h.rows[v] & seen]
        pool = frontier or [v for v in range(h.n) if not seen >> v & 1]
        v = max(pool, key=lambda x: ((h.rows[x] & seen).bit_count(), degs[x], -x))
        order.append(v)
        seen |= 1 << v
    return order


@lru_cache(maxsize=None)
def embedding_plan(h: Graph) -> tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]:
    """Order of H's vertices and, per step, the earlier steps it must be adjacent to."""
    order = _embedding_order(h)
    back = []
    for i, v in enumerate(order):
        back.append(tuple(j for j in range(i) if h.rows[v] >> order[j] & 1))
    return tuple(order), tuple(back)


def _extend(rows: Sequence[int], full: int, back, images: list[int], used: int, depth: int) -> bool:
    if depth == len(back):
        return True
    cand = full & ~used
    for j in back[depth]:
        cand &= rows[images[j]]
    while cand:
        low = cand & -cand
        cand ^= low
        images.append(low.bit_length() - 1)
        if _extend(rows, full, back, images, used | low, depth + 1):
            return True
        images.pop()
    return False


def contains_subgraph(g: Graph, h: Graph | PatternId) -> bool:
    """True iff ``h`` embeds into ``g`` as a (not necessarily induced) subgraph."""
    h = resolve(h)
    if h.n > g.n:
        return False
    if h.num_edges > g.num_edges:
        return False
    _, back = embedding_plan(h)
    return _extend(g.rows, (1 << g.n) - 1, back, [], 0, 0)


@lru_cache(maxsize=None)
def _anchored_plans(h: Graph) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """One backtracking plan per vertex orbit representative of H, that vertex first."""
    plans = []
    seen_roots = set()
    for root in range(h.n):
        key = _vertex_type(h, root)
        if key in seen_roots:
            continue
        seen_roots.add(key)
        order = [root]
        seen = 1 << root
        while len(order) < h.n:
            pool = [v for v in range(h.n) if not seen >> v & 1 and h.rows[v] & seen]
            pool = pool or [v for v in range(h.n) if not seen >> v & 1]
            v = max(pool, key=lambda x: ((h.rows[x] & seen).bit_count(), -x))
            order.append(v)
            seen |= 1 << v
        plans.append(tuple(tuple(j for j in range(i) if h.rows[v] >> order[j] & 1)
                           for i, v in enumerate(order)))
    return tuple(plans)


def _vertex_type(h: Graph, v: int):
    # orbit key for graphs with at most a handful of vertices: exact via relabel check
    from .canon import vertex_orbit_key
    return vertex_orbit_key(h, v)


def contains_subgraph_at(rows: Sequence[int], n: int, h: Graph, v: int) -> bool:
    """True iff some copy of ``h`` in the graph given by ``rows`` uses vertex ``v``."""
    full = (1 << n) - 1
    for back in _anchored_plans(h):
        if _extend(rows, full, back, [v], 1 << v, 1):
            return True
    return False


def is_f_free(g: Graph, f: Graph | PatternId) -> bool:
    return not contains_subgraph(g, f)


# ---------------------------------------------------------------------------
# colourings


def _colorable(rows: Sequence[int], order: list[int], k: int) -> bool:
    n = len(order)
    colors = [-1] * len(rows)

    def place(i: int, used_max: int) -> bool:
        if i == n:
            return True
        v = order[i]
        banned = 0
        for u in bits(rows[v]):
            if colors[u] >= 0:
                banned |= 1 << colors[u]
        # symmetry: a fresh colour is only tried once
        for c in range(min(k, used_max + 2)):
            if not banned >> c & 1:
                colors[v] = c
                if place(i + 1, max(used_max, c)):
                    return True
                colors[v] = -1
        return False

    return place(0, -1)


def chromatic_number(g: Graph) -> int:
    if g.n > 16:
        raise SizeExceeded(f"exact colouring supports n <= 16, got {g.n}")
    if g.n == 0:
        return 0
    if g.num_edges == 0:
        return 1
    order = sorted(range(g.n), key=lambda v: -g.degree(v))
    k = 2
    while not _colorable(g.rows, order, k):
        k += 1
    return k


def color_critical_edges(g: Graph) -> set[tuple[int, int]]:
    """Edges whose deletion lowers the chromatic number."""
    chi = chromatic_number(g)
    return {e for e in g.edges() if chromatic_number(g.remove_edge(*e)) < chi}


def is_complete_multipartite(g: Graph) -> bool:
    """Non-adjacency is an equivalence relation on the vertex set."""
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not g.rows[u] >> v & 1 and g.rows[u] != g.rows[v]:
                return False
    return True


def blowup(h: Graph, t: int) -> Graph:
    """Replace each vertex by ``t`` independent clones; vertex ``i`` becomes ``i*t .. i*t+t-1``."""
    edges = []
    for a, b in h.edges():
        for i in range(t):
            for j in range(t):
                edges.append((a * t + i, b * t + j))
    return from_edge_list(h.n * t, edges)


def blowup_contains(h: Graph | PatternId, f: Graph | PatternId, t: int | None = None) -> bool:
    """True iff ``f`` is a subgraph of the ``t``-fold blow-up of ``h`` (default ``t = |V(f)|``)."""
    h, f = resolve(h), resolve(f)
    if t is None:
        t = f.n
    return contains_subgraph(blowup(h, t), f)


# ---------------------------------------------------------------------------
# text formats


def to_graph6(g: Graph) -> str:
    n = g.n
    if n < 63:
        out = [n + 63]
    elif n < 258048:
        out = [126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63]
    else:  # pragma: no cover - beyond MAX_VERTICES
        raise GraphError("graph too large for graph6")
    acc = nbits = 0
    for j in range(1, n):
        row = g.rows[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out).decode("ascii")


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    data = [ord(c) - 63 for c in s]
    if not data or any(not 0 <= d < 64 for d in data):
        raise GraphError(f"not a graph6 string: {text!r}")
    if data[0] < 63:
        n, pos = data[0], 1
    elif len(data) >= 4 and data[1] < 63:
        n, pos = data[1] << 12 | data[2] << 6 | data[3], 4
    else:
        raise GraphError("graph6 sizes above 258047 are not supported")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(data) - pos != need:
        raise GraphError(f"graph6 body has {len(data) - pos} bytes, expected {need}")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if data[pos + k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


def to_edge_text(g: Graph) -> str:
    """Plain edge-list form ``"n; u-v,u-v,..."``."""
    return f"{g.n}; " + ",".join(f"{u}-{v}" for u, v in g.edges())


def from_edge_text(text: str) -> Graph:
    head, _, body = text.strip().partition(";")
    try:
        n = int(head)
        edges = []
        for tok in body.replace(" ", "").split(","):
            if tok:
                a, b = tok.split("-")
                edges.append((int(a), int(b)))
    except ValueError as exc:
        raise GraphError(f"bad edge-list text: {text!r}") from exc
    return from_edge_list(n, edges)


def parse_graph(text: str) -> Graph:
    """Accept either graph6 or the ``n; u-v,...`` edge-list form."""
    return from_edge_text(text) if ";" in text else from_graph6(text)
