"""Zykov symmetrization as an optimizer.

Symmetrizing u to v gives u the neighbourhood of v.  For a complete
multipartite pattern H one of the two directions never lowers N(H, .), and
repeating until non-adjacency is an equivalence relation ends at a complete
multipartite graph.

Step rule, for the first non-adjacent pair (u, v) with different
neighbourhoods:

* if some direction strictly raises the count, take the best one;
* otherwise move a vertex into the twin class that is at least as large as
  its own, which strictly raises the number of twin pairs.

So (count, twin pairs) rises lexicographically at every step and the run
terminates.  Ties go to the result with the smaller canonical form.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from typing import Iterable

from .canon import canonical_form
from .counting import census_rows, count_copies
from .graph import Graph, GraphError, PatternId, is_complete_multipartite, resolve


class NotTerminating(RuntimeError):
    """Step budget exhausted; the progress measure says this cannot happen."""


class MonotonicityViolation(AssertionError):
    pass


@dataclass(frozen=True)
class Step:
    u: int
    v: int
    direction: str  # "u->v": u takes v's neighbourhood
    count_before: int
    count_after: int


@dataclass
class SymmetrizationTrace:
    steps: list[Step]
    final: Graph
    initial_count: int
    final_count: int
    preserved_set: frozenset[int] | None = None
    h: str = ""

    def to_json(self) -> str:
        from .graph import to_graph6

        doc = {
            "h": self.h,
            "initial_count": self.initial_count,
            "final_count": self.final_count,
            "final_graph6": to_graph6(self.final),
            "preserved_set": sorted(self.preserved_set) if self.preserved_set is not None else None,
            "steps": [asdict(s) for s in self.steps],
        }
        return json.dumps(doc, indent=2)


def symmetrize_step(g: Graph, u: int, v: int) -> Graph:
    """Delete the edges at u and join u to every neighbour of v."""
    if u == v:
        raise GraphError("cannot symmetrize a vertex to itself")
    for x in (u, v):
        if not 0 <= x < g.n:
            raise GraphError(f"vertex {x} out of range for n = {g.n}")
    if g.has_edge(u, v):
        raise GraphError(f"{u} and {v} are adjacent")
    return Graph.trusted(_step_rows(g.rows, u, v))


def _step_rows(rows, u: int, v: int) -> list[int]:
    bu = 1 << u
    target = rows[v]
    out = []
    for w, r in enumerate(rows):
        if w == u:
            out.append(target)
        else:
            r &= ~bu
            if target >> w & 1:
                r |= bu
            out.append(r)
    return out


def _counter(h):
    if isinstance(h, PatternId) or (isinstance(h, str) and h in PatternId.__members__):
        pid = PatternId(h)
        return lambda rows: census_rows(rows)[pid]
    hg = resolve(h)
    return lambda rows: count_copies(hg, Graph.trusted(rows))


def _twin_size(rows, x: int) -> int:
    return sum(1 for r in rows if r == rows[x])


def _choose(rows, u: int, v: int, count, base: int, monotone: bool) -> tuple[list[int], Step]:
    """Pick the direction for the pair (u, v) according to the module's step rule."""
    options = []
    for a, b in ((u, v), (v, u)):
        new = _step_rows(rows, a, b)
        gain = _twin_size(rows, b) >= _twin_size(rows, a)  # twin pairs strictly increase
        options.append((count(new), gain, a, b, new))
    best = max(o[0] for o in options)
    if best > base:
        pool = [o for o in options if o[0] == best]
    elif monotone:
        pool = [o for o in options if o[0] == base and o[1]]
    else:
        pool = [o for o in options if o[1]]
        top = max(o[0] for o in pool)
        pool = [o for o in pool if o[0] == top]
    if not pool:
        raise MonotonicityViolation(f"both directions lower the count for pair {(u, v)}")
    if len(pool) > 1:
        pool.sort(key=lambda o: canonical_form(Graph.trusted(o[4])))
    c, _, a, b, new = pool[0]
    return new, Step(a, b, f"{a}->{b}", base, c)


def _next_pair(rows, n: int, a_mask: int) -> tuple[int, int] | None:
    """First non-adjacent pair with different neighbourhoods, pairs inside A first."""
    if a_mask:
        inside = [x for x in range(n) if a_mask >> x & 1]
        for i, x in enumerate(inside):
            for y in inside[i + 1:]:
                if rows[x] != rows[y]:
                    return x, y
    for x in range(n):
        for y in range(x + 1, n):
            if not rows[x] >> y & 1 and rows[x] != rows[y]:
                return x, y
    return None


def _run(g: Graph, h, a_mask: int) -> SymmetrizationTrace:
    hg = resolve(h)
    monotone = is_complete_multipartite(hg)
    count = _counter(h)
    rows = list(g.rows)
    n = g.n
    base = count(rows)
    start = base
    steps: list[Step] = []
    budget = max(1, n ** 3)
    while True:
        pair = _next_pair(rows, n, a_mask)
        if pair is None:
            break
        if len(steps) >= budget:
            raise NotTerminating(f"no fixed point after {budget} steps")
        rows, step = _choose(rows, *pair, count, base, monotone)
        if monotone and step.count_after < step.count_before:
            raise MonotonicityViolation(f"step {step} lowered N({h})")
        if a_mask and any(rows[x] & a_mask for x in range(n) if a_mask >> x & 1):
            raise MonotonicityViolation(f"step {step} broke independence of the preserved set")
        steps.append(step)
        base = step.count_after
    final = Graph.trusted(rows)
    assert is_complete_multipartite(final)
    label = h.value if isinstance(h, PatternId) else str(h)
    preserved = frozenset(x for x in range(n) if a_mask >> x & 1) if a_mask else None
    return SymmetrizationTrace(steps, final, start, base, preserved, label)


def run_to_multipartite(g: Graph, h: PatternId | str | Graph) -> SymmetrizationTrace:
    """Symmetrize until the graph is complete multipartite.

    For complete multipartite ``h`` every step is checked not to lower N(h, .).
    Other patterns are accepted; the run still terminates but the count may drop.
    """
    return _run(g, h, 0)


def run_preserving_independent_set(g: Graph, h: PatternId | str | Graph,
                                   a: Iterable[int]) -> SymmetrizationTrace:
    """As :func:`run_to_multipartite`, keeping the independent set ``a`` independent.

    Pairs inside ``a`` are always handled first, so ``a`` ends up inside one part.
    """
    a = sorted(set(a))
    mask = 0
    for x in a:
        if not 0 <= x < g.n:
            raise GraphError(f"vertex {x} out of range for n = {g.n}")
        mask |= 1 << x
    if any(g.rows[x] & mask for x in a):
        raise GraphError("the preserved set is not independent")
    trace = _run(g, h, mask)
    if not a:
        trace.preserved_set = frozenset()
    return trace


def parts(g: Graph) -> list[list[int]]:
    """Parts of a complete multipartite graph (classes of equal neighbourhoods)."""
    groups: dict[int, list[int]] = {}
    for v, r in enumerate(g.rows):
        groups.setdefault(r, []).append(v)
    return sorted(groups.values())
