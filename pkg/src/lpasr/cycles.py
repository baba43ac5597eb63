"""Cycles, closed simple paths, exits and the cycle conditions on a graph.

A closed simple path based at ``v`` returns to ``v`` without passing
through ``v`` in between.  Other vertices may repeat, so the set of such
paths at one vertex can be infinite; :func:`csp_based_at` detects that case
exactly instead of truncating silently.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import (
    Edge,
    Graph,
    GraphError,
    find_cycle,
    induced_subgraph,
    reachable_from,
    strongly_connected_components,
)

CSP_CAP = 10**6


class CSPLimitError(GraphError):
    """More closed simple paths at one vertex than the enumeration cap allows."""


class InfiniteCSPError(CSPLimitError):
    def __init__(self, vertex: str, cycle: tuple[Edge, ...]):
        self.vertex = vertex
        self.cycle = cycle
        ids = " ".join(e.id for e in cycle)
        super().__init__(
            f"infinitely many closed simple paths based at {vertex!r} (detour cycle: {ids})"
        )


@dataclass(frozen=True)
class ClosedSimplePath:
    base: str
    edges: tuple[Edge, ...]

    @property
    def sources(self) -> tuple[str, ...]:
        return tuple(e.src for e in self.edges)

    @property
    def is_cycle(self) -> bool:
        return len(set(self.sources)) == len(self.edges)

    def ids(self) -> list[str]:
        return [e.id for e in self.edges]

    def __len__(self) -> int:
        return len(self.edges)


# Cycles are closed simple paths whose sources are pairwise distinct.
Cycle = ClosedSimplePath


def as_path(g: Graph, edge_ids: Sequence[str]) -> ClosedSimplePath:
    """Build and validate a closed simple path from edge ids of ``g``."""
    try:
        edges = tuple(g.edge_map[i] for i in edge_ids)
    except KeyError as exc:
        raise GraphError(f"unknown edge {exc.args[0]!r}") from None
    if not edges:
        raise GraphError("a closed simple path needs at least one edge")
    base = edges[0].src
    for a, b in zip(edges, edges[1:]):
        if a.dst != b.src:
            raise GraphError(f"edges {a.id!r} and {b.id!r} are not consecutive")
    if edges[-1].dst != base:
        raise GraphError("path does not return to its base")
    if any(e.src == base for e in edges[1:]):
        raise GraphError("path passes through its base before the end")
    return ClosedSimplePath(base, edges)


def _path_key(g: Graph, p: ClosedSimplePath) -> tuple:
    return (len(p.edges), [g.index[p.base]], [e.id for e in p.edges])


def simple_cycles(g: Graph) -> list[Cycle]:
    """Every cycle once, rotated to start at its lexicographically least vertex id."""
    rank = {v: r for r, v in enumerate(sorted(g.vertices))}
    found: list[Cycle] = []
    for base in sorted(g.vertices):
        on_path = {base}
        path: list[Edge] = []

        def walk(v: str) -> None:
            for e in g.out_edges(v):
                if e.dst == base:
                    found.append(ClosedSimplePath(base, tuple(path) + (e,)))
                elif rank[e.dst] > rank[base] and e.dst not in on_path:
                    on_path.add(e.dst)
                    path.append(e)
                    walk(e.dst)
                    path.pop()
                    on_path.discard(e.dst)

        walk(base)
    found.sort(key=lambda c: (c.base, [e.id for e in c.edges]))
    return found


def _csp_region(g: Graph, v: str) -> frozenset[str]:
    """Vertices other than ``v`` that can sit strictly inside a closed simple path at ``v``."""
    fwd: dict[str, list[str]] = {u: [] for u in g.vertices}
    back: dict[str, list[str]] = {u: [] for u in g.vertices}
    for e in g.edges:
        if e.src != v and e.dst != v:
            fwd[e.src].append(e.dst)
            back[e.dst].append(e.src)

    def closure(starts: Iterable[str], adj: dict[str, list[str]]) -> set[str]:
        seen = set(starts)
        queue = deque(seen)
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return seen

    leaving = {e.dst for e in g.out_edges(v) if e.dst != v}
    returning = {e.src for e in g.edges if e.dst == v and e.src != v}
    return frozenset(closure(leaving, fwd) & closure(returning, back))


def csp_detour(g: Graph, v: str) -> tuple[Edge, ...] | None:
    """A cycle avoiding ``v`` that can be spliced into a closed simple path at ``v``.

    Its existence is exactly the condition for infinitely many such paths.
    """
    g.check_vertex(v)
    return find_cycle(induced_subgraph(g, _csp_region(g, v)))


def _iter_csps(g: Graph, v: str, region: frozenset[str], max_length: int | None):
    stack: list[tuple[tuple[Edge, ...], str]] = [((), v)]
    while stack:
        prefix, u = stack.pop()
        if max_length is not None and len(prefix) >= max_length:
            continue
        for e in reversed(g.out_edges(u)):
            if e.dst == v:
                yield ClosedSimplePath(v, prefix + (e,))
            elif e.dst in region:
                stack.append((prefix + (e,), e.dst))


def csp_based_at(
    g: Graph, v: str, max_length: int | None = None, cap: int = CSP_CAP
) -> list[ClosedSimplePath]:
    """Closed simple paths based at ``v``, shortest first.

    Without ``max_length`` the full set is returned, and an infinite set
    raises :class:`InfiniteCSPError`.  With ``max_length`` only paths up to
    that many edges are listed.
    """
    g.check_vertex(v)
    region = _csp_region(g, v)
    if max_length is None:
        detour = find_cycle(induced_subgraph(g, region))
        if detour is not None:
            raise InfiniteCSPError(v, detour)
    out = []
    for p in _iter_csps(g, v, region, max_length):
        out.append(p)
        if len(out) > cap:
            raise CSPLimitError(f"more than {cap} closed simple paths based at {v!r}")
    out.sort(key=lambda p: _path_key(g, p))
    return out


def csp_count(g: Graph, v: str, stop_at: int | None = None) -> float:
    """Number of closed simple paths at ``v``; ``math.inf`` when there are infinitely many."""
    g.check_vertex(v)
    region = _csp_region(g, v)
    if find_cycle(induced_subgraph(g, region)) is not None:
        return math.inf
    n = 0
    for _ in _iter_csps(g, v, region, None):
        n += 1
        if stop_at is not None and n >= stop_at:
            break
    return n


def has_exit(g: Graph, c: ClosedSimplePath) -> bool:
    c = as_path(g, c.ids())
    return any(f != e for e in c.edges for f in g.out_edges(e.src))


def condition_L(g: Graph) -> bool:
    # A closed simple path without an exit is forced at every vertex, hence a cycle,
    # so checking cycles covers every closed simple path.
    return all(has_exit(g, c) for c in simple_cycles(g))


def on_closed_path(g: Graph) -> frozenset[str]:
    """Vertices lying on at least one closed path (equivalently on a cycle)."""
    out = set()
    for comp in strongly_connected_components(g):
        if len(comp) > 1 or any(e.dst == comp[0] for e in g.out_edges(comp[0])):
            out.update(comp)
    return frozenset(out)


def condition_K(g: Graph) -> bool:
    return all(csp_count(g, v, stop_at=2) >= 2 for v in g.order(on_closed_path(g)))


def has_isolated_cycles(g: Graph) -> bool:
    """True iff every cyclic strongly connected component is a bare cycle."""
    for comp in strongly_connected_components(g):
        members = set(comp)
        inner = {v: sum(1 for e in g.out_edges(v) if e.dst in members) for v in comp}
        cyclic = len(comp) > 1 or inner[comp[0]] > 0
        if cyclic and any(k != 1 for k in inner.values()):
            return False
    return True


def x0_set(g: Graph) -> frozenset[str]:
    """Vertices emitting two distinct edges that both lead back to the vertex."""
    out = set()
    for v in g.vertices:
        returning = [e for e in g.out_edges(v) if v in reachable_from(g, [e.dst])]
        if len(returning) >= 2:
            out.add(v)
    return frozenset(out)
