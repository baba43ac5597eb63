"""Brute-force reference implementations for small graphs.

These deliberately avoid the production algorithms: reachability comes
from adjacency-matrix powers, hereditary saturated sets from a scan over
all vertex subsets, and closed paths from exhaustive walk enumeration with
an explicit length bound.  They are exponential and only meant for graphs
of a handful of vertices.
"""

from __future__ import annotations

from itertools import combinations

from .graph import Edge, Graph


def reach_matrix(g: Graph) -> dict[tuple[str, str], bool]:
    """(v, w) -> some walk of length 0..|V| leads from v to w, via matrix powers."""
    n = len(g.vertices)
    adj = [[0] * n for _ in range(n)]
    for e in g.edges:
        adj[g.index[e.src]][g.index[e.dst]] = 1
    power = [[int(i == j) for j in range(n)] for i in range(n)]
    seen = [row[:] for row in power]
    for _ in range(n):
        power = [
            [int(any(power[i][k] and adj[k][j] for k in range(n))) for j in range(n)]
            for i in range(n)
        ]
        seen = [[seen[i][j] or power[i][j] for j in range(n)] for i in range(n)]
    return {(v, w): bool(seen[g.index[v]][g.index[w]]) for v in g.vertices for w in g.vertices}


def hs_sets(g: Graph) -> list[frozenset[str]]:
    reach = reach_matrix(g)
    out = []
    for k in range(len(g.vertices) + 1):
        for combo in combinations(g.vertices, k):
            s = frozenset(combo)
            hereditary = all(w in s for v in s for w in g.vertices if reach[v, w])
            saturated = all(
                v in s
                for v in g.vertices
                if [e for e in g.edges if e.src == v]
                and all(e.dst in s for e in g.edges if e.src == v)
            )
            if hereditary and saturated:
                out.append(s)
    return out


def hs_closure(g: Graph, s) -> frozenset[str]:
    s = frozenset(s)
    out = frozenset(g.vertices)
    for h in hs_sets(g):
        if s <= h:
            out &= h
    return out


def closed_walks(g: Graph, base: str, max_len: int, stop_at: int | None = None) -> list[tuple[Edge, ...]]:
    """Closed simple paths at ``base`` of length <= max_len, by exhaustive walk search."""
    reach = reach_matrix(g)
    found: list[tuple[Edge, ...]] = []

    def walk(v: str, prefix: tuple[Edge, ...]) -> None:
        if stop_at is not None and len(found) >= stop_at:
            return
        if len(prefix) == max_len:
            return
        for e in g.edges:
            if e.src != v:
                continue
            if e.dst == base:
                found.append(prefix + (e,))
            elif reach[e.dst, base]:
                walk(e.dst, prefix + (e,))

    walk(base, ())
    return found


def cycles(g: Graph) -> set[tuple[str, ...]]:
    """Cycles as rotation classes, each given by its lexicographically least rotation of edge ids."""
    n = len(g.vertices)
    out = set()
    for v in g.vertices:
        for w in closed_walks(g, v, n):
            srcs = [e.src for e in w]
            if len(set(srcs)) != len(srcs):
                continue
            ids = [e.id for e in w]
            out.add(min(tuple(ids[i:] + ids[:i]) for i in range(len(ids))))
    return out


def has_isolated_cycles(g: Graph) -> bool:
    """Literal pairwise check: at every vertex all closed simple paths leave along one edge."""
    n = len(g.vertices)
    used: dict[str, set[str]] = {v: set() for v in g.vertices}
    for v in g.vertices:
        for w in closed_walks(g, v, n):
            for e in w:
                used[e.src].add(e.id)
    return all(len(ids) <= 1 for ids in used.values())


def condition_L(g: Graph) -> bool:
    n = len(g.vertices)
    for v in g.vertices:
        for w in closed_walks(g, v, n):
            if not any(f != e for e in w for f in g.edges if f.src == e.src):
                return False
    return True


def condition_K(g: Graph) -> bool:
    # two distinct closed simple paths, if they exist, include ones of length <= 2|V|
    n = len(g.vertices)
    for v in g.vertices:
        if closed_walks(g, v, n, stop_at=1) and len(closed_walks(g, v, 2 * n, stop_at=2)) < 2:
            return False
    return True


def entry_paths(g: Graph, x: frozenset[str], max_len: int) -> list[tuple[str, ...]]:
    """Paths from outside x, staying outside until the last edge lands in x."""
    reach = reach_matrix(g)
    feeds = {v for v in g.vertices if any(reach[v, w] for w in x)}
    found = []

    def walk(v: str, prefix: tuple[str, ...]) -> None:
        if len(prefix) == max_len:
            return
        for e in g.edges:
            if e.src != v:
                continue
            if e.dst in x:
                found.append(prefix + (e.id,))
            elif e.dst in feeds:
                walk(e.dst, prefix + (e.id,))

    for v in g.vertices:
        if v not in x:
            walk(v, ())
    return found
