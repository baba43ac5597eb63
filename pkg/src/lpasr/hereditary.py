"""Hereditary saturated vertex sets and the graphs built from them.

The lattice of hereditary saturated sets indexes the graded ideals of the
path algebra.  Besides closures and lattice enumeration this module builds
the three derived graphs: the restriction to a hereditary set, the quotient
by a hereditary saturated set, and the ideal graph whose vertices are the
set itself together with the entry paths into it.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .graph import Edge, Graph, GraphError, find_cycle, induced_subgraph, reachable_from

DEFAULT_CAP = 4096


class NotHereditarySaturated(GraphError):
    pass


@dataclass(frozen=True)
class HSLattice:
    elements: tuple[frozenset[str], ...]
    truncated: bool = False

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def to_json(self) -> dict:
        return {
            "elements": [sorted(h) for h in self.elements],
            "truncated": self.truncated,
        }


@dataclass(frozen=True)
class InfiniteWitness:
    """Proof that the entry-path set is infinite: a cycle outside X that still reaches X."""

    cycle: tuple[Edge, ...]

    def to_json(self) -> dict:
        return {"infinite": True, "cycle": [e.id for e in self.cycle]}


def lattice_key(h: Iterable[str]) -> tuple:
    h = sorted(h)
    return (len(h), h)


def is_hereditary(g: Graph, s: Iterable[str]) -> bool:
    s = g.check_subset(s)
    return all(e.dst in s for e in g.edges if e.src in s)


def is_saturated(g: Graph, s: Iterable[str]) -> bool:
    s = g.check_subset(s)
    for v in g.vertices:
        out = g.out_edges(v)
        if v not in s and out and all(e.dst in s for e in out):
            return False
    return True


def is_hs(g: Graph, s: Iterable[str]) -> bool:
    return is_hereditary(g, s) and is_saturated(g, s)


def require_hs(g: Graph, s: Iterable[str]) -> frozenset[str]:
    s = g.check_subset(s)
    if not is_hs(g, s):
        raise NotHereditarySaturated(f"{sorted(s)} is not hereditary and saturated")
    return s


def hereditary_closure(g: Graph, s: Iterable[str]) -> frozenset[str]:
    return reachable_from(g, s)


def hs_closure(g: Graph, s: Iterable[str]) -> frozenset[str]:
    """Smallest hereditary saturated set containing ``s``.

    Saturating a hereditary set keeps it hereditary (a vertex is only added
    once all its edges already land inside), so one forward closure followed
    by saturation to a fixpoint suffices.
    """
    h = set(hereditary_closure(g, s))
    pending = deque(v for v in g.vertices if v not in h)
    changed = True
    while changed:
        changed = False
        for _ in range(len(pending)):
            v = pending.popleft()
            out = g.out_edges(v)
            if out and all(e.dst in h for e in out):
                h.add(v)
                changed = True
            else:
                pending.append(v)
    return frozenset(h)


def hs_join(g: Graph, a: Iterable[str], b: Iterable[str]) -> frozenset[str]:
    a, b = require_hs(g, a), require_hs(g, b)
    return hs_closure(g, a | b)


def enumerate_hs(g: Graph, cap: int = DEFAULT_CAP) -> HSLattice:
    """All hereditary saturated sets, as joins of the single-vertex closures.

    Every element is the join of the closures of its own vertices, so closing
    ``{empty} + atoms`` under joining with atoms reaches the whole lattice.
    Stops early, with ``truncated`` set, once more than ``cap`` sets turn up.
    """
    if cap < 1:
        raise ValueError("cap must be positive")
    atoms: list[frozenset[str]] = []
    for v in g.vertices:
        a = hs_closure(g, [v])
        if a not in atoms:
            atoms.append(a)
    found: set[frozenset[str]] = {frozenset()}
    queue = deque([frozenset()])
    truncated = False
    while queue and not truncated:
        x = queue.popleft()
        for a in atoms:
            if a <= x:
                continue
            j = hs_closure(g, x | a)
            if j not in found:
                found.add(j)
                queue.append(j)
                if len(found) > cap:
                    truncated = True
                    break
    elements = sorted(found, key=lattice_key)
    if truncated:
        elements = elements[:cap]
    return HSLattice(tuple(elements), truncated)


def is_cofinal(g: Graph) -> bool:
    if not g.vertices:
        raise GraphError("cofinality is undefined for the empty graph")
    everything = frozenset(g.vertices)
    return all(hs_closure(g, [v]) == everything for v in g.vertices)


def quotient_graph(g: Graph, x: Iterable[str]) -> Graph:
    x = require_hs(g, x)
    return Graph(
        tuple(v for v in g.vertices if v not in x),
        tuple(e for e in g.edges if e.dst not in x),
    )


def restriction_graph(g: Graph, h: Iterable[str]) -> Graph:
    h = g.check_subset(h)
    if not is_hereditary(g, h):
        raise GraphError(f"{sorted(h)} is not hereditary")
    return Graph(g.order(h), tuple(e for e in g.edges if e.src in h))


def _fresh(name: str, taken: set[str]) -> str:
    while name in taken:
        name += "'"
    taken.add(name)
    return name


def entry_paths(g: Graph, x: frozenset[str]) -> list[tuple[Edge, ...]]:
    """Paths starting outside ``x`` whose range is the first vertex they hit in ``x``.

    Only meaningful when the feeding region is acyclic; callers check first.
    """
    feeders = {v for v in g.vertices if v not in x} & _reaching(g, x)
    paths: list[tuple[Edge, ...]] = []

    def extend(prefix: tuple[Edge, ...], v: str) -> None:
        for e in g.out_edges(v):
            if e.dst in x:
                paths.append(prefix + (e,))
            elif e.dst in feeders:
                extend(prefix + (e,), e.dst)

    for v in g.vertices:
        if v in feeders:
            extend((), v)
    paths.sort(key=lambda p: (len(p), [g.index[p[0].src]] + [e.id for e in p]))
    return paths


def _reaching(g: Graph, x: frozenset[str]) -> set[str]:
    back: dict[str, list[str]] = {v: [] for v in g.vertices}
    for e in g.edges:
        back[e.dst].append(e.src)
    seen = set(x)
    queue = deque(x)
    while queue:
        v = queue.popleft()
        for u in back[v]:
            if u not in seen:
                seen.add(u)
                queue.append(u)
    return seen


def ideal_graph(g: Graph, x: Iterable[str], require_saturated: bool = True) -> Graph | InfiniteWitness:
    """The graph realizing the ideal generated by ``x``, or a cycle feeding ``x``.

    The construction only uses heredity; ``require_saturated=False`` admits
    hereditary sets that are not saturated.
    """
    if require_saturated:
        x = require_hs(g, x)
    else:
        x = g.check_subset(x)
        if not is_hereditary(g, x):
            raise NotHereditarySaturated(f"{sorted(x)} is not hereditary")
    if not x:
        raise GraphError("the ideal graph needs a nonempty hereditary saturated set")
    feeders = _reaching(g, x) - x
    cycle = find_cycle(induced_subgraph(g, feeders))
    if cycle is not None:
        return InfiniteWitness(cycle)

    taken = set(g.vertices) | {e.id for e in g.edges}
    vertices = list(g.order(x))
    edges = [e for e in g.edges if e.src in x]
    for path in entry_paths(g, x):
        label = ".".join(e.id for e in path)
        node = _fresh(f"path[{label}]", taken)
        vertices.append(node)
        edges.append(Edge(_fresh(f"bar[{label}]", taken), node, path[-1].dst))
    return Graph(tuple(vertices), tuple(edges))
