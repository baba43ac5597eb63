"""Finite directed multigraphs: representation, parsing, elementary queries.

A graph is a pair of ordered lists, vertices and edges, where each edge
carries its own id so parallel edges stay distinguishable.  Vertex sets
are plain ``frozenset`` objects; :meth:`Graph.order` recovers the
declaration order when output needs to be deterministic.
"""

from __future__ import annotations

import json
import re
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

VertexSet = frozenset


class GraphError(ValueError):
    """Invalid graph data or an operation applied to a vertex not in the graph."""


class ParseError(GraphError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)


@dataclass(frozen=True)
class Edge:
    id: str
    src: str
    dst: str


@dataclass(frozen=True)
class Graph:
    vertices: tuple[str, ...]
    edges: tuple[Edge, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(
            self, "edges", tuple(e if isinstance(e, Edge) else Edge(*e) for e in self.edges)
        )
        seen: set[str] = set()
        for v in self.vertices:
            if v in seen:
                raise GraphError(f"duplicate vertex id {v!r}")
            seen.add(v)
        edge_ids: set[str] = set()
        for e in self.edges:
            if e.id in edge_ids:
                raise GraphError(f"duplicate edge id {e.id!r}")
            edge_ids.add(e.id)
            for end in (e.src, e.dst):
                if end not in seen:
                    raise GraphError(f"edge {e.id!r} references unknown vertex {end!r}")

    @cached_property
    def index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def edge_map(self) -> dict[str, Edge]:
        return {e.id: e for e in self.edges}

    @cached_property
    def _out(self) -> dict[str, tuple[Edge, ...]]:
        out: dict[str, list[Edge]] = {v: [] for v in self.vertices}
        for e in self.edges:
            out[e.src].append(e)
        return {v: tuple(es) for v, es in out.items()}

    def out_edges(self, v: str) -> tuple[Edge, ...]:
        self.check_vertex(v)
        return self._out[v]

    def out_degree(self, v: str) -> int:
        return len(self.out_edges(v))

    def successors(self, v: str) -> list[str]:
        return [e.dst for e in self.out_edges(v)]

    def check_vertex(self, v: str) -> None:
        if v not in self.index:
            raise GraphError(f"unknown vertex {v!r}")

    def check_subset(self, s: Iterable[str]) -> frozenset[str]:
        s = frozenset(s)
        for v in s:
            self.check_vertex(v)
        return s

    def order(self, s: Iterable[str]) -> tuple[str, ...]:
        """Members of ``s`` in declaration order."""
        s = set(s)
        return tuple(v for v in self.vertices if v in s)

    def __len__(self) -> int:
        return len(self.vertices)

    def to_dsl(self) -> str:
        lines = ["vertices: " + " ".join(self.vertices)] if self.vertices else []
        lines += [f"edge {e.id}: {e.src} -> {e.dst}" for e in self.edges]
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edges": [{"id": e.id, "src": e.src, "dst": e.dst} for e in self.edges],
        }


# ---------------------------------------------------------------------------
# parsing

_ID = r"[A-Za-z0-9_.\[\]'()]+"
_ID_RE = re.compile(_ID + r"\Z")
_VERTICES_RE = re.compile(r"vertices\s*:(?P<rest>.*)\Z")
_EDGE_RE = re.compile(
    rf"edge\s+(?:(?P<id>{_ID})\s*:\s*)?(?P<src>{_ID})\s*->\s*(?P<dst>{_ID})"
    rf"(?:\s*\*\s*(?P<mult>\d+))?\s*\Z"
)


def _expand(
    raw: list[tuple[str | None, str, str, int, int | None]],
    vertices: list[str],
    vertex_lines: Mapping[str, int],
) -> Graph:
    """Turn (id, src, dst, mult, line) records into a validated graph."""
    seen_v: set[str] = set()
    for v in vertices:
        if v in seen_v:
            raise ParseError(f"duplicate vertex id {v!r}", vertex_lines.get(v))
        seen_v.add(v)

    explicit: set[str] = set()
    for eid, _, _, mult, _ in raw:
        if eid is not None:
            explicit.update([eid] if mult == 1 else [f"{eid}_{i}" for i in range(1, mult + 1)])

    counter = 0
    edges: list[Edge] = []
    used: set[str] = set()
    for eid, src, dst, mult, line in raw:
        for end in (src, dst):
            if end not in seen_v:
                raise ParseError(f"edge references undeclared vertex {end!r}", line)
        if mult < 1:
            raise ParseError("edge multiplicity must be at least 1", line)
        if eid is not None:
            ids = [eid] if mult == 1 else [f"{eid}_{i}" for i in range(1, mult + 1)]
        else:
            ids = []
            for _ in range(mult):
                counter += 1
                while f"e{counter}" in explicit or f"e{counter}" in used:
                    counter += 1
                ids.append(f"e{counter}")
        for i in ids:
            if i in used:
                raise ParseError(f"duplicate edge id {i!r}", line)
            used.add(i)
            edges.append(Edge(i, src, dst))
    return Graph(tuple(vertices), tuple(edges))


def parse_dsl(text: str) -> Graph:
    vertices: list[str] = []
    vertex_lines: dict[str, int] = {}
    raw: list[tuple[str | None, str, str, int, int | None]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        content = line.split("#", 1)[0].strip()
        if not content:
            continue
        if m := _VERTICES_RE.match(content):
            for tok in m.group("rest").split():
                if not _ID_RE.match(tok):
                    col = line.index(tok) + 1
                    raise ParseError(f"invalid vertex id {tok!r}", lineno, col)
                vertices.append(tok)
                vertex_lines.setdefault(tok, lineno)
        elif m := _EDGE_RE.match(content):
            mult = int(m.group("mult")) if m.group("mult") else 1
            raw.append((m.group("id"), m.group("src"), m.group("dst"), mult, lineno))
        else:
            col = len(line) - len(line.lstrip()) + 1
            raise ParseError(f"cannot parse {content!r}", lineno, col)
    return _expand(raw, vertices, vertex_lines)


def parse_json(doc: str | Mapping) -> Graph:
    if isinstance(doc, str):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(doc, Mapping) or "vertices" not in doc:
        raise ParseError("JSON graph must be an object with a 'vertices' list")
    vertices = doc["vertices"]
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise ParseError("'vertices' must be a list of strings")
    raw = []
    for k, item in enumerate(doc.get("edges", [])):
        try:
            src, dst = item["src"], item["dst"]
        except (KeyError, TypeError):
            raise ParseError(f"edge #{k} needs 'src' and 'dst'") from None
        mult = item.get("mult", 1)
        if not isinstance(mult, int) or isinstance(mult, bool):
            raise ParseError(f"edge #{k}: 'mult' must be an integer")
        raw.append((item.get("id"), src, dst, mult, None))
    return _expand(raw, list(vertices), {})


def parse_graph(text: str) -> Graph:
    """Parse either the line-oriented DSL or the JSON form (detected by a leading ``{``)."""
    if text.lstrip().startswith("{"):
        return parse_json(text)
    return parse_dsl(text)


# ---------------------------------------------------------------------------
# elementary queries


def sinks(g: Graph) -> frozenset[str]:
    return frozenset(v for v in g.vertices if not g.out_edges(v))


def reachable_from(g: Graph, sources: Iterable[str]) -> frozenset[str]:
    """All vertices reachable from ``sources`` by paths of length >= 0."""
    seen = set(g.check_subset(sources))
    queue = deque(seen)
    while queue:
        v = queue.popleft()
        for w in g.successors(v):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return frozenset(seen)


def reaches(g: Graph, v: str, w: str) -> bool:
    g.check_vertex(w)
    return w in reachable_from(g, [v])


def adjacency_matrix(g: Graph) -> list[list[int]]:
    n = len(g.vertices)
    m = [[0] * n for _ in range(n)]
    for e in g.edges:
        m[g.index[e.src]][g.index[e.dst]] += 1
    return m


def is_acyclic(g: Graph) -> bool:
    indeg = {v: 0 for v in g.vertices}
    for e in g.edges:
        indeg[e.dst] += 1
    queue = deque(v for v, d in indeg.items() if d == 0)
    removed = 0
    while queue:
        v = queue.popleft()
        removed += 1
        for w in g.successors(v):
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    return removed == len(g.vertices)


def strongly_connected_components(g: Graph) -> list[tuple[str, ...]]:
    """Tarjan's algorithm, iterative; components listed in declaration order of their members."""
    index: dict[str, int] = {}
    low: dict[str, int] = {}
    on_stack: set[str] = set()
    stack: list[str] = []
    comps: list[tuple[str, ...]] = []
    counter = 0

    for root in g.vertices:
        if root in index:
            continue
        work = [(root, iter(g.successors(root)))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, it = work[-1]
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(g.successors(w))))
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            else:
                work.pop()
                if work:
                    low[work[-1][0]] = min(low[work[-1][0]], low[v])
                if low[v] == index[v]:
                    members = set()
                    while True:
                        w = stack.pop()
                        on_stack.discard(w)
                        members.add(w)
                        if w == v:
                            break
                    comps.append(g.order(members))
    comps.sort(key=lambda c: g.index[c[0]])
    return comps


def induced_subgraph(g: Graph, keep: Iterable[str]) -> Graph:
    keep = g.check_subset(keep)
    return Graph(
        g.order(keep),
        tuple(e for e in g.edges if e.src in keep and e.dst in keep),
    )


def find_cycle(g: Graph) -> tuple[Edge, ...] | None:
    """Some directed cycle of ``g`` as an edge sequence, or None when acyclic."""
    colour = {v: 0 for v in g.vertices}
    for root in g.vertices:
        if colour[root]:
            continue
        colour[root] = 1
        path: list[Edge] = []
        work = [(root, iter(g.out_edges(root)))]
        while work:
            v, it = work[-1]
            for e in it:
                if colour[e.dst] == 1:
                    start = next(
                        (i for i, p in enumerate(path) if p.src == e.dst), len(path)
                    )
                    return tuple(path[start:]) + (e,)
                if colour[e.dst] == 0:
                    colour[e.dst] = 1
                    path.append(e)
                    work.append((e.dst, iter(g.out_edges(e.dst))))
                    break
            else:
                colour[v] = 2
                work.pop()
                if path:
                    path.pop()
    return None
