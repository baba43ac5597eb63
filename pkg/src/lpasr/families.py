"""Named graph families and the built-in corpus of worked examples.

Fixed encodings of the drawn example graphs:

* ``chain3`` -- v3 has one loop and one edge to v2; v2 has two loops and
  one edge to v1; v1 has one loop.  The drawing leaves the number of
  v2 -> v1 arrows ambiguous; a single edge is used.  The quotient and
  rank conclusions are the same with two.
* ``tri`` -- v1 and v3 carry a loop each, with edges both ways along
  v1 - v2 and v2 - v3.
* ``k3`` -- the complete digraph on three vertices without loops.
* ``mult2`` -- adjacency ``[[5, 2], [4, 3]]``.

The K0 values in the corpus pin these readings down.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Edge, Graph

FAMILIES = ("line", "rose", "enm", "complete", "chain3", "tri", "k3", "mult2", "loop")
_ARITY = {"line": 1, "rose": 1, "enm": 2, "complete": 1}


class FamilyError(ValueError):
    pass


def _multi(prefix: str, src: str, dst: str, k: int) -> list[Edge]:
    if k == 1:
        return [Edge(prefix, src, dst)]
    return [Edge(f"{prefix}_{i}", src, dst) for i in range(1, k + 1)]


def line(n: int) -> Graph:
    vs = [f"v{i}" for i in range(1, n + 1)]
    return Graph(vs, [Edge(f"e{i}", vs[i - 1], vs[i]) for i in range(1, n)])


def enm(n: int, m: int) -> Graph:
    """A tail of m vertices whose last vertex carries n loops."""
    tail = line(m)
    loops = [Edge(f"f{i}", f"v{m}", f"v{m}") for i in range(1, n + 1)]
    return Graph(tail.vertices, tail.edges + tuple(loops))


def rose(n: int) -> Graph:
    return enm(n, 1)


def complete(k: int) -> Graph:
    vs = [f"v{i}" for i in range(1, k + 1)]
    return Graph(
        vs,
        [Edge(f"e{i}{j}" if k < 10 else f"e{i}_{j}", vs[i - 1], vs[j - 1])
         for i in range(1, k + 1) for j in range(1, k + 1) if i != j],
    )


def chain3() -> Graph:
    return Graph(
        ["v1", "v2", "v3"],
        [
            Edge("a", "v1", "v1"),
            Edge("b1", "v2", "v2"),
            Edge("b2", "v2", "v2"),
            Edge("d", "v2", "v1"),
            Edge("c", "v3", "v3"),
            Edge("g", "v3", "v2"),
        ],
    )


def tri() -> Graph:
    return Graph(
        ["v1", "v2", "v3"],
        [
            Edge("l1", "v1", "v1"),
            Edge("a12", "v1", "v2"),
            Edge("a21", "v2", "v1"),
            Edge("a23", "v2", "v3"),
            Edge("a32", "v3", "v2"),
            Edge("l3", "v3", "v3"),
        ],
    )


def mult2() -> Graph:
    edges = (
        _multi("p", "v1", "v1", 5)
        + _multi("q", "v1", "v2", 2)
        + _multi("r", "v2", "v1", 4)
        + _multi("s", "v2", "v2", 3)
    )
    return Graph(["v1", "v2"], edges)


def generate(name: str, *params: int) -> Graph:
    if name not in FAMILIES:
        raise FamilyError(f"unknown family {name!r}; choose from {', '.join(FAMILIES)}")
    want = _ARITY.get(name, 0)
    if len(params) != want:
        raise FamilyError(f"{name} takes {want} integer parameter(s), got {len(params)}")
    if any(p < 1 for p in params):
        raise FamilyError(f"{name} parameters must be positive integers")
    if name == "line":
        return line(*params)
    if name == "rose":
        return rose(*params)
    if name == "enm":
        return enm(*params)
    if name == "complete":
        return complete(*params)
    if name == "k3":
        return complete(3)
    if name == "loop":
        return rose(1)
    return {"chain3": chain3, "tri": tri, "mult2": mult2}[name]()


def parse_family(text: str) -> tuple[str, tuple[int, ...]]:
    """``rose(3)``, ``enm(2,3)``, ``rose:3``, ``enm:2,3`` or a bare name."""
    text = text.strip()
    for open_, close in (("(", ")"), (":", "")):
        if open_ in text:
            name, _, rest = text.partition(open_)
            if close:
                if not rest.endswith(close):
                    raise FamilyError(f"malformed family {text!r}")
                rest = rest[: -len(close)]
            try:
                params = tuple(int(p) for p in rest.split(",") if p.strip())
            except ValueError:
                raise FamilyError(f"non-integer parameter in {text!r}") from None
            return name.strip(), params
    return text, ()


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    family: str
    params: tuple[int, ...] = ()
    expected: dict = field(default_factory=dict)
    note: str = ""

    def graph(self) -> Graph:
        return generate(self.family, *self.params)


def _k0(torsion, free, order, free_gcd) -> dict:
    return {"torsion": list(torsion), "free_rank": free, "one_torsion_order": order,
            "one_free_gcd": free_gcd}


CORPUS: tuple[CorpusEntry, ...] = (
    CorpusEntry("line(5)", "line", (5,), {"sr": "1", "cstar": "1", "k0": _k0([], 1, 1, 5)},
                "acyclic line; algebra is M_5(K)"),
    CorpusEntry("rose(2)", "rose", (2,), {"sr": "inf", "cstar": "inf", "k0": _k0([], 0, 1, 0)},
                "Leavitt algebra L(1,2); K0 = Z/1"),
    CorpusEntry("rose(3)", "rose", (3,), {"sr": "inf", "cstar": "inf", "k0": _k0([2], 0, 2, 0)},
                "Leavitt algebra L(1,3)"),
    CorpusEntry("rose(4)", "rose", (4,), {"sr": "inf", "k0": _k0([3], 0, 3, 0)},
                "Leavitt algebra L(1,4)"),
    CorpusEntry("rose(5)", "rose", (5,), {"sr": "inf", "k0": _k0([4], 0, 4, 0)},
                "Leavitt algebra L(1,5)"),
    CorpusEntry("loop", "loop", (), {"sr": "2", "cstar": "1", "k0": _k0([], 1, 1, 1)},
                "Laurent polynomials K[z, 1/z]; C*-completion C(T) has stable rank 1"),
    CorpusEntry("chain3", "chain3", (), {"sr": "2", "cstar": "2"},
                "stable rank 2 extension of the Laurent ring"),
    CorpusEntry("enm(2,3)", "enm", (2, 3), {"sr": "inf", "cstar": "inf"},
                "finite stage of the rose with an infinite tail; M_3(L(1,2))"),
    CorpusEntry("tri", "tri", (), {"sr": "inf", "k0": _k0([], 1, 1, 0)},
                "purely infinite simple with (K0, [1]) = (Z, 0)"),
    CorpusEntry("k3", "k3", (), {"sr": "inf", "k0": _k0([2, 2], 0, 1, 0)},
                "purely infinite simple with (K0, [1]) = (Z/2 + Z/2, 0)"),
    CorpusEntry("mult2", "mult2", (), {"sr": "inf", "k0": _k0([2], 1, 2, 1)},
                "purely infinite simple with (K0, [1]) = (Z + Z/2, (1, 1))"),
)
