from __future__ import annotations

from dataclasses import asdict, dataclass

from .cycles import condition_K, condition_L, has_isolated_cycles, x0_set
from .graph import Graph, is_acyclic, sinks
from .hereditary import DEFAULT_CAP, enumerate_hs, hs_closure, is_cofinal
from .ktheory import k0_presentation
from .rank import cstar_stable_rank, stable_rank

SCHEMA = 1


@dataclass(frozen=True)
class Report:
    vertices: int
    edges: int
    sinks: list[str]
    acyclic: bool
    cofinal: bool
    condition_L: bool
    condition_K: bool
    isolated_cycles: bool
    x0: list[str]
    x0_closure: list[str]
    lattice_size: int
    lattice_truncated: bool
    rank: dict
    explanation: str
    cstar: str
    k0: dict

    def to_json(self) -> dict:
        return {"schema": SCHEMA, **asdict(self)}

    @classmethod
    def from_json(cls, doc: dict) -> Report:
        doc = dict(doc)
        if doc.pop("schema", SCHEMA) != SCHEMA:
            raise ValueError("unsupported report schema")
        return cls(**doc)

    def table(self) -> str:
        yn = lambda b: "yes" if b else "no"  # noqa: E731
        k0 = self.k0
        group = " + ".join([f"Z/{d}" for d in k0["torsion"]] + ["Z"] * k0["free_rank"]) or "0"
        rows = [
            ("vertices / edges", f"{self.vertices} / {self.edges}"),
            ("sinks", " ".join(self.sinks) or "-"),
            ("acyclic", yn(self.acyclic)),
            ("cofinal", yn(self.cofinal)),
            ("condition (L)", yn(self.condition_L)),
            ("condition (K)", yn(self.condition_K)),
            ("isolated cycles", yn(self.isolated_cycles)),
            ("X0", " ".join(self.x0) or "-"),
            ("closure of X0", " ".join(self.x0_closure) or "-"),
            ("lattice size", f"{self.lattice_size}{' (truncated)' if self.lattice_truncated else ''}"),
            ("sr(L(E))", self.rank["sr"]),
            ("sr(C*(E))", self.cstar),
            ("K0", group),
            ("[1] coordinates", " ".join(map(str, k0["one_class"])) or "-"),
            ("[1] torsion order / free gcd", f"{k0['one_torsion_order']} / {k0['one_free_gcd']}"),
        ]
        width = max(len(k) for k, _ in rows)
        lines = [f"{k.ljust(width)}  {v}" for k, v in rows]
        lines.append("")
        lines.append(self.explanation)
        return "\n".join(lines)


def build_report(g: Graph, cap: int = DEFAULT_CAP) -> Report:
    """Compute every invariant of a nonempty graph.  Raises InconclusiveError on lattice truncation."""
    verdict = stable_rank(g, cap)
    lattice = enumerate_hs(g, cap)
    x0 = x0_set(g)
    return Report(
        vertices=len(g.vertices),
        edges=len(g.edges),
        sinks=list(g.order(sinks(g))),
        acyclic=is_acyclic(g),
        cofinal=is_cofinal(g),
        condition_L=condition_L(g),
        condition_K=condition_K(g),
        isolated_cycles=has_isolated_cycles(g),
        x0=list(g.order(x0)),
        x0_closure=list(g.order(hs_closure(g, x0))),
        lattice_size=len(lattice),
        lattice_truncated=lattice.truncated,
        rank=verdict.to_json(),
        explanation=verdict.explain(),
        cstar=cstar_stable_rank(g, cap).value,
        k0=k0_presentation(g).to_json(),
    )
