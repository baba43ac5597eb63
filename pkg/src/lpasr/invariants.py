"""Seeded random graphs and the cross-module invariants checked on them.

Each invariant is a function taking a graph and raising ``AssertionError``
on a counterexample.  The ``fuzz`` subcommand and the test-suite share
this list.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterator

from . import oracles
from .cycles import (
    condition_K,
    condition_L,
    csp_based_at,
    csp_count,
    has_isolated_cycles,
    on_closed_path,
    simple_cycles,
    x0_set,
)
from .graph import Edge, Graph, is_acyclic, parse_graph, reaches
from .hereditary import (
    InfiniteWitness,
    enumerate_hs,
    entry_paths,
    hs_closure,
    hs_join,
    ideal_graph,
    is_cofinal,
    quotient_graph,
)
from .ktheory import k0_presentation
from .rank import (
    Acyclic,
    StableRank,
    WitnessCycle,
    WitnessH,
    cstar_stable_rank,
    stable_rank,
    verify_pisu_quotient,
)


def random_graph(rng: random.Random, max_vertices: int = 6, max_edges: int = 10) -> Graph:
    n = rng.randint(1, max_vertices)
    m = rng.randint(0, max_edges)
    vs = [f"v{i}" for i in range(1, n + 1)]
    edges = [Edge(f"e{i}", rng.choice(vs), rng.choice(vs)) for i in range(1, m + 1)]
    return Graph(vs, edges)


def random_graphs(seed: int, count: int, max_vertices: int = 6, max_edges: int = 10) -> Iterator[Graph]:
    rng = random.Random(seed)
    for _ in range(count):
        yield random_graph(rng, max_vertices, max_edges)


# ---------------------------------------------------------------------------
# graph core


def roundtrip(g: Graph) -> None:
    assert parse_graph(g.to_dsl()) == g, "DSL round-trip changed the graph"
    import json

    assert parse_graph(json.dumps(g.to_json())) == g, "JSON round-trip changed the graph"


def reachability(g: Graph) -> None:
    walks = oracles.reach_matrix(g)
    for v in g.vertices:
        for w in g.vertices:
            assert reaches(g, v, w) == walks[v, w], f"reaches({v}, {w}) disagrees with walk enumeration"


def acyclic_iff_no_cycles(g: Graph) -> None:
    assert is_acyclic(g) == (not simple_cycles(g))
    if is_acyclic(g):
        assert not x0_set(g)
        assert all(not csp_based_at(g, v) for v in g.vertices)


def cycle_enumeration(g: Graph) -> None:
    ours = simple_cycles(g)
    keys = set()
    for c in ours:
        assert c.is_cycle and c.base == min(c.sources), f"bad cycle {c.ids()}"
        ids = c.ids()
        keys.add(min(tuple(ids[i:] + ids[:i]) for i in range(len(ids))))
    assert len(keys) == len(ours), "a cycle is listed twice"
    assert keys == oracles.cycles(g), "cycle set differs from brute force"


# ---------------------------------------------------------------------------
# hereditary saturated sets


def closure_operator(g: Graph) -> None:
    subsets = [frozenset(c) for k in range(min(len(g), 3) + 1) for c in combinations(g.vertices, k)]
    for s in subsets:
        c = hs_closure(g, s)
        assert s <= c, "closure not extensive"
        assert hs_closure(g, c) == c, "closure not idempotent"
        for t in subsets:
            if s <= t:
                assert c <= hs_closure(g, t), "closure not monotone"


def closure_matches_lattice(g: Graph) -> None:
    for k in range(len(g) + 1):
        for combo in combinations(g.vertices, k):
            assert hs_closure(g, combo) == oracles.hs_closure(g, combo), f"hs_closure{combo}"


def lattice_matches_bruteforce(g: Graph) -> None:
    lattice = enumerate_hs(g)
    assert not lattice.truncated
    assert set(lattice.elements) == set(oracles.hs_sets(g)), "enumerate_hs differs from subset scan"
    assert frozenset() in lattice.elements and frozenset(g.vertices) in lattice.elements


def lattice_laws(g: Graph) -> None:
    elems = enumerate_hs(g).elements
    members = set(elems)
    for a in elems:
        assert hs_join(g, frozenset(), a) == a
        for b in elems:
            assert a & b in members, "intersection left the lattice"
            assert hs_join(g, a, b) == hs_join(g, b, a), "join not commutative"
            assert hs_join(g, a, a & b) == a, "absorption failed"
    for a, b, c in combinations(elems[:8], 3):
        assert hs_join(g, hs_join(g, a, b), c) == hs_join(g, a, hs_join(g, b, c)), "join not associative"


def quotient_correspondence(g: Graph) -> None:
    elems = enumerate_hs(g).elements
    for x in elems:
        q = quotient_graph(g, x)
        images = {h - x for h in elems if x <= h}
        assert images == set(oracles.hs_sets(q)), "H -> H minus X is not onto the quotient lattice"
        assert len(images) == sum(1 for h in elems if x <= h), "H -> H minus X not injective"


def cofinal_iff_two_elements(g: Graph) -> None:
    assert is_cofinal(g) == (len(oracles.hs_sets(g)) == 2)


def ideal_graph_finiteness(g: Graph) -> None:
    n = len(g)
    for x in enumerate_hs(g).elements:
        if not x:
            continue
        result = ideal_graph(g, x)
        longer = oracles.entry_paths(g, x, n + 1)
        if isinstance(result, InfiniteWitness):
            assert any(len(p) == n + 1 for p in longer), "infinite verdict but no long entry path"
            continue
        found = sorted(tuple(e.id for e in p) for p in entry_paths(g, x))
        assert found == sorted(longer), "entry paths differ from bounded enumeration"
        assert all(len(p) <= n for p in longer)
        assert len(result.vertices) == len(x) + len(found)


# ---------------------------------------------------------------------------
# cycle conditions


def conditions_match_bruteforce(g: Graph) -> None:
    assert condition_L(g) == oracles.condition_L(g), "condition (L) differs from brute force"
    assert condition_K(g) == oracles.condition_K(g), "condition (K) differs from brute force"
    if condition_K(g):
        assert condition_L(g), "(K) without (L)"


def isolated_cycles_match_bruteforce(g: Graph) -> None:
    assert has_isolated_cycles(g) == oracles.has_isolated_cycles(g)


def x0_quotient_isolated(g: Graph) -> None:
    x = hs_closure(g, x0_set(g))
    assert has_isolated_cycles(quotient_graph(g, x)), "quotient by closure of X0 has non-isolated cycles"


def isolated_means_cycles_only(g: Graph) -> None:
    if not has_isolated_cycles(g):
        return
    for v in on_closed_path(g):
        assert csp_count(g, v) == 1
        assert all(p.is_cycle for p in csp_based_at(g, v))


# ---------------------------------------------------------------------------
# stable rank


def trichotomy(g: Graph) -> None:
    verdict = stable_rank(g)
    fired = [is_acyclic(g), not is_acyclic(g) and verdict.value is StableRank.INFINITE,
             not is_acyclic(g) and verdict.value is StableRank.TWO]
    assert sum(fired) == 1, "trichotomy not exclusive"
    cert = verdict.certificate
    lattice = oracles.hs_sets(g)
    if verdict.value is StableRank.ONE:
        assert isinstance(cert, Acyclic) and is_acyclic(g)
    elif verdict.value is StableRank.INFINITE:
        assert isinstance(cert, WitnessH) and cert.h in lattice
        assert verify_pisu_quotient(g, cert.h)
    else:
        assert isinstance(cert, WitnessCycle) and cert.cycle.is_cycle
        assert cert.cycle in simple_cycles(g)
        assert not any(verify_pisu_quotient(g, h) for h in lattice)


def cstar_comparison(g: Graph) -> None:
    sr, cs = stable_rank(g).value, cstar_stable_rank(g)
    assert (sr is StableRank.INFINITE) == (cs is StableRank.INFINITE)
    if sr is StableRank.ONE:
        assert cs is StableRank.ONE
    assert cs <= sr
    assert (sr is StableRank.ONE) == is_acyclic(g)


def k0_relabel(g: Graph) -> None:
    rng = random.Random(len(g.vertices) * 7919 + len(g.edges))
    names = list(g.vertices)
    shuffled = names[:]
    rng.shuffle(shuffled)
    rename = {old: f"w{i}" for i, old in enumerate(shuffled)}
    h = Graph(
        [rename[v] for v in shuffled],
        [Edge(e.id, rename[e.src], rename[e.dst]) for e in reversed(g.edges)],
    )
    a, b = k0_presentation(g), k0_presentation(h)
    assert a.invariants() == b.invariants(), "K0 changed under relabelling"
    if a.one_free_gcd == 0:
        assert a.one_torsion_order == b.one_torsion_order, "order of [1] changed under relabelling"


@dataclass(frozen=True)
class Invariant:
    name: str
    check: Callable[[Graph], None]


INVARIANTS: tuple[Invariant, ...] = tuple(
    Invariant(f.__name__, f)
    for f in (
        roundtrip,
        reachability,
        acyclic_iff_no_cycles,
        cycle_enumeration,
        closure_operator,
        closure_matches_lattice,
        lattice_matches_bruteforce,
        lattice_laws,
        quotient_correspondence,
        cofinal_iff_two_elements,
        ideal_graph_finiteness,
        conditions_match_bruteforce,
        isolated_cycles_match_bruteforce,
        x0_quotient_isolated,
        isolated_means_cycles_only,
        trichotomy,
        cstar_comparison,
        k0_relabel,
    )
)


def check_graph(g: Graph) -> tuple[str, str] | None:
    """First failing invariant as (name, message), or None."""
    for inv in INVARIANTS:
        try:
            inv.check(g)
        except AssertionError as exc:
            return inv.name, str(exc) or "assertion failed"
    return None
