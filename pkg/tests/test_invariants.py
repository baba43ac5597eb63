"""The cross-module invariants over seeded random graphs, one test per invariant."""

from __future__ import annotations

import pytest

from lpasr import invariants
from lpasr.families import FAMILIES, generate

GRAPHS = list(invariants.random_graphs(seed=0, count=150))
NAMED = [generate(name, *{"line": (4,), "rose": (3,), "enm": (2, 3), "complete": (3,)}.get(name, ()))
         for name in FAMILIES]


@pytest.mark.parametrize("inv", invariants.INVARIANTS, ids=lambda inv: inv.name)
def test_invariant(inv):
    for g in NAMED + GRAPHS:
        try:
            inv.check(g)
        except AssertionError as exc:
            pytest.fail(f"{inv.name}: {exc}\n{g.to_dsl()}")


def test_generator_is_reproducible():
    a = [g.to_dsl() for g in invariants.random_graphs(5, 20)]
    b = [g.to_dsl() for g in invariants.random_graphs(5, 20)]
    assert a == b
    assert any(len(g.vertices) == 1 for g in invariants.random_graphs(0, 200))


def test_check_graph_names_first_failure():
    assert invariants.check_graph(generate("chain3")) is None
