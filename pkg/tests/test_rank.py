from __future__ import annotations

import pytest

from lpasr.cycles import as_path
from lpasr.families import generate
from lpasr.graph import GraphError, parse_graph
from lpasr.hereditary import NotHereditarySaturated
from lpasr.rank import (
    Acyclic,
    InconclusiveError,
    RankVerdict,
    StableRank,
    WitnessCycle,
    WitnessH,
    cstar_stable_rank,
    has_pisu_quotient,
    stable_rank,
    verify_pisu_quotient,
    verify_verdict,
)


def test_verify_pisu_quotient():
    assert verify_pisu_quotient(generate("rose", 2), set())
    assert not verify_pisu_quotient(generate("loop"), set())
    assert not verify_pisu_quotient(generate("chain3"), {"v1", "v2"})
    with pytest.raises(NotHereditarySaturated):
        verify_pisu_quotient(generate("chain3"), {"v2"})


def test_has_pisu_quotient():
    for n in (2, 3, 6):
        assert has_pisu_quotient(generate("rose", n)) == frozenset()
    assert has_pisu_quotient(generate("chain3")) is None
    assert has_pisu_quotient(generate("line", 4)) is None


def test_smallest_witness():
    # the two-loop vertex b only becomes a purely infinite simple quotient after removing a
    g = parse_graph("vertices: a b\nedge p: a -> a\nedge q: b -> b * 2\nedge r: b -> a")
    assert has_pisu_quotient(g) == {"a"}


@pytest.mark.parametrize(
    "family, params, value",
    [("line", (5,), StableRank.ONE), ("rose", (3,), StableRank.INFINITE),
     ("loop", (), StableRank.TWO), ("chain3", (), StableRank.TWO),
     ("enm", (2, 3), StableRank.INFINITE)],
)
def test_stable_rank(family, params, value):
    g = generate(family, *params)
    verdict = stable_rank(g)
    assert verdict.value is value
    assert verify_verdict(g, verdict)
    kind = {StableRank.ONE: Acyclic, StableRank.TWO: WitnessCycle, StableRank.INFINITE: WitnessH}[value]
    assert isinstance(verdict.certificate, kind)


def test_cstar_stable_rank():
    assert cstar_stable_rank(generate("loop")) is StableRank.ONE
    assert cstar_stable_rank(generate("rose", 2)) is StableRank.INFINITE
    assert cstar_stable_rank(generate("line", 5)) is StableRank.ONE
    assert cstar_stable_rank(generate("chain3")) is StableRank.TWO


def test_verdict_json():
    assert stable_rank(generate("line", 2)).to_json() == {"sr": "1", "certificate": {"kind": "acyclic"}}
    assert stable_rank(generate("rose", 2)).to_json() == {
        "sr": "inf", "certificate": {"kind": "witness_h", "h": []}}
    doc = stable_rank(generate("loop")).to_json()
    assert doc == {"sr": "2", "certificate": {"kind": "witness_cycle", "cycle": ["f1"]}}
    assert "acyclic" in stable_rank(generate("line", 2)).explain()


def test_order():
    assert StableRank.ONE < StableRank.TWO < StableRank.INFINITE
    assert StableRank.TWO <= StableRank.TWO


def test_empty_graph_rejected():
    with pytest.raises(GraphError):
        stable_rank(parse_graph(""))


def test_truncation_is_inconclusive():
    with pytest.raises(InconclusiveError):
        stable_rank(generate("chain3"), cap=2)
    # a witness found before the cap is still conclusive
    assert stable_rank(generate("rose", 2), cap=1).value is StableRank.INFINITE


def test_forged_certificates_fail():
    g = generate("chain3")
    assert not verify_verdict(g, RankVerdict(StableRank.INFINITE, WitnessH(frozenset())))
    assert not verify_verdict(g, RankVerdict(StableRank.ONE, Acyclic()))
    rose = generate("rose", 2)
    assert not verify_verdict(rose, RankVerdict(StableRank.TWO, WitnessCycle(as_path(rose, ["f1"]))))
