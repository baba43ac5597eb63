from __future__ import annotations

import json

import pytest

from lpasr.families import generate
from lpasr.graph import (
    Edge,
    Graph,
    GraphError,
    ParseError,
    adjacency_matrix,
    is_acyclic,
    parse_graph,
    reaches,
    sinks,
    strongly_connected_components,
)


def test_single_loop_dsl():
    g = parse_graph("vertices: v\nedge e: v -> v")
    assert g.vertices == ("v",)
    assert g.edges == (Edge("e", "v", "v"),)


def test_line5_dsl():
    text = "vertices: v1 v2 v3 v4 v5\n" + "\n".join(f"edge v{i} -> v{i+1}" for i in range(1, 5))
    g = parse_graph(text)
    assert len(g.vertices) == 5 and len(g.edges) == 4
    assert [e.id for e in g.edges] == ["e1", "e2", "e3", "e4"]


def test_undeclared_vertex_reports_line():
    with pytest.raises(ParseError) as info:
        parse_graph("vertices: a\n# comment\nedge e: a -> b\n")
    assert info.value.line == 3
    assert "line 3" in str(info.value)


def test_syntax_error_has_position():
    with pytest.raises(ParseError) as info:
        parse_graph("vertices: a b\nedge e a => b\n")
    assert info.value.line == 2


def test_duplicate_ids_rejected():
    with pytest.raises(ParseError):
        parse_graph("vertices: a a\n")
    with pytest.raises(ParseError):
        parse_graph("vertices: a\nedge e: a -> a\nedge e: a -> a\n")
    with pytest.raises(GraphError):
        Graph(("a",), (Edge("e", "a", "b"),))


def test_multiplicity_and_comments():
    g = parse_graph("vertices: a b  # two\nvertices: c\nedge p: a -> b * 3\nedge b -> c * 2\n")
    assert g.vertices == ("a", "b", "c")
    assert [e.id for e in g.edges] == ["p_1", "p_2", "p_3", "e1", "e2"]
    assert adjacency_matrix(g) == [[0, 3, 0], [0, 0, 2], [0, 0, 0]]


def test_json_format_and_mult_default():
    doc = {"vertices": ["x", "y"], "edges": [{"id": "f", "src": "x", "dst": "y", "mult": 2},
                                             {"id": "g", "src": "y", "dst": "y"}]}
    g = parse_graph(json.dumps(doc))
    assert [e.id for e in g.edges] == ["f_1", "f_2", "g"]
    with pytest.raises(GraphError):
        parse_graph('{"vertices": ["x"], "edges": [{"id": "f", "src": "x", "dst": "z"}]}')


def test_roundtrips():
    for g in (generate("mult2"), generate("chain3"), generate("enm", 2, 3)):
        assert parse_graph(g.to_dsl()) == g
        assert parse_graph(json.dumps(g.to_json())) == g


def test_sinks():
    assert sinks(generate("line", 5)) == {"v5"}
    assert sinks(generate("rose", 3)) == set()
    assert sinks(parse_graph("vertices: a b")) == {"a", "b"}


def test_reaches():
    line3 = generate("line", 3)
    assert reaches(line3, "v1", "v3")
    assert not reaches(line3, "v3", "v1")
    assert reaches(generate("loop"), "v1", "v1")
    with pytest.raises(GraphError):
        reaches(line3, "v1", "nope")


def test_adjacency_matrix():
    assert adjacency_matrix(generate("rose", 4)) == [[4]]
    assert adjacency_matrix(generate("mult2")) == [[5, 2], [4, 3]]
    assert adjacency_matrix(parse_graph("vertices: a b")) == [[0, 0], [0, 0]]
    for g in (generate("mult2"), generate("chain3")):
        for v, row in zip(g.vertices, adjacency_matrix(g)):
            assert sum(row) == g.out_degree(v)


def test_is_acyclic():
    assert is_acyclic(generate("line", 5))
    assert not is_acyclic(generate("loop"))
    assert not is_acyclic(generate("rose", 2))


def test_scc_declaration_order():
    g = generate("chain3")
    comps = strongly_connected_components(g)
    assert sorted(map(sorted, comps)) == [["v1"], ["v2"], ["v3"]]
