import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from supersnark.formats import (
    ParseError,
    coloring_from_json,
    coloring_to_json,
    graph_from_json,
    graph_to_json,
    load_graph,
    parse_graph6,
    spec_from_json,
    spec_to_json,
    to_dot,
    write_graph6,
)
from supersnark.multipole import make_multipole, validate
from supersnark.oracle import find_normal_coloring

PETERSEN_G6 = "IsP@OkWHG"


def test_known_petersen_string_matches_construction(p10):
    """The classic graph6 string is the Petersen graph: 10 vertices, 15 edges,
    cubic, girth 5 pins it down without any isomorphism search."""
    m = parse_graph6(PETERSEN_G6)
    assert len(m.vertices) == 10
    assert len(m.edges) == 15
    assert all(m.degree(v) == 3 for v in m.vertices)
    from test_petersen import bfs_girth

    assert bfs_girth(m) == 5


def test_graph6_roundtrip_petersen(p10):
    s = write_graph6(p10)
    m = parse_graph6(s)
    assert len(m.vertices) == 10 and len(m.edges) == 15
    assert write_graph6(m, order=[f"v{i}" for i in range(10)]) == s


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=0, max_value=12), st.randoms())
def test_graph6_roundtrip_random(n, rng):
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = [p for p in pairs if rng.random() < 0.4]
    m = make_multipole(
        [f"v{i}" for i in range(n)],
        [(f"v{i}-v{j}", f"v{i}", f"v{j}") for i, j in chosen],
    )
    back = parse_graph6(write_graph6(m, order=[f"v{i}" for i in range(n)]))
    assert len(back.vertices) == n
    assert {frozenset((e.u, e.v)) for e in back.edges} == {
        frozenset((f"v{i}", f"v{j}")) for i, j in chosen
    }


def test_graph6_header_and_errors():
    m = parse_graph6(">>graph6<<" + PETERSEN_G6)
    assert len(m.vertices) == 10
    with pytest.raises(ParseError):
        parse_graph6("I" + "s")  # truncated body
    with pytest.raises(ParseError):
        parse_graph6("I\x10aaaaaaaa")  # byte out of range
    with pytest.raises(ParseError):
        parse_graph6("")


def test_graph6_rejects_multigraph():
    m = make_multipole(["a", "b", "c"], [("e1", "a", "b"), ("e2", "a", "b"), ("e3", "b", "c")])
    with pytest.raises(ValueError):
        write_graph6(m)


def test_graph_json_roundtrip(p10):
    back = graph_from_json(graph_to_json(p10))
    assert validate(back).ok
    assert {frozenset((e.u, e.v)) for e in back.edges} == {
        frozenset((e.u, e.v)) for e in p10.edges
    }


def test_graph_json_multiedges():
    m = graph_from_json({"vertices": ["a", "b"], "edges": [["a", "b"], ["b", "a"]]})
    assert len(m.edges) == 2
    assert len({e.id for e in m.edges}) == 2


def test_load_graph_autodetect(p10):
    assert len(load_graph(PETERSEN_G6).vertices) == 10
    assert len(load_graph(json.dumps(graph_to_json(p10))).vertices) == 10
    with pytest.raises(ParseError):
        load_graph("two\nlines")


def test_spec_json_roundtrip(p10, outer_cycle):
    obj = {
        "base": graph_to_json(p10),
        "cycle": list(outer_cycle),
        "kinds": ["A", "Aprime", "A", "A", "A"],
        "junctions": [{"p": [2, 1, 3], "d": 2}] * 5,
    }
    spec = spec_from_json(obj)
    assert spec.g == 5
    assert spec.junctions[0].p == (2, 1, 3)
    again = spec_from_json(spec_to_json(spec))
    assert again.cycle == spec.cycle
    assert again.junctions == spec.junctions


def test_spec_json_base_graph6():
    spec = spec_from_json(
        {
            "base": PETERSEN_G6,
            "cycle": ["v0", "v1"],
            "kinds": ["A", "A"],
            "junctions": [{"p": [1, 2, 3], "d": 1}] * 2,
        }
    )
    assert len(spec.base.vertices) == 10


def test_spec_json_errors():
    with pytest.raises(ParseError):
        spec_from_json({"cycle": [], "kinds": [], "junctions": []})
    with pytest.raises(ParseError):
        spec_from_json(
            {"base": PETERSEN_G6, "cycle": [], "kinds": [], "junctions": [{"p": [1, 1, 2], "d": 1}]}
        )


def test_coloring_roundtrip(p10, base_sigma):
    obj = coloring_to_json(p10, base_sigma)
    assert obj["normal"] is True
    back = coloring_from_json(p10, obj)
    assert back == base_sigma


def test_coloring_roundtrip_with_parallel_edges():
    m = make_multipole(
        ["a", "b", "c", "d"],
        [("a-b", "a", "b"), ("a-b#2", "a", "b"), ("a-c", "a", "c"), ("b-d", "b", "d"),
         ("c-d", "c", "d"), ("c-d#2", "c", "d")],
    )
    sigma = find_normal_coloring(m)
    assert sigma is not None
    back = coloring_from_json(m, coloring_to_json(m, sigma))
    # palettes agree even if parallel twins trade colors
    for v in m.vertices:
        assert {back[x] for x in m.elements_at(v)} == {sigma[x] for x in m.elements_at(v)}


def test_coloring_json_errors(p10, base_sigma):
    obj = coloring_to_json(p10, base_sigma)
    obj["edges"] = obj["edges"][:-1]
    with pytest.raises(ParseError):
        coloring_from_json(p10, obj)


def test_dot_styles_poor_edges(p10, base_sigma):
    text = to_dot(p10, base_sigma)
    assert text.startswith("graph G {")
    assert "color=red" in text and "penwidth=2.0" in text
    assert text.count(" -- ") == 15
    plain = to_dot(p10)
    assert "label" not in plain
