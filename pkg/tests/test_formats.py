import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import multigraphs
from scramblenum.errors import GraphError
from scramblenum.families import k4, ll6
from scramblenum.formats import (
    FormatError,
    decomposition_from_json,
    dumps,
    graph_from_json,
    graph_from_text,
    graph_to_json,
    load_decomposition,
    load_graph,
    load_scramble,
    save_decomposition,
    save_graph,
    save_scramble,
    scramble_from_json,
    scramble_to_json,
)
from scramblenum.multigraph import Multigraph, connected_subsets
from scramblenum.scramble import Scramble
from scramblenum.screewidth import screewidth_exact


@settings(max_examples=100, deadline=None)
@given(multigraphs(max_n=8, connected=False))
def test_graph_json_roundtrip(g):
    text = dumps(graph_to_json(g))
    assert graph_from_json(json.loads(text)) == g
    assert dumps(graph_to_json(graph_from_json(json.loads(text)))) == text


def test_graph_json_is_canonical():
    g = Multigraph(3, [(2, 1, 2), (1, 0)])
    assert dumps(graph_to_json(g)) == '{"edges": [[0,1,1],[1,2,2]],"n": 3}\n'


@pytest.mark.parametrize("obj", [
    {"n": 3},
    {"n": -1, "edges": []},
    {"n": 2, "edges": [[0, 2, 1]]},
    {"n": 2, "edges": [[0, 1, 0]]},
    {"n": 2, "edges": [[0, 1, 1], [1, 0, 1]]},
    {"n": 2, "edges": [[0, 0, 1]]},
    {"n": 2, "edges": [["a", 1, 1]]},
    [1, 2],
])
def test_bad_graph_objects(obj):
    with pytest.raises(FormatError):
        graph_from_json(obj)


def test_text_edge_list():
    text = "# LL6\n0 1 2\n1 2\n2 3 2  # heavy\n3 4 1\n4 5 2\n5 0 1\n"
    assert graph_from_text(text) == ll6()


def test_text_edge_list_vertex_count_line():
    g = graph_from_text("n 4\n0 1 1\n")
    assert g.n == 4 and g.num_edges == 1


@pytest.mark.parametrize("text", ["0 1 2 3\n", "0 x\n", "0 0\n", "0 -1\n"])
def test_bad_text(text):
    with pytest.raises(FormatError):
        graph_from_text(text)


def test_load_graph_detects_format(tmp_path):
    save_graph(k4(), tmp_path / "k4.json")
    assert load_graph(tmp_path / "k4.json") == k4()
    (tmp_path / "k4.txt").write_text("\n".join(f"{u} {v} {m}" for u, v, m in k4().edges()))
    assert load_graph(tmp_path / "k4.txt") == k4()
    with pytest.raises(FormatError):
        load_graph(tmp_path / "missing.json")
    (tmp_path / "bad.json").write_text("{not json")
    with pytest.raises(FormatError):
        load_graph(tmp_path / "bad.json")


@st.composite
def scrambles(draw):
    g = draw(multigraphs(max_n=6))
    eggs = draw(st.lists(st.sampled_from(connected_subsets(g)), min_size=1, max_size=6))
    return Scramble(g, eggs)


@settings(max_examples=80, deadline=None)
@given(scrambles())
def test_scramble_roundtrip(s):
    text = dumps(scramble_to_json(s))
    assert scramble_from_json(json.loads(text)) == s
    assert dumps(scramble_to_json(scramble_from_json(json.loads(text)))) == text


def test_scramble_with_graph_path(tmp_path):
    save_graph(ll6(), tmp_path / "ll6.json")
    (tmp_path / "s.json").write_text(json.dumps({"graph": "ll6.json", "eggs": [[1, 2], [3, 4], [5, 0]]}))
    s = load_scramble(tmp_path / "s.json")
    assert s.host == ll6() and len(s) == 3
    save_scramble(s, tmp_path / "t.json")
    assert load_scramble(tmp_path / "t.json") == s


@pytest.mark.parametrize("obj", [
    {"eggs": [[0]]},
    {"graph": {"n": 2, "edges": [[0, 1, 1]]}, "eggs": []},
    {"graph": {"n": 2, "edges": [[0, 1, 1]]}, "eggs": [[0, 5]]},
    {"graph": {"n": 3, "edges": [[0, 1, 1], [1, 2, 1]]}, "eggs": [[0, 2]]},
])
def test_bad_scrambles(obj):
    with pytest.raises(FormatError):
        scramble_from_json(obj)


def test_decomposition_roundtrip(tmp_path):
    _, d = screewidth_exact(ll6())
    save_decomposition(d, tmp_path / "d.json")
    e = load_decomposition(ll6(), tmp_path / "d.json")
    assert e.bags == d.bags and e.links == d.links
    assert dumps(e.to_json()) == (tmp_path / "d.json").read_text()


@pytest.mark.parametrize("obj, exc", [
    ({"bags": {"0": [0, 1, 2, 3]}}, FormatError),
    ({"tree_links": [], "bags": {"1": [0, 1, 2, 3]}}, FormatError),
    ({"tree_links": [], "bags": {"0": [0, 0, 1, 2, 3]}}, FormatError),
    ({"tree_links": [], "bags": {"0": [0, 1, 2]}}, GraphError),
    ({"tree_links": [[0, 1]], "bags": {"0": [0, 1], "1": [1, 2, 3]}}, GraphError),
])
def test_bad_decompositions(obj, exc):
    with pytest.raises(exc):
        decomposition_from_json(k4(), obj)
