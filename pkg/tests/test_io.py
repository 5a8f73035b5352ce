import json
import warnings

import pytest
from hypothesis import given

from conftest import FIXTURE_DIR
from strategies import free_complexes, graphs
from z2index.complexes import barycentric_subdivision, antipodal_cycle, crosspolytope_sphere
from z2index.config import InputError
from z2index.graphs import Graph, cycle_graph
from z2index.io import (dumps, io_roundtrip, load, loads, read_dimacs, to_csv, to_dot,
                        write_dimacs)
from z2index.posets import face_poset

SHIPPED = sorted(p for p in FIXTURE_DIR.iterdir() if p.suffix in (".json", ".col"))


@pytest.mark.parametrize("path", SHIPPED, ids=lambda p: p.name)
def test_round_trip_shipped_fixture(path):
    assert io_roundtrip(path) == load(path)


def test_shipped_fixtures_match_builtins():
    from z2index.fixtures import default_corpus
    for name, obj in default_corpus():
        assert load(FIXTURE_DIR / f"{name}.json") == obj


@given(free_complexes())
def test_round_trip_random_complexes(K):
    assert loads(dumps(K)) == K


@given(graphs(loops=True))
def test_round_trip_random_graphs(G):
    assert loads(dumps(G)) == G


def test_nested_labels_survive():
    S = barycentric_subdivision(barycentric_subdivision(antipodal_cycle(2)))
    assert loads(dumps(S)) == S


def test_involution_must_square_to_identity():
    text = json.dumps({"vertices": [0, 1, 2], "maximal_simplices": [[0], [1], [2]],
                       "involution": {"0": 1, "1": 2, "2": 0}})
    with pytest.raises(InputError, match="involution"):
        loads(text)


def test_involution_as_pair_list():
    text = json.dumps({"vertices": ["a", "b"], "maximal_simplices": [["a"], ["b"]],
                       "involution": [["a", "b"], ["b", "a"]]})
    K = loads(text)
    assert K.alpha("a") == "b"


def test_non_symmetric_edges_warn():
    text = json.dumps({"vertices": [0, 1], "edges": [[0, 1]]})
    with pytest.warns(UserWarning, match="symmetric"):
        G = loads(text)
    assert G.adjacent(1, 0)


def test_symmetric_edges_do_not_warn():
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        loads(json.dumps({"vertices": [0, 1], "edges": [[0, 1], [1, 0]]}))


@pytest.mark.parametrize("text,where", [
    ('{"vertices": [0, 1], "edges": [[0, 1]', "line 1"),
    ('{"vertices": 3, "edges": []}', "vertices"),
    ('{"vertices": [0], "edges": [[0, 9]]}', "edges[0]"),
    ('{"vertices": [0], "maximal_simplices": [[0, 4]]}', "maximal_simplices[0]"),
    ('{"vertices": [0, 0], "edges": []}', "duplicate"),
    ('[1, 2]', "top level"),
    ('{"vertices": []}', "neither"),
])
def test_diagnostics(text, where):
    with pytest.raises(InputError, match=where.replace("[", r"\[").replace("]", r"\]")):
        loads(text)


def test_missing_file():
    with pytest.raises(InputError):
        load(FIXTURE_DIR / "nope.json")


def test_dimacs(tmp_path):
    G = read_dimacs(FIXTURE_DIR / "C5_dimacs.col")
    assert G == cycle_graph(5).relabel({i: i + 1 for i in range(5)})
    p = tmp_path / "g.col"
    p.write_text(write_dimacs(G))
    assert read_dimacs(p) == G
    p.write_text("p edge 2 1\ne 1 x\n")
    with pytest.raises(InputError, match="line 2"):
        read_dimacs(p)


def test_dot_and_csv():
    K = antipodal_cycle(2)
    dot = to_dot(K)
    assert dot.startswith("graph K {") and dot.count("dashed") == 2
    assert to_dot(cycle_graph(3)).count("--") == 3
    assert to_dot(face_poset(crosspolytope_sphere(0))).startswith("digraph")
    rows = to_csv(K).strip().splitlines()
    assert rows[0] == "dimension,vertices" and len(rows) == 5
    assert to_csv(Graph([0, 1], [(0, 1)])).strip().splitlines() == ["source,target", "0,1"]
