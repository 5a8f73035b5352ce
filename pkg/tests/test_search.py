import math

import pytest
from hypothesis import given

from oracles import brute_chromatic, brute_homs, has_odd_cycle, is_proper_coloring
from strategies import graphs
from z2index.config import Budget, BudgetExceeded
from z2index.graphs import (Graph, circulant_graph, complete_graph, cycle_graph, is_homomorphism,
                            tensor_product)
from z2index.search import (chromatic_interval, chromatic_number, colorable,
                            enumerate_homomorphisms, find_homomorphism)


def test_odd_cycle_has_no_map_to_k2():
    assert find_homomorphism(cycle_graph(5), complete_graph(2)) is None


def test_k4_to_k4_is_a_bijection():
    f = find_homomorphism(complete_graph(4), complete_graph(4))
    assert f is not None and is_homomorphism(f)
    assert sorted(f.images()) == [1, 2, 3, 4]


def test_hom_counts():
    assert len(enumerate_homomorphisms(complete_graph(1), cycle_graph(5))) == 5
    assert len(enumerate_homomorphisms(complete_graph(4), complete_graph(4))) == 24
    assert enumerate_homomorphisms(complete_graph(4), complete_graph(3)) == []


def test_enumeration_is_sorted_and_matches_brute_force():
    G, H = cycle_graph(4), cycle_graph(6)
    got = [f.images() for f in enumerate_homomorphisms(G, H)]
    assert got == sorted(brute_homs(G, H))


def test_homomorphism_budget_is_not_absence():
    with pytest.raises(BudgetExceeded):
        enumerate_homomorphisms(complete_graph(5), complete_graph(5), Budget(nodes=10))


@given(graphs(max_vertices=5, loops=True), graphs(max_vertices=4, loops=True))
def test_enumeration_agrees_with_brute_force(G, H):
    homs = enumerate_homomorphisms(G, H)
    assert [f.images() for f in homs] == sorted(brute_homs(G, H))
    assert (find_homomorphism(G, H) is not None) == bool(homs)


def test_chromatic_examples():
    for n in range(1, 7):
        assert chromatic_number(complete_graph(n)) == n
    assert chromatic_number(complete_graph(0)) == 0
    assert chromatic_number(cycle_graph(5)) == 3
    assert chromatic_number(Graph([1, 2], [(1, 1), (1, 2)])) == math.inf


def test_chromatic_c8_345():
    G = circulant_graph(8, [3, 4, 5])
    assert is_proper_coloring(G, [{0, 1, 2}, {3, 4, 5}, {6, 7}])
    assert has_odd_cycle(G)
    assert brute_chromatic(G) == 3
    assert chromatic_number(G) == 3


def test_chromatic_of_square_of_k3():
    P = tensor_product(complete_graph(3), complete_graph(3))
    assert chromatic_number(P) == 3
    # diagonal copy of K3 gives the lower bound; projection the upper bound
    diag = [(i, i) for i in range(1, 4)]
    assert all(P.adjacent(x, y) for x in diag for y in diag if x != y)


def test_chromatic_budget_returns_bracket():
    G = circulant_graph(13, [1, 5])  # chi = 4, clique 3
    r = chromatic_interval(G, Budget(nodes=1))
    assert not r.exact and r.lower <= 4 <= r.upper
    with pytest.raises(BudgetExceeded) as info:
        chromatic_number(G, Budget(nodes=1))
    assert info.value.partial == r
    assert chromatic_number(G) == brute_chromatic(G) == 4


@given(graphs(max_vertices=7))
def test_chromatic_matches_brute_force(G):
    r = chromatic_interval(G)
    assert r.exact and r.lower == r.upper == brute_chromatic(G)
    if G.vertices:
        classes = {}
        for v, c in r.coloring.items():
            classes.setdefault(c, set()).add(v)
        assert len(classes) == r.upper and is_proper_coloring(G, classes.values())


@given(graphs(max_vertices=5), graphs(max_vertices=5))
def test_tensor_product_chromatic_inequality(G, H):
    assert chromatic_number(tensor_product(G, H)) <= min(chromatic_number(G), chromatic_number(H))


@given(graphs(max_vertices=7))
def test_find_hom_to_kn_iff_colorable(G):
    chi = chromatic_number(G)
    for n in range(0, 7):
        found = find_homomorphism(G, complete_graph(n))
        assert (found is not None) == (chi <= n)
        assert (colorable(G, n) is not None) == (chi <= n)
