import itertools

import pytest
from hypothesis import given

from oracles import chains
from strategies import free_complexes
from z2index.complexes import (SimplicialComplex, Z2Complex, antipodal_cycle,
                               barycentric_subdivision, product, simplex)
from z2index.config import InputError
from z2index.posets import Poset, face_poset, order_complex, poset_product_witness


def test_face_poset_small():
    P = face_poset(simplex(1))
    assert len(P.elements) == 3 and len(P.covers) == 2
    tri = SimplicialComplex(range(3), [(0, 1), (1, 2), (0, 2)])
    assert len(face_poset(tri).elements) == 6


def test_face_poset_of_product_of_segments():
    P = face_poset(product(simplex(1), simplex(1)))
    assert len(P.elements) == 15


def test_poset_rejects_cycles():
    with pytest.raises(InputError):
        Poset([1, 2], [(1, 2), (2, 1)])


def test_order_complex_examples():
    anti = Poset(["a", "b", "c"], [])
    assert order_complex(anti).f_vector() == (3,)
    total = Poset.from_order([1, 2, 3], lambda x, y: x < y)
    assert order_complex(total).f_vector() == (3, 3, 1)
    path = order_complex(face_poset(simplex(1)))
    assert path.f_vector() == (3, 2)


@given(free_complexes())
def test_order_complex_counts_chains(K):
    P = face_poset(K)
    Sd = order_complex(P)
    assert Sd == barycentric_subdivision(K.complex)
    if len(P.elements) <= 14:
        less = lambda x, y: set(x) < set(y)
        expected = {}
        for c in chains(P.elements, less):
            expected[len(c)] = expected.get(len(c), 0) + 1
        assert Sd.f_vector() == tuple(expected[i] for i in sorted(expected))


def test_leq_matches_inclusion():
    P = face_poset(simplex(2))
    for x, y in itertools.product(P.elements, repeat=2):
        assert P.leq(x, y) == set(x).issubset(y)


@pytest.mark.parametrize("K,L", [
    (Z2Complex(simplex(1)), Z2Complex(simplex(1))),
    (Z2Complex(simplex(1)), antipodal_cycle(2)),
    (antipodal_cycle(2), antipodal_cycle(2)),
])
def test_witness_all_clauses(K, L):
    r = poset_product_witness(K, L)
    assert r.passed, r.failures
    assert r.elements == len(product(K, L).simplices)


def test_witness_strictness_on_c4_squared():
    K = antipodal_cycle(2)
    r = poset_product_witness(K, K)
    # a non-product simplex: the diagonal edge {(0,0),(1,1)} sits strictly inside {0,1}x{0,1}
    assert r.strict_elements > 0
    assert r.strict_example is not None
    P = product(K, K)
    diag = frozenset({(0, 0), (1, 1)})
    assert diag in P.simplices
    assert frozenset(itertools.product([0, 1], [0, 1])) in P.simplices
