import pytest
from hypothesis import given, settings

from strategies import free_complexes
from z2index.complexes import (SimplicialComplex, Z2Complex, antipodal_cycle, crosspolytope_sphere, product,
                               sd_iter)
from z2index.config import InputError
from z2index.fixtures import segment_swap
from z2index.homology import (circle_map_exists, homology, quotient_with_parity,
                              verify_circle_certificate, w1_height)


def cycle_order(C):
    """Vertices of a cycle complex in walking order."""
    edges = C.by_dim()[1]
    nbr = {v: [] for v in C.vertices}
    for a, b in edges:
        nbr[a].append(b)
        nbr[b].append(a)
    path = [C.vertices[0], nbr[C.vertices[0]][0]]
    while len(path) <= len(C.vertices):
        nxt = [w for w in nbr[path[-1]] if w != path[-2]][0]
        path.append(nxt)
    return path


def test_c8_quotient_is_a_cycle_with_odd_loop():
    q = quotient_with_parity(antipodal_cycle(4))
    Q = q.quotient
    assert Q.dim == 1 and len(Q.vertices) == len(Q.by_dim()[1]) == 16
    loop = cycle_order(Q)
    assert loop[0] == loop[-1]
    assert q.loop_parity(loop) == 1
    # lifting the loop in the cover by hand ends at the antipode of the start
    X = q.cover
    cur = loop[0]
    for nxt in loop[1:]:
        cur = nxt if frozenset((cur, nxt)) in X.simplices else X.alpha(nxt)
    assert cur == X.alpha(loop[0])


def test_octahedron_quotient_is_rp2():
    q = quotient_with_parity(crosspolytope_sphere(2))
    assert q.quotient.f_vector() == (73, 216, 144)
    H = homology(q.quotient)
    assert H.betti == [0, 0, 0] and H.torsion == [[], [2], []]
    assert q.cocycle_defects() == []


@given(free_complexes())
def test_euler_characteristic_halves(K):
    q = quotient_with_parity(K)
    assert q.cover.complex.euler_characteristic() == 2 * q.quotient.euler_characteristic()
    assert q.cocycle_defects() == []


def test_quotient_rejects_non_free():
    with pytest.raises(InputError):
        quotient_with_parity(segment_swap())
    with pytest.raises(InputError):
        circle_map_exists(segment_swap())


@pytest.mark.parametrize("m", [2, 3, 4])
def test_circle_map_on_cycles(m):
    K = antipodal_cycle(m)
    r = circle_map_exists(K)
    assert r.exists and not r.extension
    assert verify_circle_certificate(K, r)
    assert w1_height(K) == 1


def test_octahedron_has_no_circle_map():
    K = crosspolytope_sphere(2)
    r = circle_map_exists(K)
    assert not r.exists
    ob = r.certificate["obstruction"]
    assert ob["failing_indices"] or ob["inconsistent_zero_rows"]
    assert any(d not in (0, 1) for d in ob["remainder_diagonal"]) or ob["inconsistent_zero_rows"]
    assert not verify_circle_certificate(K, r)
    assert w1_height(K) == 2


def test_product_pattern():
    C4 = antipodal_cycle(2)
    P = product(C4, crosspolytope_sphere(2))
    r = circle_map_exists(P)
    assert r.exists and verify_circle_certificate(P, r)
    assert circle_map_exists(C4).exists


def test_two_points():
    K = crosspolytope_sphere(0)
    r = circle_map_exists(K)
    assert r.exists and r.extension
    assert w1_height(K) == 0


def test_disconnected_invariant_components():
    # two disjoint octahedra, each mapped to itself: obstructed
    O = crosspolytope_sphere(2)
    left = O.relabel({v: ("a", v) for v in O.vertices})
    right = O.relabel({v: ("b", v) for v in O.vertices})
    C = SimplicialComplex(left.vertices + right.vertices,
                          left.complex.maximal_simplices() + right.complex.maximal_simplices())
    both = Z2Complex(C, {**left.involution, **right.involution})
    r = circle_map_exists(both)
    assert not r.exists and r.extension


@settings(max_examples=15)
@given(free_complexes())
def test_circle_map_caps_w1(K):
    r = circle_map_exists(K)
    if K.dim <= 1:
        assert r.exists  # no 2-cells, nothing obstructs
    if r.exists:
        assert w1_height(K) <= 1


def test_sd_does_not_change_verdicts():
    K = sd_iter(antipodal_cycle(2), 1)
    assert circle_map_exists(K).exists
    assert w1_height(K) == 1
