"""The eight acceptance criteria, each timed against its limit.

Every test prints one PASS/FAIL line (visible even under output capture).
"""

import itertools
import random
import time

import pytest

from z2index.complexes import (Z2Complex, antipodal_cycle, barycentric_subdivision,
                               crosspolytope_sphere, product, simplex)
from z2index.fixtures import complexes
from z2index.functors import box_complex, check_adjunction, check_product_preservation
from z2index.graphs import complete_graph, cycle_graph
from z2index.homology import (chain_data, circle_map_exists, homology, smith_normal_form,
                              sphere_homology_check, verify_circle_certificate)
from z2index.homology.snf import determinant, matmul
from z2index.index import chi_A_sd, hedetniemi_probe
from z2index.posets import poset_product_witness

pytestmark = pytest.mark.acceptance


@pytest.fixture
def report(capsys):
    def emit(n, title, ok, elapsed, limit, detail=""):
        passed = ok and elapsed < limit
        line = (f"ACCEPTANCE {n} {'PASS' if passed else 'FAIL'}: {title} "
                f"({elapsed:.2f}s / {limit}s){' ' + detail if detail else ''}")
        with capsys.disabled():
            print("\n" + line)
        assert ok, line
        assert elapsed < limit, line
    return emit


def test_1_adjunction_grid(report):
    t0 = time.perf_counter()
    Ks = {"two_points": crosspolytope_sphere(0), "c4": antipodal_cycle(2),
          "c6": antipodal_cycle(3), "sd_c4": barycentric_subdivision(antipodal_cycle(2))}
    Gs = {"K2": complete_graph(2), "K3": complete_graph(3), "K4": complete_graph(4),
          "C5": cycle_graph(5)}
    counts = {}
    ok = True
    for (kn, K), (gn, G) in itertools.product(Ks.items(), Gs.items()):
        r = check_adjunction(K, G)
        ok = ok and r.bijection_verified and r.lhs_count == r.rhs_count
        counts[kn, gn] = r.lhs_count
    ok = ok and counts["c4", "K3"] == 0 and counts["c4", "K4"] == 24
    ok = ok and counts["two_points", "K3"] == 6
    report(1, "adjunction bijections on the 4x4 grid", ok, time.perf_counter() - t0, 10)


def test_2_product_preservation(report):
    t0 = time.perf_counter()
    fx = complexes()
    checked = 0
    ok = True
    for (a, K), (b, L) in itertools.combinations_with_replacement(fx.items(), 2):
        if len(K.vertices) * len(L.vertices) <= 64:
            checked += 1
            ok = ok and check_product_preservation(K, L).equal
    report(2, "E(A(KxL)) = E(A(K)xA(L))", ok and checked > 0, time.perf_counter() - t0, 10,
           f"{checked} pairs")


def test_3_convergence_table(report):
    t0 = time.perf_counter()
    c4 = [chi_A_sd(antipodal_cycle(2), k).value for k in range(3)]
    s0 = [chi_A_sd(crosspolytope_sphere(0), k).value for k in range(3)]
    ok = c4 == [4, 3, 3] and s0 == [2, 2, 2]
    report(3, "chi(A(Sd^k K)) tables", ok, time.perf_counter() - t0, 60,
           f"C4 {c4}, S0 {s0}")


def test_4_box_complex_spheres(report):
    t0 = time.perf_counter()
    ok = all(sphere_homology_check(box_complex(complete_graph(n)).complex, n - 2)
             for n in (2, 3, 4, 5))
    report(4, "B(K_n) is a homology S^(n-2), n = 2..5", ok, time.perf_counter() - t0, 60)


def test_5_poset_witness(report):
    t0 = time.perf_counter()
    pool = [Z2Complex(simplex(1)), antipodal_cycle(2)]
    ok = all(poset_product_witness(K, L).passed
             for K, L in itertools.product(pool, repeat=2))
    report(5, "face-poset product witness clauses", ok, time.perf_counter() - t0, 5)


def test_6_circle_map(report):
    t0 = time.perf_counter()
    ok = True
    for m in (2, 3, 4):
        K = antipodal_cycle(m)
        r = circle_map_exists(K)
        ok = ok and r.exists and verify_circle_certificate(K, r)
    oct_ = circle_map_exists(crosspolytope_sphere(2))
    ob = oct_.certificate.get("obstruction", {})
    ok = ok and not oct_.exists and bool(ob.get("failing_indices") or
                                         ob.get("inconsistent_zero_rows"))
    C4 = antipodal_cycle(2)
    P = product(C4, crosspolytope_sphere(2))
    rp = circle_map_exists(P)
    ok = ok and rp.exists and verify_circle_certificate(P, rp) and circle_map_exists(C4).exists
    report(6, "circle-map decisions and certificates", ok, time.perf_counter() - t0, 30)


def test_7_probe(report):
    t0 = time.perf_counter()
    fx = complexes()
    ok = True
    n = 0
    for k in (0, 1):
        for (a, K), (b, L) in itertools.combinations_with_replacement(fx.items(), 2):
            r = hedetniemi_probe(K, L, k, pair_id=f"{a} x {b}")
            n += 1
            exact = r.chi_left.exact and r.chi_right.exact and r.chi_product.exact
            ok = (ok and r.expressions_equal and exact and r.verdict == "consistent"
                  and r.chi_product.upper == min(r.chi_left.upper, r.chi_right.upper))
    report(7, "product probes consistent", ok, time.perf_counter() - t0, 120, f"{n} probes")


def test_8_linear_algebra(report):
    t0 = time.perf_counter()
    rng = random.Random(8)
    ok = True
    for _ in range(1000):
        m, n = rng.randint(1, 12), rng.randint(1, 12)
        M = [[rng.randint(-20, 20) if rng.random() < 0.6 else 0 for _ in range(n)]
             for _ in range(m)]
        s = smith_normal_form(M)
        d = [x for x in s.diagonal if x]
        ok = (ok and matmul(matmul(s.U, M), s.V) == s.D
              and abs(determinant(s.U)) == 1 and abs(determinant(s.V)) == 1
              and all(b % a == 0 for a, b in zip(d, d[1:])))
    for K in complexes().values():
        ok = ok and chain_data(K).boundary_squares_zero()
        ok = ok and homology(barycentric_subdivision(K)) == homology(K)
    report(8, "SNF on 1000 matrices, dd = 0, Sd invariance", ok, time.perf_counter() - t0, 60)
