"""Batch driver running every registered check over a fixture corpus."""

from __future__ import annotations

import itertools
import logging
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .complexes import Z2Complex, barycentric_subdivision, is_free
from .config import DEFAULT, Budget, BudgetExceeded, InputError
from .fixtures import random_free_complex
from .functors import box_complex, check_adjunction, check_product_preservation, unit_map
from .graphs import Graph
from .homology import chain_data, homology, sphere_homology_check
from .io import load
from .posets import poset_product_witness

log = logging.getLogger(__name__)

MAX_PRODUCT_VERTICES = 64
MAX_WITNESS_PAIRS = 50_000


def load_corpus(directory) -> list[tuple[str, object]]:
    directory = Path(directory)
    if not directory.is_dir():
        raise InputError(f"{directory}: not a directory")
    out = []
    for p in sorted(directory.iterdir()):
        if p.suffix in (".json", ".col", ".dimacs"):
            out.append((p.stem, load(p)))
    return out


def _complete_order(G: Graph) -> int | None:
    n = len(G.vertices)
    if G.is_simple() and len(G.edges) == n * (n - 1):
        return n
    return None


def _chains(K, budget):
    return chain_data(K).boundary_squares_zero(), None


def _sd_invariance(K, budget):
    H, H1 = homology(K), homology(barycentric_subdivision(K, budget))
    return H == H1, str(H)


def _unit(K, budget):
    return unit_map(K).verify(), None


def _adjunction(K, G, budget):
    r = check_adjunction(K, G, budget)
    return r.bijection_verified, r.as_json()


def _product(K, L, budget):
    r = check_product_preservation(K, L, budget=budget)
    return r.equal, r.as_json()


def _witness(K, L, budget):
    r = poset_product_witness(K, L, budget)
    return r.passed, r.as_json()


def _sphere(G, n, budget):
    return sphere_homology_check(box_complex(G).complex, n - 2), {"sphere_dim": n - 2}


def _run(job):
    check, subjects, fn, args, budget = job
    try:
        ok, detail = fn(*args, budget)
        status = "pass" if ok else "fail"
    except BudgetExceeded as exc:
        status, detail = "budget", str(exc)
    return {"check": check, "subjects": subjects, "status": status, "detail": detail}


def verify_suite(corpus, budget: Budget = DEFAULT, seed: int | None = None,
                 random_fixtures: int = 0, jobs: int = 1) -> dict:
    """Run the theorem checks on every applicable fixture.

    Returns a JSON-ready summary; budget exhaustions are recorded as
    ``"budget"`` entries rather than failures.  With ``jobs > 1`` the checks
    run in a process pool; results keep the sequential order either way.
    """
    corpus = list(corpus)
    if random_fixtures:
        base = 0 if seed is None else seed
        for i in range(random_fixtures):
            corpus.append((f"random_{base}_{i}", random_free_complex(base + i)))
    cxs = [(n, x) for n, x in corpus if isinstance(x, Z2Complex)]
    gphs = [(n, x) for n, x in corpus if isinstance(x, Graph)]
    todo = []
    for name, K in cxs:
        todo.append(("boundary_squared_zero", [name], _chains, (K,)))
        todo.append(("homology_sd_invariance", [name], _sd_invariance, (K,)))
        if is_free(K):
            todo.append(("unit_map", [name], _unit, (K,)))
    for (kn, K), (gn, G) in itertools.product(cxs, gphs):
        todo.append(("adjunction", [kn, gn], _adjunction, (K, G)))
    for (kn, K), (ln, L) in itertools.combinations_with_replacement(cxs, 2):
        if len(K.vertices) * len(L.vertices) <= MAX_PRODUCT_VERTICES:
            todo.append(("product_preservation", [kn, ln], _product, (K, L)))
        if len(K.simplices) * len(L.simplices) <= MAX_WITNESS_PAIRS:
            todo.append(("poset_product_witness", [kn, ln], _witness, (K, L)))
    for gn, G in gphs:
        n = _complete_order(G)
        if n is not None and n >= 2:
            todo.append(("box_complex_sphere", [gn], _sphere, (G, n)))

    work = [(c, subj, fn, args, budget) for c, subj, fn, args in todo]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run, work))
    else:
        results = [_run(w) for w in work]
    for r in results:
        log.info("%s %s: %s", r["check"], r["subjects"], r["status"])

    counts = {s: sum(r["status"] == s for r in results) for s in ("pass", "fail", "budget")}
    return {"seed": seed, "fixtures": [n for n, _ in corpus], "counts": counts,
            "results": results, "ok": counts["fail"] == 0}
