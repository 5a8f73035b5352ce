"""Named fixtures and the seeded random generator used by the verifier."""

from __future__ import annotations

import random

from .complexes import (SimplicialComplex, Z2Complex, antipodal_cycle, barycentric_subdivision,
                        crosspolytope_sphere, simplex)
from .graphs import Graph, complete_graph, cycle_graph


def segment_swap() -> Z2Complex:
    """A 1-simplex whose endpoints are swapped (not free: the edge is fixed)."""
    return Z2Complex(simplex(1), {0: 1, 1: 0})


def complexes() -> dict[str, Z2Complex]:
    return {
        "two_points": crosspolytope_sphere(0),
        "c4_antipodal": antipodal_cycle(2),
        "c6_antipodal": antipodal_cycle(3),
        "c8_antipodal": antipodal_cycle(4),
        "sd_c4_antipodal": barycentric_subdivision(antipodal_cycle(2)),
        "octahedron": crosspolytope_sphere(2),
        "simplex1": Z2Complex(simplex(1)),
    }


def graphs() -> dict[str, Graph]:
    return {
        "K2": complete_graph(2),
        "K3": complete_graph(3),
        "K4": complete_graph(4),
        "K5": complete_graph(5),
        "C5": cycle_graph(5),
    }


def default_corpus() -> list[tuple[str, object]]:
    return list(complexes().items()) + list(graphs().items())


def random_free_complex(seed: int, n: int = 2, keep: float = 0.5) -> Z2Complex:
    """Random antipodally closed subcomplex of the cross-polytope boundary S^n.

    Each antipodal pair of facets is kept with probability ``keep`` (at least
    one pair always survives); the result is free because S^n is.
    """
    rng = random.Random(seed)
    S = crosspolytope_sphere(n)
    pairs = []
    seen = set()
    for f in S.complex.maximal_simplices():
        fs = frozenset(f)
        if fs in seen:
            continue
        g = S.apply(fs)
        seen.update((fs, g))
        pairs.append((f, S.complex.sort(g)))
    chosen = [p for p in pairs if rng.random() < keep] or [pairs[rng.randrange(len(pairs))]]
    facets = [s for p in chosen for s in p]
    used = {v for s in facets for v in s}
    verts = [v for v in S.vertices if v in used]
    return Z2Complex(SimplicialComplex(verts, facets), {v: -v for v in verts})
