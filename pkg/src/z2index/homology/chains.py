"""Simplicial chain complexes and integral homology."""

from __future__ import annotations

from dataclasses import dataclass

from ..complexes import SimplicialComplex, Z2Complex
from .snf import invariant_factors


@dataclass
class ChainData:
    """Boundary matrices of a complex, ordered by the complex's vertex order.

    ``boundary[d]`` maps d-chains to (d-1)-chains, stored sparse as
    {row: {col: +-1}} with rows indexing ``simplices[d-1]`` and columns
    ``simplices[d]``.  ``boundary[0]`` is the zero map.
    """

    simplices: list
    boundary: list

    @property
    def dims(self) -> list[int]:
        return [len(s) for s in self.simplices]

    def dense(self, d: int) -> list[list[int]]:
        rows = len(self.simplices[d - 1]) if d > 0 else 0
        cols = len(self.simplices[d])
        B = self.boundary[d]
        return [[B.get(r, {}).get(c, 0) for c in range(cols)] for r in range(rows)]

    def boundary_squares_zero(self) -> bool:
        for d in range(2, len(self.simplices)):
            inner = self.boundary[d]
            outer: dict = {}  # columns of the lower boundary
            for r, row in self.boundary[d - 1].items():
                for c, x in row.items():
                    outer.setdefault(c, {})[r] = x
            cols: dict = {}
            for r, row in inner.items():
                for c, x in row.items():
                    cols.setdefault(c, []).append((r, x))
            for c, entries in cols.items():
                acc: dict = {}
                for r, x in entries:
                    for rr, y in outer.get(r, {}).items():
                        acc[rr] = acc.get(rr, 0) + x * y
                if any(acc.values()):
                    return False
        return True


def chain_data(K) -> ChainData:
    if isinstance(K, Z2Complex):
        K = K.complex
    layers = K.by_dim()
    pos = [{s: i for i, s in enumerate(layer)} for layer in layers]
    boundary = [{}]
    for d in range(1, len(layers)):
        B: dict = {}
        faces = pos[d - 1]
        for c, s in enumerate(layers[d]):
            for i in range(len(s)):
                r = faces[s[:i] + s[i + 1:]]
                B.setdefault(r, {})[c] = -1 if i % 2 else 1
        boundary.append(B)
    cd = ChainData(layers, boundary)
    assert cd.boundary_squares_zero()
    return cd


@dataclass
class HomologyGroups:
    """Per-degree Betti numbers and torsion coefficients (invariant factors > 1)."""

    betti: list
    torsion: list
    reduced: bool = True

    def __eq__(self, other):
        if not isinstance(other, HomologyGroups) or self.reduced != other.reduced:
            return NotImplemented
        n = max(len(self.betti), len(other.betti))
        pad = lambda xs, z: list(xs) + [z] * (n - len(xs))
        strip = lambda t: [list(x) for x in t]
        return (pad(self.betti, 0) == pad(other.betti, 0)
                and strip(pad(self.torsion, [])) == strip(pad(other.torsion, [])))

    def is_trivial(self) -> bool:
        return not any(self.betti) and not any(self.torsion)

    def __str__(self):
        parts = []
        for d, (b, t) in enumerate(zip(self.betti, self.torsion)):
            terms = (["Z^%d" % b if b > 1 else "Z"] if b else []) + ["Z/%d" % x for x in t]
            parts.append(f"H{d}={' + '.join(terms) or '0'}")
        return ", ".join(parts)

    def as_json(self) -> dict:
        return {"reduced": self.reduced, "betti": list(self.betti),
                "torsion": [list(t) for t in self.torsion]}


def homology(K, reduced: bool = True) -> HomologyGroups:
    """Integral (by default reduced) homology via Smith invariants of the boundaries."""
    cd = chain_data(K)
    dims = cd.dims
    top = len(dims)
    inv = [[]] + [invariant_factors(cd.boundary[d], dims[d]) for d in range(1, top)] + [[]]
    betti = []
    torsion = []
    for d in range(top):
        rank_d = len(inv[d])
        rank_up = len(inv[d + 1])
        betti.append(dims[d] - rank_d - rank_up)
        torsion.append([x for x in inv[d + 1] if x > 1])
    if reduced and top and dims[0]:
        betti[0] -= 1
    return HomologyGroups(betti, torsion, reduced)


def sphere_homology_check(K, n: int) -> bool:
    """True iff the reduced integral homology of K is that of S^n."""
    H = homology(K, reduced=True)
    if n < 0 or n >= len(H.betti):
        return False
    return (H.betti[n] == 1 and sum(H.betti) == 1 and not any(H.torsion))
