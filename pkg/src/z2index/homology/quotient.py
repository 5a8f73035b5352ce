"""Orbit complexes of free involutions, the parity cocycle of the double cover,
equivariant maps to the circle, and powers of the parity class.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..complexes import SimplicialComplex, Z2Complex, is_free, sd_iter
from ..config import DEFAULT, Budget, InputError
from .snf import gf2_in_span, solve_integer


@dataclass
class QuotientData:
    """Orbit complex of Sd^2 K.

    Quotient vertices are the chosen orbit representatives (the earlier of
    v, alpha(v) in the vertex order of Sd^2 K), so ``section`` is the
    identity on labels.  ``parity[(a, b)]`` (a before b) is 1 iff the lift of
    the edge starting at a ends at alpha(b).
    """

    cover: Z2Complex
    quotient: SimplicialComplex
    parity: dict
    section: dict

    def edge_parity(self, a, b) -> int:
        Q = self.quotient
        return self.parity[(a, b) if Q.index(a) < Q.index(b) else (b, a)]

    def cocycle_defects(self) -> list:
        """Triangles on which the parity cochain fails to be a mod-2 cocycle."""
        bad = []
        for t in self.quotient.by_dim()[2] if self.quotient.dim >= 2 else []:
            a, b, c = t
            if (self.parity[(a, b)] + self.parity[(a, c)] + self.parity[(b, c)]) % 2:
                bad.append(t)
        return bad

    def loop_parity(self, path: list) -> int:
        """Parity sum along a closed edge path of quotient vertices."""
        return sum(self.edge_parity(path[i], path[i + 1]) for i in range(len(path) - 1)) % 2


def quotient_with_parity(K: Z2Complex, budget: Budget = DEFAULT, subdivisions: int = 2) -> QuotientData:
    if not is_free(K):
        raise InputError("quotient needs a free involution")
    X = sd_iter(K, subdivisions, budget)
    a = X.involution
    idx = X.complex._index
    rep = {v: v if idx[v] <= idx[a[v]] else a[v] for v in X.vertices}
    qverts = [v for v in X.vertices if rep[v] == v]
    qsimp = set()
    for s in X.simplices:
        img = frozenset(rep[v] for v in s)
        if len(img) != len(s):
            raise RuntimeError("orbit map collapses a simplex; action not regular")
        qsimp.add(img)
    if 2 * len(qsimp) != len(X.simplices):
        raise RuntimeError("quotient is not a simplicial complex at this subdivision depth")
    Q = SimplicialComplex(qverts, qsimp, closed=True)
    parity = {}
    for e in Q.by_dim()[1] if Q.dim >= 1 else []:
        x, y = e
        direct = frozenset((x, y)) in X.simplices
        crossed = frozenset((x, a[y])) in X.simplices
        if direct == crossed:
            raise RuntimeError(f"edge {e!r} does not lift uniquely")
        parity[e] = 0 if direct else 1
    return QuotientData(X, Q, parity, {v: v for v in qverts})


@dataclass
class CircleMapResult:
    exists: bool
    certificate: dict = field(default_factory=dict)
    extension: bool = False

    def __bool__(self):
        return self.exists

    def as_json(self) -> dict:
        return {"exists": self.exists, "extension": self.extension,
                "certificate": _jsonable(self.certificate)}


def _coboundary_1(Q: SimplicialComplex):
    edges = Q.by_dim()[1] if Q.dim >= 1 else []
    tris = Q.by_dim()[2] if Q.dim >= 2 else []
    epos = {e: i for i, e in enumerate(edges)}
    rows = {}
    for r, (x, y, z) in enumerate(tris):
        rows[r] = {epos[(y, z)]: 1, epos[(x, z)]: -1, epos[(x, y)]: 1}
    return edges, tris, rows


def _apply_rows(rows: dict, vec: list, n: int) -> list:
    return [sum(c * vec[j] for j, c in rows.get(r, {}).items()) for r in range(n)]


def _decide_connected(K: Z2Complex, budget: Budget) -> CircleMapResult:
    # Only the 2-skeleton matters: H^1 and the integral Bockstein in H^2 of the
    # orbit space are detected there.
    K2 = Z2Complex(K.complex.skeleton(2), K.involution) if K.dim > 2 else K
    q = quotient_with_parity(K2, budget)
    edges, tris, rows = _coboundary_1(q.quotient)
    eps = [q.parity[e] for e in edges]
    d_eps = _apply_rows(rows, eps, len(tris))
    if any(x % 2 for x in d_eps):
        raise RuntimeError("parity cochain is not a mod-2 cocycle")
    rhs = {r: -x // 2 for r, x in enumerate(d_eps) if x}
    sol = solve_integer(rows, len(edges), rhs)
    if not sol.solvable:
        return CircleMapResult(False, {"obstruction": sol.obstruction,
                                       "quotient_f_vector": q.quotient.f_vector()})
    z = [e + 2 * y for e, y in zip(eps, sol.y)]
    if any(_apply_rows(rows, z, len(tris))) or any((zi - e) % 2 for zi, e in zip(z, eps)):
        raise RuntimeError("integral lift failed verification")
    return CircleMapResult(True, {
        "cocycle": {e: zi for e, zi in zip(edges, z) if zi},
        "correction": {e: yi for e, yi in zip(edges, sol.y) if yi},
        "quotient_f_vector": q.quotient.f_vector(),
    })


def verify_circle_certificate(K: Z2Complex, result: CircleMapResult,
                              budget: Budget = DEFAULT) -> bool:
    """Recheck a yes-certificate: an integral 1-cocycle reducing to the parity cocycle."""
    if not result.exists or result.extension:
        return False
    K2 = Z2Complex(K.complex.skeleton(2), K.involution) if K.dim > 2 else K
    q = quotient_with_parity(K2, budget)
    edges, tris, rows = _coboundary_1(q.quotient)
    cocycle = result.certificate["cocycle"]
    z = [cocycle.get(e, 0) for e in edges]
    return (not any(_apply_rows(rows, z, len(tris)))
            and all((zi - q.parity[e]) % 2 == 0 for zi, e in zip(z, edges)))


def circle_map_exists(K: Z2Complex, budget: Budget = DEFAULT) -> CircleMapResult:
    """Decide whether |K| admits a Z2-map to the antipodal circle.

    A connected free K admits one iff the parity class of the double cover
    lifts to an integral class on the orbit space.  Components exchanged by
    the involution never obstruct; invariant components are decided one by
    one (reported with ``extension=True``).
    """
    if not is_free(K):
        raise InputError("circle-map decision needs a free involution")
    comps = K.complex.components()
    if len(comps) <= 1:
        return _decide_connected(K, budget)
    a = K.involution
    parts = []
    ok = True
    for comp in comps:
        cs = set(comp)
        if a[comp[0]] not in cs:
            parts.append({"component": comp[:3], "invariant": False, "exists": True})
            continue
        sub = Z2Complex(K.complex.induced(cs), {v: a[v] for v in comp})
        r = _decide_connected(sub, budget)
        parts.append({"component": comp[:3], "invariant": True, "exists": r.exists,
                      "certificate": r.certificate})
        ok = ok and r.exists
    return CircleMapResult(ok, {"components": parts}, extension=True)


def parity_power_nonzero(q: QuotientData, h: int) -> bool:
    """Whether the h-th cup power of the parity class is nonzero in H^h(quotient; Z/2).

    Cup products use the front/back face formula, so on an ordered simplex
    (v0 < ... < vh) the power evaluates to the product of the parities of
    the consecutive edges.
    """
    Q = q.quotient
    layers = Q.by_dim()
    if h == 0:
        return bool(layers)
    if h >= len(layers):
        return False
    top = layers[h]
    target = 0
    for i, s in enumerate(top):
        if all(q.parity[(s[j], s[j + 1])] for j in range(h)):
            target |= 1 << i
    if not target:
        return False
    pos = {s: i for i, s in enumerate(top)}
    cols: dict = {}
    for s in top:
        bit = 1 << pos[s]
        for j in range(len(s)):
            face = s[:j] + s[j + 1:]
            cols[face] = cols.get(face, 0) | bit
    return not gf2_in_span(list(cols.values()), target)


def w1_height(K: Z2Complex, budget: Budget = DEFAULT) -> int:
    """Largest h with (parity class)^h != 0; a certified lower bound for the Z2-index."""
    q = quotient_with_parity(K, budget)
    h = 0
    while parity_power_nonzero(q, h + 1):
        h += 1
    return h


def _jsonable(x):
    if isinstance(x, dict):
        return {(k if isinstance(k, str) else repr(k)): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x
