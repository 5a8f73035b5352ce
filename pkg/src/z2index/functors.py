"""Csorba's graph A(K), the box complex B(G), and the bijection between
Hom(A(K), G) and Z2-simplicial maps K -> B(G).

B(G) is stored on the ordered edges (a, b) of G: the looped vertices of
G^{K_2} are exactly the homomorphisms K_2 -> G, i.e. ordered edges.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .complexes import SimplicialComplex, Z2Complex, as_z2, product
from .config import DEFAULT, Budget, InputError, NodeCounter
from .graphs import Graph, GraphHom, clique_complex, is_homomorphism, tensor_product
from .search import enumerate_homomorphisms


@dataclass(frozen=True)
class Z2SimplicialMap:
    source: Z2Complex
    target: Z2Complex
    map: Mapping

    def __call__(self, v):
        return self.map[v]

    def images(self) -> tuple:
        return tuple(self.map[v] for v in self.source.vertices)

    def is_simplicial(self) -> bool:
        tgt = self.target.simplices
        return all(frozenset(self.map[v] for v in s) in tgt
                   for s in self.source.complex.maximal_simplices())

    def is_equivariant(self) -> bool:
        a, b = self.source.involution, self.target.involution
        return all(self.map[a[v]] == b[self.map[v]] for v in self.source.vertices)

    def verify(self) -> bool:
        return (all(v in self.map for v in self.source.vertices)
                and all(self.map[v] in self.target.complex._index for v in self.source.vertices)
                and self.is_simplicial() and self.is_equivariant())


def csorba_A(K) -> Graph:
    """v ~ w iff {alpha(v), w} is a simplex.  v ~ alpha(v) always."""
    K = as_z2(K)
    nbr: dict = {v: {v} for v in K.vertices}
    for s in K.simplices:
        if len(s) == 2:
            x, y = s
            nbr[x].add(y)
            nbr[y].add(x)
    a = K.involution
    return Graph(K.vertices, [(v, w) for v in K.vertices for w in nbr[a[v]]])


def box_graph(G: Graph) -> Graph:
    """The looped part of G^{K_2}, on ordered edges: (a,b) ~ (c,d) iff a~d and b~c."""
    verts = G.edge_list()
    edges = []
    for a, b in verts:
        for d in G.neighbors(a):
            for c in G.neighbors(b):
                if G.adjacent(c, d):
                    edges.append(((a, b), (c, d)))
    return Graph(verts, edges)


def box_complex(G: Graph) -> Z2Complex:
    """B(G): clique complex of G^{K_2} with the edge-flip involution."""
    if not G.is_simple():
        raise InputError("box complex needs a simple graph (no loops)")
    C = clique_complex(box_graph(G))
    return Z2Complex(C, {(a, b): (b, a) for a, b in C.vertices})


def phi(f: GraphHom, K, BG: Z2Complex | None = None, verify: bool = True) -> Z2SimplicialMap:
    """Phi(f)(v) = (f(v), f(alpha(v))), a Z2-map K -> B(G) for f: A(K) -> G."""
    K = as_z2(K)
    BG = BG or box_complex(f.target)
    a = K.involution
    g = Z2SimplicialMap(K, BG, {v: (f.map[v], f.map[a[v]]) for v in K.vertices})
    if verify and not g.verify():
        raise RuntimeError("Phi produced a non-equivariant or non-simplicial map")
    return g


def psi(g: Z2SimplicialMap, G: Graph, AK: Graph | None = None,
        verify: bool = True) -> GraphHom:
    """Psi(g)(v) = first coordinate of the edge g(v)."""
    AK = AK or csorba_A(g.source)
    f = GraphHom(AK, G, {v: g.map[v][0] for v in g.source.vertices})
    if verify and not is_homomorphism(f):
        raise RuntimeError("Psi produced a non-homomorphism")
    return f


def unit_map(K) -> Z2SimplicialMap:
    """K -> B(A(K)), the image of the identity of A(K) under Phi."""
    K = as_z2(K)
    AK = csorba_A(K)
    return phi(GraphHom(AK, AK, {v: v for v in AK.vertices}), K)


def enumerate_z2_maps(K, T, budget: Budget = DEFAULT) -> list[Z2SimplicialMap]:
    """All Z2-simplicial maps K -> T, sorted by image positions.

    Branches once per involution orbit: the image of alpha(v) is forced to be
    the flip of the image of v.
    """
    K, T = as_z2(K), as_z2(T)
    a, b = K.involution, T.involution
    tv = T.vertices
    tidx = T.complex._index
    reps = []
    seen: set = set()
    for v in K.vertices:
        if v not in seen:
            reps.append(v)
            seen.update((v, a[v]))
    step = {}
    for i, v in enumerate(reps):
        step[v] = step[a[v]] = i
    checks: list[list] = [[] for _ in reps]
    tests = {s for s in K.simplices if len(s) == 2}
    tests.update(frozenset(s) for s in K.complex.maximal_simplices())
    for s in tests:
        if len(s) > 1:
            checks[max(step[v] for v in s)].append(tuple(s))
    fixed_t = [x for x in tv if b[x] == x]
    tsimp = T.simplices
    image: dict = {}
    out: list[tuple] = []
    counter = NodeCounter(budget, "Z2-map search nodes")

    def rec(i):
        if i == len(reps):
            out.append(tuple(tidx[image[v]] for v in K.vertices))
            return
        v = reps[i]
        w = a[v]
        for x in (fixed_t if w == v else tv):
            counter.tick()
            image[v] = x
            image[w] = b[x]
            if all(frozenset(image[u] for u in s) in tsimp for s in checks[i]):
                rec(i + 1)
        image.pop(v, None)
        image.pop(w, None)

    rec(0)
    out.sort()
    return [Z2SimplicialMap(K, T, {v: tv[j] for v, j in zip(K.vertices, t)}) for t in out]


@dataclass
class AdjunctionReport:
    lhs_count: int
    rhs_count: int
    bijection_verified: bool
    witness_failures: list = field(default_factory=list)

    def as_json(self) -> dict:
        return {"lhs_count": self.lhs_count, "rhs_count": self.rhs_count,
                "bijection_verified": self.bijection_verified,
                "witness_failures": self.witness_failures}


def check_adjunction(K, G: Graph, budget: Budget = DEFAULT) -> AdjunctionReport:
    """Enumerate both hom-sets and check Phi and Psi are inverse bijections."""
    K = as_z2(K)
    AK = csorba_A(K)
    BG = box_complex(G)
    lhs = enumerate_homomorphisms(AK, G, budget)
    rhs = enumerate_z2_maps(K, BG, budget)
    rhs_keys = {g.images() for g in rhs}
    fails = []
    phi_images = set()
    for f in lhs:
        g = phi(f, K, BG, verify=False)
        if not g.verify():
            fails.append({"kind": "phi_not_z2_simplicial", "f": _plain(f.images())})
        if g.images() not in rhs_keys:
            fails.append({"kind": "phi_image_not_enumerated", "f": _plain(f.images())})
        if psi(g, G, AK, verify=False).map != f.map:
            fails.append({"kind": "psi_phi_not_identity", "f": _plain(f.images())})
        phi_images.add(g.images())
    for g in rhs:
        f = psi(g, G, AK, verify=False)
        if not is_homomorphism(f):
            fails.append({"kind": "psi_not_homomorphism", "g": _plain(g.images())})
        elif phi(f, K, BG, verify=False).map != g.map:
            fails.append({"kind": "phi_psi_not_identity", "g": _plain(g.images())})
    ok = not fails and len(phi_images) == len(lhs) == len(rhs) and phi_images == rhs_keys
    return AdjunctionReport(len(lhs), len(rhs), ok, fails)


@dataclass
class ProductReport:
    vertices: int
    lhs_edges: int
    rhs_edges: int
    equal: bool
    missing: list = field(default_factory=list)
    extra: list = field(default_factory=list)
    equalizer_equal: bool | None = None

    def as_json(self) -> dict:
        return {"vertices": self.vertices, "lhs_edges": self.lhs_edges,
                "rhs_edges": self.rhs_edges, "equal": self.equal,
                "missing": _plain(self.missing[:20]), "extra": _plain(self.extra[:20]),
                "equalizer_equal": self.equalizer_equal}


def equalizer(f: Z2SimplicialMap, g: Z2SimplicialMap) -> Z2Complex:
    """Full subcomplex of the source on {v : f(v) = g(v)}; it is involution-stable."""
    K = f.source
    keep = [v for v in K.vertices if f.map[v] == g.map[v]]
    sub = K.complex.induced(keep)
    return Z2Complex(sub, {v: K.involution[v] for v in keep})


def check_product_preservation(K, L, parallel: tuple | None = None,
                               budget: Budget = DEFAULT) -> ProductReport:
    """Compare E(A(K x L)) with E(A(K) x A(L)) as labelled edge sets.

    ``parallel`` may hold a pair (f, g) of Z2-maps with common source and
    target; then A(equalizer(f, g)) is also compared with the induced
    subgraph of A(source) on the equalizing vertices.
    """
    K, L = as_z2(K), as_z2(L)
    lhs = csorba_A(product(K, L, budget=budget))
    rhs = tensor_product(csorba_A(K), csorba_A(L))
    missing = sorted(rhs.edges - lhs.edges, key=repr)
    extra = sorted(lhs.edges - rhs.edges, key=repr)
    eq = None
    if parallel is not None:
        f, g = parallel
        E = equalizer(f, g)
        eq = csorba_A(E) == csorba_A(f.source).induced_subgraph(E.vertices)
    return ProductReport(len(lhs.vertices), len(lhs.edges), len(rhs.edges),
                         not missing and not extra and set(lhs.vertices) == set(rhs.vertices),
                         missing, extra, eq)


def _plain(x):
    if isinstance(x, (tuple, list)):
        return [_plain(y) for y in x]
    return x
