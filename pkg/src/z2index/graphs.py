"""Finite graphs with a symmetric edge relation (loops allowed).

Vertex labels are opaque hashables.  The order of ``Graph.vertices`` is the
canonical order used for every deterministic tie-break in the package.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Hashable, Iterable, Mapping

from .config import DEFAULT, Budget, BudgetExceeded, InputError

Vertex = Hashable


class Graph:
    """Immutable graph.  ``edges`` holds ordered pairs and is symmetric.

    The constructor applies the symmetric closure to whatever edge list it is
    handed, so ``Graph([1, 2], [(1, 2)])`` already contains ``(2, 1)``.
    """

    __slots__ = ("vertices", "edges", "_index", "_adj")

    def __init__(self, vertices: Iterable[Vertex], edges: Iterable[tuple] = ()):
        vertices = tuple(vertices)
        index = {v: i for i, v in enumerate(vertices)}
        if len(index) != len(vertices):
            raise InputError("duplicate vertex labels")
        adj: dict = {v: set() for v in vertices}
        for e in edges:
            v, w = e
            if v not in index or w not in index:
                raise InputError(f"edge {e!r} has an endpoint outside the vertex set")
            adj[v].add(w)
            adj[w].add(v)
        self.vertices = vertices
        self._index = index
        self._adj = {v: frozenset(ns) for v, ns in adj.items()}
        self.edges = frozenset((v, w) for v, ns in self._adj.items() for w in ns)

    def __eq__(self, other):
        return (isinstance(other, Graph) and set(self.vertices) == set(other.vertices)
                and self.edges == other.edges)

    def __hash__(self):
        return hash((frozenset(self.vertices), self.edges))

    def __repr__(self):
        return f"Graph(|V|={len(self.vertices)}, |E|={len(self.edges)})"

    def __len__(self):
        return len(self.vertices)

    def index(self, v: Vertex) -> int:
        return self._index[v]

    def neighbors(self, v: Vertex) -> frozenset:
        return self._adj[v]

    def adjacent(self, v: Vertex, w: Vertex) -> bool:
        return w in self._adj[v]

    def degree(self, v: Vertex) -> int:
        return len(self._adj[v])

    def is_simple(self) -> bool:
        return not any(v in self._adj[v] for v in self.vertices)

    def edge_list(self) -> list[tuple]:
        """Ordered pairs sorted by vertex position."""
        key = self._index
        return sorted(self.edges, key=lambda e: (key[e[0]], key[e[1]]))

    def undirected_edges(self) -> list[tuple]:
        key = self._index
        return [e for e in self.edge_list() if key[e[0]] <= key[e[1]]]

    def induced_subgraph(self, keep: Iterable[Vertex]) -> "Graph":
        keep = set(keep)
        vs = [v for v in self.vertices if v in keep]
        return Graph(vs, [(v, w) for v, w in self.edges if v in keep and w in keep])

    def relabel(self, mapping: Mapping) -> "Graph":
        return Graph([mapping[v] for v in self.vertices],
                     [(mapping[v], mapping[w]) for v, w in self.edges])


@dataclass(frozen=True)
class GraphHom:
    source: Graph
    target: Graph
    map: Mapping

    def __call__(self, v):
        return self.map[v]

    def images(self) -> tuple:
        return tuple(self.map[v] for v in self.source.vertices)


def complete_graph(n: int) -> Graph:
    if n < 0:
        raise InputError("n must be non-negative")
    vs = range(1, n + 1)
    return Graph(vs, [(i, j) for i in vs for j in vs if i != j])


def cycle_graph(n: int) -> Graph:
    """The n-cycle on 0..n-1 (n >= 3)."""
    return Graph(range(n), [(i, (i + 1) % n) for i in range(n)])


def circulant_graph(n: int, jumps: Iterable[int]) -> Graph:
    jumps = list(jumps)
    return Graph(range(n), [(i, (i + j) % n) for i in range(n) for j in jumps])


def tensor_product(G: Graph, H: Graph) -> Graph:
    verts = [(v, w) for v in G.vertices for w in H.vertices]
    edges = [((v, w), (v2, w2)) for v, v2 in G.edges for w, w2 in H.edges]
    return Graph(verts, edges)


def exponential_graph(H: Graph, G: Graph, budget: Budget = DEFAULT) -> Graph:
    """The exponential graph H^G.

    A vertex is a set map V(G) -> V(H), written as the tuple of images in the
    order of ``G.vertices``.  f ~ g iff every edge (v, w) of G lands on an
    edge (f(v), g(w)) of H.
    """
    size = len(H.vertices) ** len(G.vertices)
    if size > budget.simplices:
        raise BudgetExceeded("exponential graph vertices", budget.simplices)
    gv = G.vertices
    preds = [[G.index(v) for v in G.neighbors(w)] for w in gv]
    all_h = frozenset(H.vertices)
    maps = list(itertools.product(H.vertices, repeat=len(gv)))
    edges = []
    for f in maps:
        allowed = []
        for ps in preds:
            s = all_h
            for i in ps:
                s = s & H.neighbors(f[i])
            allowed.append([h for h in H.vertices if h in s])
        edges.extend((f, g) for g in itertools.product(*allowed))
    return Graph(maps, edges)


def looped_vertices(G: Graph) -> set:
    return {v for v in G.vertices if G.adjacent(v, v)}


def is_homomorphism(f: GraphHom) -> bool:
    missing = [v for v in f.source.vertices if v not in f.map]
    if missing:
        raise InputError(f"map is undefined on {missing[:5]!r}")
    tgt = f.target
    for v, w in f.source.edges:
        a, b = f.map[v], f.map[w]
        if a not in tgt._index or not tgt.adjacent(a, b):
            return False
    return True


def is_bipartite(G: Graph) -> bool:
    side: dict = {}
    for s in G.vertices:
        if s in side:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for w in G.neighbors(v):
                if w not in side:
                    side[w] = 1 - side[v]
                    stack.append(w)
                elif side[w] == side[v]:
                    return False
    return True


def maximal_cliques(G: Graph) -> list[frozenset]:
    """Maximal looped cliques (sigma x sigma inside E(G)), Bron-Kerbosch with pivoting."""
    looped = [v for v in G.vertices if G.adjacent(v, v)]
    idx = {v: i for i, v in enumerate(looped)}
    nbr = [0] * len(looped)
    for v in looped:
        m = 0
        for w in G.neighbors(v):
            if w in idx and w != v:
                m |= 1 << idx[w]
        nbr[idx[v]] = m
    out = []

    def expand(r, p, x):
        if not p and not x:
            out.append(r)
            return
        px = p | x
        # pivot maximising |p & N(u)|
        u = max(_bits(px), key=lambda i: bin(p & nbr[i]).count("1"))
        cand = p & ~nbr[u]
        for i in _bits(cand):
            bit = 1 << i
            expand(r | bit, p & nbr[i], x & nbr[i])
            p &= ~bit
            x |= bit

    if looped:
        expand(0, (1 << len(looped)) - 1, 0)
    return [frozenset(looped[i] for i in _bits(r)) for r in out]


def clique_complex(G: Graph):
    """Simplicial complex of looped cliques; its vertices are the looped vertices of G."""
    from .complexes import SimplicialComplex

    looped = [v for v in G.vertices if G.adjacent(v, v)]
    return SimplicialComplex(looped, maximal_cliques(G))


def _bits(m: int):
    while m:
        low = m & -m
        yield low.bit_length() - 1
        m ^= low
