"""Finite abstract simplicial complexes, Z2-actions, subdivision and products.

Complexes are handed in by their facets and expanded to the full downward
closure in memory.  The position of a vertex in ``vertices`` is its rank in
the global vertex order; every sorted tuple in this module sorts by rank.
"""

from __future__ import annotations

import itertools
from typing import Hashable, Iterable, Mapping

from .config import DEFAULT, Budget, BudgetExceeded, InputError

Vertex = Hashable

# Fubini numbers: chains of non-empty faces ending at an n-vertex simplex.
_FUBINI = [1, 1]


def fubini(n: int) -> int:
    while len(_FUBINI) <= n:
        m = len(_FUBINI)
        _FUBINI.append(sum(_comb(m, j) * _FUBINI[m - j] for j in range(1, m + 1)))
    return _FUBINI[n]


def _comb(n, k):
    from math import comb
    return comb(n, k)


def _closure(facets, max_size, budget: Budget):
    out: set = set()
    limit = budget.simplices
    for f in facets:
        f = tuple(f)
        if len(f) <= max_size and frozenset(f) in out:
            continue
        for r in range(1, min(len(f), max_size) + 1):
            for sub in itertools.combinations(f, r):
                out.add(frozenset(sub))
        if len(out) > limit:
            raise BudgetExceeded("simplex count", limit)
    return out


class SimplicialComplex:
    """Downward-closed family of non-empty vertex sets.

    ``simplices`` is a frozenset of frozensets and contains every singleton.
    Pass ``closed=True`` only when the family is already downward closed.
    """

    __slots__ = ("vertices", "simplices", "_index", "_cache")

    def __init__(self, vertices: Iterable[Vertex], simplices: Iterable[Iterable] = (),
                 *, closed: bool = False, max_dim: int | None = None,
                 budget: Budget = DEFAULT):
        vertices = tuple(vertices)
        index = {v: i for i, v in enumerate(vertices)}
        if len(index) != len(vertices):
            raise InputError("duplicate vertex labels")
        facets = [frozenset(s) for s in simplices]
        for s in facets:
            bad = [v for v in s if v not in index]
            if bad:
                raise InputError(f"simplex uses unknown vertices {bad[:3]!r}")
        facets = [s for s in facets if s]
        max_size = len(vertices) if max_dim is None else max_dim + 1
        if closed:
            simp = set(s for s in facets if len(s) <= max_size)
        else:
            simp = _closure(sorted(facets, key=len, reverse=True), max_size, budget)
        simp.update(frozenset([v]) for v in vertices)
        budget.check_simplices(len(simp))
        self.vertices = vertices
        self._index = index
        self.simplices = frozenset(simp)
        self._cache: dict = {}

    # --- basic queries -------------------------------------------------
    def __contains__(self, sigma) -> bool:
        return frozenset(sigma) in self.simplices

    def __len__(self):
        return len(self.simplices)

    def __eq__(self, other):
        return isinstance(other, SimplicialComplex) and self.simplices == other.simplices

    def __hash__(self):
        return hash(self.simplices)

    def __repr__(self):
        return f"SimplicialComplex(f={self.f_vector()})"

    def index(self, v: Vertex) -> int:
        return self._index[v]

    def sort(self, sigma: Iterable) -> tuple:
        """Vertices of sigma as a tuple in global vertex order."""
        return tuple(sorted(sigma, key=self._index.__getitem__))

    def key(self, sigma) -> tuple:
        return (len(sigma), sorted(self._index[v] for v in sigma))

    @property
    def dim(self) -> int:
        return max((len(s) for s in self.simplices), default=0) - 1

    def by_dim(self) -> list[list[tuple]]:
        """Simplices per dimension as sorted tuples, each list in canonical order."""
        if "by_dim" not in self._cache:
            layers = [[] for _ in range(self.dim + 1)]
            for s in self.simplices:
                layers[len(s) - 1].append(s)
            idx = self._index
            self._cache["by_dim"] = [
                sorted((self.sort(s) for s in layer), key=lambda t: [idx[v] for v in t])
                for layer in layers
            ]
        return self._cache["by_dim"]

    def f_vector(self) -> tuple:
        return tuple(len(layer) for layer in self.by_dim())

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * n for d, n in enumerate(self.f_vector()))

    def maximal_simplices(self) -> list[tuple]:
        if "maximal" not in self._cache:
            covered = set()
            for s in self.simplices:
                if len(s) > 1:
                    covered.update(s - {v} for v in s)
            out = [self.sort(s) for s in self.simplices if s not in covered]
            out.sort(key=lambda t: (-len(t), [self._index[v] for v in t]))
            self._cache["maximal"] = out
        return self._cache["maximal"]

    def skeleton(self, d: int) -> "SimplicialComplex":
        return SimplicialComplex(self.vertices, (s for s in self.simplices if len(s) <= d + 1),
                                 closed=True)

    def induced(self, keep: Iterable[Vertex]) -> "SimplicialComplex":
        """Full subcomplex on ``keep``."""
        keep = set(keep)
        return SimplicialComplex([v for v in self.vertices if v in keep],
                                 (s for s in self.simplices if s <= keep), closed=True)

    def relabel(self, mapping: Mapping) -> "SimplicialComplex":
        return SimplicialComplex([mapping[v] for v in self.vertices],
                                 (frozenset(mapping[v] for v in s) for s in self.simplices),
                                 closed=True)

    def components(self) -> list[list]:
        parent = {v: v for v in self.vertices}

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for s in self.simplices:
            if len(s) == 2:
                a, b = s
                ra, rb = find(a), find(b)
                if ra != rb:
                    if self._index[ra] < self._index[rb]:
                        parent[rb] = ra
                    else:
                        parent[ra] = rb
        groups: dict = {}
        for v in self.vertices:
            groups.setdefault(find(v), []).append(v)
        return list(groups.values())

    def is_connected(self) -> bool:
        return len(self.components()) <= 1


class Z2Complex:
    """A simplicial complex together with a simplicial involution."""

    __slots__ = ("complex", "involution")

    def __init__(self, complex: SimplicialComplex, involution: Mapping | None = None):
        if involution is None:
            involution = {v: v for v in complex.vertices}
        involution = dict(involution)
        for v in complex.vertices:
            if v not in involution:
                raise InputError(f"involution undefined at vertex {v!r}")
            w = involution[v]
            if w not in complex._index:
                raise InputError(f"involution sends {v!r} outside the vertex set")
            if involution[w] != v:
                raise InputError(f"involution is not of order 2 at {v!r}")
        for s in complex.maximal_simplices():
            if frozenset(involution[v] for v in s) not in complex.simplices:
                raise InputError(f"involution is not simplicial on {s!r}")
        self.complex = complex
        self.involution = {v: involution[v] for v in complex.vertices}

    @property
    def vertices(self):
        return self.complex.vertices

    @property
    def simplices(self):
        return self.complex.simplices

    @property
    def dim(self):
        return self.complex.dim

    def __eq__(self, other):
        return (isinstance(other, Z2Complex) and self.complex == other.complex
                and self.involution == other.involution)

    def __hash__(self):
        return hash(self.complex)

    def __repr__(self):
        return f"Z2Complex(f={self.complex.f_vector()}, free={is_free(self)})"

    def alpha(self, v):
        return self.involution[v]

    def apply(self, sigma) -> frozenset:
        return frozenset(self.involution[v] for v in sigma)

    def relabel(self, mapping: Mapping) -> "Z2Complex":
        return Z2Complex(self.complex.relabel(mapping),
                         {mapping[v]: mapping[w] for v, w in self.involution.items()})


def as_z2(K) -> Z2Complex:
    return K if isinstance(K, Z2Complex) else Z2Complex(K)


def fixed_simplices(K: Z2Complex) -> list[tuple]:
    return sorted((K.complex.sort(s) for s in K.simplices if K.apply(s) == s),
                  key=K.complex.key)


def is_free(K: Z2Complex) -> bool:
    """True iff no simplex is mapped onto itself (setwise) by the involution."""
    return not any(K.apply(s) == s for s in K.simplices)


# --- constructors -------------------------------------------------------

def simplex(n: int) -> SimplicialComplex:
    """The full n-simplex on vertices 0..n."""
    return SimplicialComplex(range(n + 1), [range(n + 1)])


def crosspolytope_sphere(n: int) -> Z2Complex:
    """Boundary of the (n+1)-cross-polytope with v -> -v; a model of S^n.

    Vertices are 1..n+1 followed by -1..-(n+1).
    """
    if n < 0:
        raise InputError("n must be non-negative")
    pos = list(range(1, n + 2))
    verts = pos + [-i for i in pos]
    facets = [[s * i for s, i in zip(signs, pos)]
              for signs in itertools.product((1, -1), repeat=n + 1)]
    return Z2Complex(SimplicialComplex(verts, facets), {v: -v for v in verts})


def antipodal_cycle(m: int) -> Z2Complex:
    """The cycle C_{2m} on 0..2m-1 with the shift i -> i + m."""
    if m < 2:
        raise InputError("antipodal cycle needs m >= 2")
    n = 2 * m
    K = SimplicialComplex(range(n), [(i, (i + 1) % n) for i in range(n)])
    return Z2Complex(K, {i: (i + m) % n for i in range(n)})


# --- subdivision ----------------------------------------------------------

def sd_size(K: SimplicialComplex) -> int:
    """Number of simplices of Sd(K)."""
    return sum(fubini(len(s)) for s in K.simplices)


def barycentric_subdivision(K, budget: Budget = DEFAULT):
    """Sd(K): vertices are simplices of K, labelled by their sorted vertex tuple.

    Accepts a SimplicialComplex or a Z2Complex; a Z2Complex gets the induced
    involution label(sigma) -> label(alpha(sigma)).
    """
    z2 = isinstance(K, Z2Complex)
    C = K.complex if z2 else K
    size = sd_size(C)
    if size > budget.simplices:
        raise BudgetExceeded("simplex count of Sd", budget.simplices)
    idx = C._index
    verts = sorted((C.sort(s) for s in C.simplices), key=lambda t: (len(t), [idx[v] for v in t]))
    facets = []
    for top in C.maximal_simplices():
        for perm in itertools.permutations(top):
            facets.append([C.sort(perm[:j]) for j in range(1, len(perm) + 1)])
    S = SimplicialComplex(verts, facets, budget=budget)
    if not z2:
        return S
    return Z2Complex(S, {t: C.sort(K.involution[v] for v in t) for t in verts})


def sd_iter(K, k: int, budget: Budget = DEFAULT):
    for _ in range(k):
        K = barycentric_subdivision(K, budget)
    return K


# --- products and stars ---------------------------------------------------

def product(K, L, *, max_dim: int | None = None, budget: Budget = DEFAULT):
    """K x L: a vertex set is a simplex iff both projections are simplices.

    The facets are exactly sigma x tau for facets sigma, tau.  ``max_dim``
    truncates to a skeleton, which is all that is needed when only edges
    matter (Csorba's graph reads nothing above dimension 1).
    """
    z2 = isinstance(K, Z2Complex) or isinstance(L, Z2Complex)
    CK = K.complex if isinstance(K, Z2Complex) else K
    CL = L.complex if isinstance(L, Z2Complex) else L
    verts = [(v, w) for v in CK.vertices for w in CL.vertices]
    facets = [list(itertools.product(s, t))
              for s in CK.maximal_simplices() for t in CL.maximal_simplices()]
    P = SimplicialComplex(verts, facets, max_dim=max_dim, budget=budget)
    if not z2:
        return P
    a, b = as_z2(K).involution, as_z2(L).involution
    return Z2Complex(P, {(v, w): (a[v], b[w]) for v, w in verts})


def closed_star(K: SimplicialComplex, sigma) -> SimplicialComplex:
    """The subcomplex {tau : sigma | tau in K}."""
    if isinstance(K, Z2Complex):
        K = K.complex
    sigma = frozenset(sigma)
    if sigma not in K.simplices:
        raise InputError(f"{sorted(sigma, key=K.index)!r} is not a simplex")
    simp = [t for t in K.simplices if sigma | t in K.simplices]
    used = set().union(*simp)
    return SimplicialComplex([v for v in K.vertices if v in used], simp, closed=True)


def open_star(K: SimplicialComplex, sigma) -> list[tuple]:
    """Simplices containing sigma (the cells whose interiors make up the open star)."""
    if isinstance(K, Z2Complex):
        K = K.complex
    sigma = frozenset(sigma)
    return sorted((K.sort(t) for t in K.simplices if sigma <= t), key=K.key)
