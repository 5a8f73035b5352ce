"""Exact homomorphism search and chromatic numbers.

Both searches are plain backtracking over bitmask domains with forward
checking.  Branching is deterministic: the variable with the smallest domain
goes first (ties broken by vertex position) and values are tried in target
vertex order.
"""

from __future__ import annotations

import math
import sys
from contextlib import contextmanager
from dataclasses import dataclass, field

from .config import DEFAULT, Budget, BudgetExceeded, NodeCounter
from .graphs import Graph, GraphHom, is_bipartite

INF = math.inf


@contextmanager
def _deep_recursion(depth: int):
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, depth + 1000))
    try:
        yield
    finally:
        sys.setrecursionlimit(old)


def _bits(m: int):
    while m:
        low = m & -m
        yield low.bit_length() - 1
        m ^= low


def _hom_search(G: Graph, H: Graph, budget: Budget, first_only: bool):
    n = len(G.vertices)
    hv = H.vertices
    nmask = []
    looped = 0
    for j, x in enumerate(hv):
        m = 0
        for y in H.neighbors(x):
            m |= 1 << H.index(y)
        nmask.append(m)
        if m >> j & 1:
            looped |= 1 << j
    full = (1 << len(hv)) - 1
    adj = [[G.index(w) for w in G.neighbors(v) if w != v] for v in G.vertices]
    dom = [looped if G.adjacent(v, v) else full for v in G.vertices]
    found: list[tuple] = []
    if n and not all(dom):
        return found
    assign = [-1] * n
    counter = NodeCounter(budget, "homomorphism search nodes")

    def rec(left: int) -> bool:
        if left == 0:
            found.append(tuple(assign))
            return first_only
        best, bsize = -1, 1 << 30
        for v in range(n):
            if assign[v] < 0:
                s = dom[v].bit_count()
                if s < bsize:
                    best, bsize = v, s
                    if s == 1:
                        break
        v = best
        for x in _bits(dom[v]):
            counter.tick()
            nm = nmask[x]
            saved = []
            ok = True
            for u in adj[v]:
                if assign[u] < 0:
                    d = dom[u] & nm
                    if d != dom[u]:
                        saved.append((u, dom[u]))
                        dom[u] = d
                        if not d:
                            ok = False
                            break
            if ok:
                assign[v] = x
                if rec(left - 1):
                    return True
                assign[v] = -1
            for u, d in saved:
                dom[u] = d
        return False

    with _deep_recursion(n):
        rec(n)
    return found


def _as_hom(G: Graph, H: Graph, images: tuple) -> GraphHom:
    return GraphHom(G, H, {v: H.vertices[j] for v, j in zip(G.vertices, images)})


def find_homomorphism(G: Graph, H: Graph, budget: Budget = DEFAULT) -> GraphHom | None:
    """Return a homomorphism G -> H, or None when none exists.

    Raises BudgetExceeded when the node cap is hit, which is distinct from a
    definitive ``None``.
    """
    found = _hom_search(G, H, budget, first_only=True)
    return _as_hom(G, H, found[0]) if found else None


def enumerate_homomorphisms(G: Graph, H: Graph, budget: Budget = DEFAULT) -> list[GraphHom]:
    """All homomorphisms G -> H, sorted lexicographically by image positions."""
    found = sorted(_hom_search(G, H, budget, first_only=False))
    return [_as_hom(G, H, t) for t in found]


@dataclass(frozen=True)
class ChromaticResult:
    lower: float
    upper: float
    exact: bool
    coloring: dict = field(default=None, compare=False, repr=False)

    @property
    def value(self):
        if not self.exact:
            raise BudgetExceeded("chromatic number", None, self)
        return self.upper

    def as_json(self):
        enc = lambda x: "inf" if x == INF else int(x)
        return {"lower": enc(self.lower), "upper": enc(self.upper), "exact": self.exact}


def _adj_lists(G: Graph):
    return [[G.index(w) for w in G.neighbors(v)] for v in G.vertices]


def greedy_clique(G: Graph) -> list:
    """Largest clique found by greedy growth from every start vertex."""
    adj = [set(a) for a in _adj_lists(G)]
    best: list[int] = []
    for s in range(len(adj)):
        clique = [s]
        cand = set(adj[s])
        while cand:
            u = max(cand, key=lambda c: (len(adj[c] & cand), -c))
            clique.append(u)
            cand &= adj[u]
        if len(clique) > len(best):
            best = clique
    return [G.vertices[i] for i in best]


def dsatur_coloring(G: Graph) -> dict:
    """Greedy DSATUR coloring with colors 1, 2, ...; assumes G loopless."""
    adj = _adj_lists(G)
    n = len(adj)
    color = [0] * n
    seen = [set() for _ in range(n)]
    for _ in range(n):
        v = max((u for u in range(n) if not color[u]),
                key=lambda u: (len(seen[u]), len(adj[u]), -u))
        c = 1
        while c in seen[v]:
            c += 1
        color[v] = c
        for u in adj[v]:
            seen[u].add(c)
    return {G.vertices[i]: color[i] for i in range(n)}


def colorable(G: Graph, k: int, budget: Budget = DEFAULT, counter: NodeCounter | None = None):
    """Exact k-colorability test.  Returns a coloring dict (colors 1..k) or None.

    DSATUR branching with forward checking; a new color is only opened as
    max-used + 1, which removes color-permutation symmetry.
    """
    adj = _adj_lists(G)
    n = len(adj)
    if any(i in adj[i] for i in range(n)):
        return None
    if n == 0:
        return {}
    if k <= 0:
        return None
    counter = counter or NodeCounter(budget, "coloring search nodes")
    full = (1 << k) - 1
    forb = [0] * n
    color = [-1] * n
    deg = [len(a) for a in adj]

    def rec(left: int, maxc: int) -> bool:
        if left == 0:
            return True
        best, key = -1, (-1, -1)
        for v in range(n):
            if color[v] < 0:
                kv = (forb[v].bit_count(), deg[v])
                if kv > key:
                    best, key = v, kv
        v = best
        limit = min(k, maxc + 2)
        avail = ~forb[v] & ((1 << limit) - 1)
        for c in _bits(avail):
            counter.tick()
            bit = 1 << c
            saved = []
            ok = True
            for u in adj[v]:
                if color[u] < 0 and not forb[u] & bit:
                    saved.append(u)
                    forb[u] |= bit
                    if forb[u] == full:
                        ok = False
                        break
            if ok:
                color[v] = c
                if rec(left - 1, max(maxc, c)):
                    return True
                color[v] = -1
            for u in saved:
                forb[u] &= ~bit
        return False

    with _deep_recursion(n):
        if rec(n, -1):
            return {G.vertices[i]: color[i] + 1 for i in range(n)}
    return None


def chromatic_interval(G: Graph, budget: Budget = DEFAULT) -> ChromaticResult:
    """Chromatic number by iterative deepening from a lower bound.

    Lower bound: greedy clique, raised to 3 for non-bipartite graphs.  Upper
    bound: DSATUR.  Each k between them is decided exactly; a budget hit
    yields the current bracket with ``exact=False``.
    """
    if not G.is_simple():
        return ChromaticResult(INF, INF, True)
    n = len(G.vertices)
    if n == 0:
        return ChromaticResult(0, 0, True, {})
    if not G.edges:
        return ChromaticResult(1, 1, True, {v: 1 for v in G.vertices})
    if is_bipartite(G):
        return ChromaticResult(2, 2, True, _two_coloring(G))
    best = dsatur_coloring(G)
    upper = max(best.values())
    lower = max(len(greedy_clique(G)), 3)
    counter = NodeCounter(budget, "coloring search nodes")
    try:
        for k in range(lower, upper):
            col = colorable(G, k, counter=counter)
            if col is not None:
                return ChromaticResult(k, k, True, col)
            lower = k + 1
    except BudgetExceeded:
        return ChromaticResult(lower, upper, False, best)
    return ChromaticResult(upper, upper, True, best)


def chromatic_number(G: Graph, budget: Budget = DEFAULT):
    """Exact chromatic number; ``math.inf`` for graphs with a loop.

    Raises BudgetExceeded (``partial`` = the ChromaticResult bracket) if the
    search budget runs out.
    """
    return chromatic_interval(G, budget).value


def _two_coloring(G: Graph) -> dict:
    side: dict = {}
    for s in G.vertices:
        if s in side:
            continue
        side[s] = 1
        stack = [s]
        while stack:
            v = stack.pop()
            for w in G.neighbors(v):
                if w not in side:
                    side[w] = 3 - side[v]
                    stack.append(w)
    return side
