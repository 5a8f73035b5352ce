"""Brute-force reference computations.  Deliberately naive and independent of
the package's search and elimination code."""

from __future__ import annotations

import itertools
from math import gcd


def brute_homs(G, H):
    """Every vertex map V(G) -> V(H) that preserves edges, by full enumeration."""
    out = []
    for imgs in itertools.product(H.vertices, repeat=len(G.vertices)):
        f = dict(zip(G.vertices, imgs))
        if all((f[v], f[w]) in H.edges for v, w in G.edges):
            out.append(imgs)
    return out


def brute_chromatic(G):
    if any((v, v) in G.edges for v in G.vertices):
        return float("inf")
    n = len(G.vertices)
    for k in range(0, n + 1):
        for cols in itertools.product(range(k), repeat=n):
            c = dict(zip(G.vertices, cols))
            if all(c[v] != c[w] for v, w in G.edges):
                return k
    raise AssertionError("unreachable")


def is_proper_coloring(G, classes):
    color = {}
    for i, cl in enumerate(classes):
        for v in cl:
            color[v] = i
    return set(color) == set(G.vertices) and all(color[v] != color[w] for v, w in G.edges)


def has_odd_cycle(G):
    """BFS 2-coloring attempt."""
    side = {}
    for s in G.vertices:
        if s in side:
            continue
        side[s] = 0
        queue = [s]
        for v in queue:
            for w in G.vertices:
                if (v, w) in G.edges:
                    if w not in side:
                        side[w] = 1 - side[v]
                        queue.append(w)
                    elif side[w] == side[v]:
                        return True
    return False


def brute_z2_maps(K, T):
    """All equivariant simplicial vertex maps K -> T by enumerating every vertex map."""
    out = []
    a, b = K.involution, T.involution
    for imgs in itertools.product(T.vertices, repeat=len(K.vertices)):
        f = dict(zip(K.vertices, imgs))
        if any(f[a[v]] != b[f[v]] for v in K.vertices):
            continue
        if all(frozenset(f[v] for v in s) in T.simplices for s in K.simplices):
            out.append(imgs)
    return out


def chains(elements, less):
    """All non-empty chains of a finite poset given by a strict order predicate."""
    out = []
    for r in range(1, len(elements) + 1):
        for combo in itertools.combinations(elements, r):
            if all(less(x, y) or less(y, x) for x, y in itertools.combinations(combo, 2)):
                out.append(combo)
    return out


def det(M):
    n = len(M)
    if n == 0:
        return 1
    total = 0
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for i, j in itertools.combinations(range(n), 2) if perm[i] > perm[j])
        p = 1
        for i in range(n):
            p *= M[i][perm[i]]
            if not p:
                break
        total += (-1) ** inv * p
    return total


def determinantal_divisors(M):
    """d_k = gcd of all k x k minors; invariant factors are d_k / d_{k-1}."""
    m = len(M)
    n = len(M[0]) if m else 0
    ds = [1]
    for k in range(1, min(m, n) + 1):
        g = 0
        for rows in itertools.combinations(range(m), k):
            for cols in itertools.combinations(range(n), k):
                g = gcd(g, det([[M[r][c] for c in cols] for r in rows]))
        if g == 0:
            break
        ds.append(g)
    return [ds[i] // ds[i - 1] for i in range(1, len(ds))]


def rank_mod_p(M, p):
    A = [[x % p for x in row] for row in M]
    rank = 0
    cols = len(A[0]) if A else 0
    for c in range(cols):
        piv = next((r for r in range(rank, len(A)) if A[r][c]), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        inv = pow(A[rank][c], -1, p)
        A[rank] = [x * inv % p for x in A[rank]]
        for r in range(len(A)):
            if r != rank and A[r][c]:
                f = A[r][c]
                A[r] = [(x - f * y) % p for x, y in zip(A[r], A[rank])]
        rank += 1
    return rank


def rank_rational(M):
    from fractions import Fraction
    A = [[Fraction(x) for x in row] for row in M]
    rank = 0
    cols = len(A[0]) if A else 0
    for c in range(cols):
        piv = next((r for r in range(rank, len(A)) if A[r][c]), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        for r in range(len(A)):
            if r != rank and A[r][c]:
                f = A[r][c] / A[rank][c]
                A[r] = [x - f * y for x, y in zip(A[r], A[rank])]
        rank += 1
    return rank
