"""Finite posets, face posets, order complexes, and the product-poset witness."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable

from .complexes import SimplicialComplex, Z2Complex, as_z2, product
from .config import DEFAULT, Budget, BudgetExceeded, InputError


class Poset:
    """A partial order given by its covering pairs (a, b) meaning a < b, nothing between."""

    __slots__ = ("elements", "covers", "_up", "_index")

    def __init__(self, elements: Iterable[Hashable], covers: Iterable[tuple]):
        self.elements = tuple(elements)
        self._index = {x: i for i, x in enumerate(self.elements)}
        if len(self._index) != len(self.elements):
            raise InputError("duplicate poset elements")
        up: dict = {x: set() for x in self.elements}
        for a, b in covers:
            if a not in up or b not in up:
                raise InputError(f"cover ({a!r}, {b!r}) uses unknown elements")
            up[a].add(b)
        self.covers = frozenset((a, b) for a in up for b in up[a])
        self._up = {x: frozenset(s) for x, s in up.items()}
        # antisymmetry: the Hasse diagram must be acyclic
        state: dict = {}
        for x in self.elements:
            if x in state:
                continue
            stack = [(x, iter(self._up[x]))]
            state[x] = 1
            while stack:
                node, it = stack[-1]
                nxt = next(it, None)
                if nxt is None:
                    state[node] = 2
                    stack.pop()
                elif state.get(nxt) == 1:
                    raise InputError("cover relation has a cycle; not a partial order")
                elif nxt not in state:
                    state[nxt] = 1
                    stack.append((nxt, iter(self._up[nxt])))

    @classmethod
    def from_order(cls, elements, less: Callable) -> "Poset":
        """Build from a strict order predicate; covers are the unrefinable pairs."""
        elements = list(elements)
        above = {a: [b for b in elements if less(a, b)] for a in elements}
        covers = [(a, b) for a in elements for b in above[a]
                  if not any(less(c, b) for c in above[a])]
        return cls(elements, covers)

    def upper_covers(self, x) -> frozenset:
        return self._up[x]

    def strictly_above(self, x) -> set:
        seen: set = set()
        stack = list(self._up[x])
        while stack:
            y = stack.pop()
            if y not in seen:
                seen.add(y)
                stack.extend(self._up[y])
        return seen

    def leq(self, a, b) -> bool:
        return a == b or b in self.strictly_above(a)

    def minimal(self) -> list:
        below = {b for _, b in self.covers}
        return [x for x in self.elements if x not in below]

    def maximal_chains(self) -> list[tuple]:
        """Saturated chains from a minimal to a maximal element."""
        out = []
        for m in self.minimal():
            stack = [(m,)]
            while stack:
                chain = stack.pop()
                ups = self._up[chain[-1]]
                if not ups:
                    out.append(chain)
                for y in sorted(ups, key=self._index.__getitem__, reverse=True):
                    stack.append(chain + (y,))
        return out

    def __len__(self):
        return len(self.elements)


def face_poset(K) -> Poset:
    """Non-empty simplices ordered by inclusion, labelled by sorted vertex tuples."""
    if isinstance(K, Z2Complex):
        K = K.complex
    idx = K._index
    elems = sorted((K.sort(s) for s in K.simplices), key=lambda t: (len(t), [idx[v] for v in t]))
    covers = []
    for t in elems:
        if len(t) > 1:
            for i in range(len(t)):
                covers.append((t[:i] + t[i + 1:], t))
    return Poset(elems, covers)


def order_complex(P: Poset, budget: Budget = DEFAULT) -> SimplicialComplex:
    """Chains of P as simplices."""
    return SimplicialComplex(P.elements, P.maximal_chains(), budget=budget)


@dataclass
class WitnessReport:
    """Per-clause verdicts for the poset maps p: F(KxL) -> FK x FL and i back."""

    p_order_preserving: bool
    i_order_preserving: bool
    p_after_i_identity: bool
    i_after_p_geq_identity: bool
    p_equivariant: bool
    i_equivariant: bool
    elements: int = 0
    strict_elements: int = 0
    strict_example: tuple | None = None
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return (self.p_order_preserving and self.i_order_preserving and self.p_after_i_identity
                and self.i_after_p_geq_identity and self.p_equivariant and self.i_equivariant)

    def as_json(self) -> dict:
        return {
            "p_order_preserving": self.p_order_preserving,
            "i_order_preserving": self.i_order_preserving,
            "p_after_i_identity": self.p_after_i_identity,
            "i_after_p_geq_identity": self.i_after_p_geq_identity,
            "p_equivariant": self.p_equivariant,
            "i_equivariant": self.i_equivariant,
            "elements": self.elements,
            "strict_elements": self.strict_elements,
            "passed": self.passed,
            "failures": self.failures[:20],
        }


def poset_product_witness(K, L, budget: Budget = DEFAULT) -> WitnessReport:
    """Check the relations between p(sigma) = (p1 sigma, p2 sigma) and i(s, t) = s x t.

    Verifies on every element: p and i monotone, p.i = id, i.p >= id, and both
    commute with the involutions.
    """
    K, L = as_z2(K), as_z2(L)
    FK = list(K.simplices)
    FL = list(L.simplices)
    if len(FK) * len(FL) > budget.simplices:
        raise BudgetExceeded("size of FK x FL", budget.simplices)
    KL = product(K, L, budget=budget)
    FKL = KL.simplices
    a, b, ab = K.involution, L.involution, KL.involution
    fails: list = []

    def p(rho):
        return frozenset(v for v, _ in rho), frozenset(w for _, w in rho)

    def i(s, t):
        return frozenset((v, w) for v in s for w in t)

    def flip(x, inv):
        return frozenset(inv[v] for v in x)

    p_mono = True
    for rho in FKL:
        ps, pt = p(rho)
        if ps not in K.simplices or pt not in L.simplices:
            p_mono = False
            fails.append(("p lands outside FK x FL", _show(rho)))
        for x in rho:
            if len(rho) > 1:
                lo = rho - {x}
                qs, qt = p(lo)
                if not (qs <= ps and qt <= pt):
                    p_mono = False
                    fails.append(("p not monotone", _show(lo), _show(rho)))

    i_mono = True
    pi_id = True
    i_eq = True
    for s in FK:
        for t in FL:
            st = i(s, t)
            if st not in FKL:
                i_mono = False
                fails.append(("i lands outside F(KxL)", _show(s), _show(t)))
                continue
            if p(st) != (s, t):
                pi_id = False
                fails.append(("p(i(s,t)) != (s,t)", _show(s), _show(t)))
            if i(flip(s, a), flip(t, b)) != flip(st, ab):
                i_eq = False
                fails.append(("i not equivariant", _show(s), _show(t)))
            # monotone along covers of the product order
            for v in s:
                if len(s) > 1 and not i(s - {v}, t) <= st:
                    i_mono = False
            for w in t:
                if len(t) > 1 and not i(s, t - {w}) <= st:
                    i_mono = False

    ip_geq = True
    p_eq = True
    strict = 0
    example = None
    for rho in FKL:
        ps, pt = p(rho)
        back = i(ps, pt)
        if not rho <= back:
            ip_geq = False
            fails.append(("i(p(rho)) does not contain rho", _show(rho)))
        elif back != rho:
            strict += 1
            if example is None or _show(rho) < example:
                example = _show(rho)
        if p(flip(rho, ab)) != (flip(ps, a), flip(pt, b)):
            p_eq = False
            fails.append(("p not equivariant", _show(rho)))

    return WitnessReport(p_mono, i_mono, pi_id, ip_geq, p_eq, i_eq,
                         elements=len(FKL), strict_elements=strict,
                         strict_example=example, failures=fails)


def _show(s) -> tuple:
    return tuple(sorted(s, key=repr))
