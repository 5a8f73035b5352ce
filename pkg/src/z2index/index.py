"""Z2-index bounds from chromatic numbers of A(Sd^k K), and product probes.

A homomorphism A(Sd^k K) -> K_n is the same thing as a Z2-simplicial map
Sd^k K -> B(K_n), and B(K_n) is a homology (n-2)-sphere, so every k gives
ind(K) <= chi(A(Sd^k K)) - 2.  Lower bounds come from the parity class.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field

from .complexes import Z2Complex, as_z2, is_free, product, sd_iter
from .config import DEFAULT, Budget, BudgetExceeded
from .functors import csorba_A
from .graphs import tensor_product
from .homology.quotient import circle_map_exists, w1_height
from .search import ChromaticResult, chromatic_interval

log = logging.getLogger(__name__)
INF = math.inf


def chi_A_sd(K, k: int, budget: Budget = DEFAULT) -> ChromaticResult:
    """chi(A(Sd^k K)), exact or bracketed when the search budget runs out."""
    return chromatic_interval(csorba_A(sd_iter(as_z2(K), k, budget)), budget)


def _num(x):
    return "inf" if x == INF else x


@dataclass
class IndexReport:
    complex_id: str
    free: bool
    table: list = field(default_factory=list)
    ind_upper: float = INF
    ind_lower: float = 0
    w1_height: int | None = None
    circle_map: bool | None = None
    converged: bool = False
    notes: list = field(default_factory=list)
    seed: int | None = None

    @property
    def determined(self) -> bool:
        return self.ind_lower == self.ind_upper

    def as_json(self) -> dict:
        return {
            "complex": self.complex_id, "free": self.free, "seed": self.seed,
            "table": self.table, "ind_upper": _num(self.ind_upper),
            "ind_lower": _num(self.ind_lower), "w1_height": self.w1_height,
            "circle_map": self.circle_map, "converged": self.converged,
            "determined": self.determined, "notes": self.notes,
        }


def ind_bounds(K, k_max: int, budget: Budget = DEFAULT, complex_id: str = "K",
               seed: int | None = None) -> IndexReport:
    """Tabulate chi(A(Sd^k K)) for k = 0..k_max and bracket ind(|K|).

    ``converged`` is set when two consecutive exact entries both meet the
    certified lower bound.  Nothing is extrapolated beyond k_max.
    """
    K = as_z2(K)
    rep = IndexReport(complex_id, is_free(K), seed=seed)
    if not rep.free:
        # a setwise-fixed simplex has a fixed barycentre: no Z2-map to any sphere
        rep.ind_lower = INF
        rep.notes.append("involution fixes a simplex; A(K) has loops and ind is infinite")
    else:
        try:
            rep.w1_height = w1_height(K, budget)
            rep.ind_lower = max(rep.ind_lower, rep.w1_height)
        except BudgetExceeded as exc:
            rep.notes.append(f"w1 height skipped: {exc}")
        try:
            rep.circle_map = circle_map_exists(K, budget).exists
            if not rep.circle_map:
                rep.ind_lower = max(rep.ind_lower, 2)
        except BudgetExceeded as exc:
            rep.notes.append(f"circle-map decision skipped: {exc}")
    X = K
    for k in range(k_max + 1):
        if k:
            try:
                X = sd_iter(X, 1, budget)
            except BudgetExceeded as exc:
                rep.notes.append(f"stopped before k={k}: {exc}")
                break
        r = chromatic_interval(csorba_A(X), budget)
        rep.table.append({"k": k, "vertices": len(X.vertices), **r.as_json()})
        log.info("%s k=%d chi in [%s, %s]", complex_id, k, r.lower, r.upper)
        rep.ind_upper = min(rep.ind_upper, r.upper - 2)
    exact = [row for row in rep.table if row["exact"]]
    for r0, r1 in zip(exact, exact[1:]):
        if (r1["k"] == r0["k"] + 1 and r0["upper"] != "inf" and r1["upper"] != "inf"
                and r0["upper"] - 2 == rep.ind_lower == r1["upper"] - 2):
            rep.converged = True
    return rep


@dataclass
class ProbeReport:
    pair_id: str
    k: int
    chi_left: ChromaticResult
    chi_right: ChromaticResult
    chi_product: ChromaticResult
    expressions_equal: bool
    verdict: str
    seed: int | None = None

    def as_json(self) -> dict:
        return {"pair": self.pair_id, "k": self.k, "seed": self.seed,
                "chi_left": self.chi_left.as_json(), "chi_right": self.chi_right.as_json(),
                "chi_product": self.chi_product.as_json(),
                "expressions_equal": self.expressions_equal, "verdict": self.verdict}


def hedetniemi_probe(K, L, k: int, budget: Budget = DEFAULT, pair_id: str = "K,L",
                     seed: int | None = None) -> ProbeReport:
    """Compare chi(A(Sd^k K) x A(Sd^k L)) with the factor chromatic numbers.

    Also checks A(Sd^k K x Sd^k L) == A(Sd^k K) x A(Sd^k L) on the nose.  The
    product complex is only built up to its 1-skeleton, which is all A reads.
    A strict gap is reported only when all three numbers are exact.
    """
    Ks, Ls = sd_iter(as_z2(K), k, budget), sd_iter(as_z2(L), k, budget)
    AK, AL = csorba_A(Ks), csorba_A(Ls)
    prod_graph = tensor_product(AK, AL)
    via_complex = csorba_A(product(Ks, Ls, max_dim=1, budget=budget))
    same = via_complex == prod_graph
    cl = chromatic_interval(AK, budget)
    cr = chromatic_interval(AL, budget)
    cp = chromatic_interval(prod_graph, budget)
    if not (cl.exact and cr.exact and cp.exact):
        verdict = "budget"
    elif cp.upper < min(cl.upper, cr.upper):
        verdict = "candidate-gap"
    else:
        verdict = "consistent"
    return ProbeReport(pair_id, k, cl, cr, cp, same, verdict, seed)
