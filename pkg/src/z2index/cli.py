"""Command line driver.

Exit codes: 0 success, 1 check failure, 2 budget exhausted, 3 input error.
Inputs are JSON/DIMACS files or ``builtin:<name>`` for a shipped fixture.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import fixtures
from .complexes import Z2Complex, sd_iter
from .config import Budget, BudgetExceeded, InputError
from .functors import check_adjunction, csorba_A
from .graphs import Graph
from .homology import circle_map_exists, homology
from .index import chi_A_sd, hedetniemi_probe, ind_bounds
from .io import dumps, load, to_csv, to_dot
from .verify import load_corpus, verify_suite

EXIT_OK, EXIT_CHECK, EXIT_BUDGET, EXIT_INPUT = 0, 1, 2, 3


def _resolve(source: str):
    if source.startswith("builtin:"):
        name = source.split(":", 1)[1]
        table = {**fixtures.complexes(), **fixtures.graphs()}
        if name not in table:
            raise InputError(f"unknown builtin {name!r}; choose from {sorted(table)}")
        return table[name]
    return load(source)


def _complex(source: str) -> Z2Complex:
    obj = _resolve(source)
    if not isinstance(obj, Z2Complex):
        raise InputError(f"{source}: expected a complex, got a graph")
    return obj


def _graph(source: str) -> Graph:
    obj = _resolve(source)
    if not isinstance(obj, Graph):
        raise InputError(f"{source}: expected a graph, got a complex")
    return obj


def _emit(data) -> None:
    json.dump(data, sys.stdout, indent=1, default=str)
    sys.stdout.write("\n")


def cmd_chi(a, budget):
    r = chi_A_sd(_complex(a.complex), a.k, budget)
    _emit({"k": a.k, "seed": a.seed, **r.as_json()})
    return EXIT_OK if r.exact else EXIT_BUDGET


def cmd_bounds(a, budget):
    rep = ind_bounds(_complex(a.complex), a.kmax, budget, complex_id=a.complex, seed=a.seed)
    _emit(rep.as_json())
    return EXIT_OK if all(row["exact"] for row in rep.table) else EXIT_BUDGET


def cmd_probe(a, budget):
    rep = hedetniemi_probe(_complex(a.left), _complex(a.right), a.k, budget,
                           pair_id=f"{a.left} x {a.right}", seed=a.seed)
    _emit(rep.as_json())
    if not rep.expressions_equal:
        return EXIT_CHECK
    return EXIT_BUDGET if rep.verdict == "budget" else EXIT_OK


def cmd_adjunction(a, budget):
    r = check_adjunction(_complex(a.complex), _graph(a.graph), budget)
    _emit(r.as_json())
    return EXIT_OK if r.bijection_verified else EXIT_CHECK


def cmd_circle(a, budget):
    _emit(circle_map_exists(_complex(a.complex), budget).as_json())
    return EXIT_OK


def cmd_homology(a, budget):
    obj = _resolve(a.complex)
    if isinstance(obj, Graph):
        raise InputError("homology needs a complex")
    H = homology(obj, reduced=not a.unreduced)
    _emit({**H.as_json(), "summary": str(H)})
    return EXIT_OK


def cmd_verify(a, budget):
    corpus = load_corpus(a.corpus) if a.corpus else fixtures.default_corpus()
    summary = verify_suite(corpus, budget, seed=a.seed, random_fixtures=a.random, jobs=a.jobs)
    _emit(summary)
    return EXIT_OK if summary["ok"] else EXIT_CHECK


def cmd_export(a, budget):
    obj = _resolve(a.input)
    if a.sd:
        if not isinstance(obj, Z2Complex):
            raise InputError("--sd applies to complexes")
        obj = sd_iter(obj, a.sd, budget)
    if a.csorba:
        if not isinstance(obj, Z2Complex):
            raise InputError("--csorba applies to complexes")
        obj = csorba_A(obj)
    text = {"json": dumps, "dot": to_dot, "csv": to_csv}[a.format](obj)
    sys.stdout.write(text if text.endswith("\n") else text + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="z2index", description=__doc__.splitlines()[0])
    p.add_argument("--budget-simplices", type=int, default=10**6)
    p.add_argument("--budget-nodes", type=int, default=10**7)
    p.add_argument("--deadline-s", type=float, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="cmd", required=True)

    s = sub.add_parser("chi", help="chromatic number of A(Sd^k K)")
    s.add_argument("--complex", required=True)
    s.add_argument("--k", type=int, default=0)
    s.set_defaults(fn=cmd_chi)

    s = sub.add_parser("bounds", help="Z2-index bounds for k = 0..kmax")
    s.add_argument("--complex", required=True)
    s.add_argument("--kmax", type=int, default=1)
    s.set_defaults(fn=cmd_bounds)

    s = sub.add_parser("probe", help="chromatic numbers of a product and its factors")
    s.add_argument("--left", required=True)
    s.add_argument("--right", required=True)
    s.add_argument("--k", type=int, default=0)
    s.set_defaults(fn=cmd_probe)

    s = sub.add_parser("adjunction", help="Hom(A(K), G) versus Z2-maps K -> B(G)")
    s.add_argument("--complex", required=True)
    s.add_argument("--graph", required=True)
    s.set_defaults(fn=cmd_adjunction)

    s = sub.add_parser("circle-map", help="decide a Z2-map |K| -> S^1")
    s.add_argument("--complex", required=True)
    s.set_defaults(fn=cmd_circle)

    s = sub.add_parser("homology", help="integral homology")
    s.add_argument("--complex", required=True)
    s.add_argument("--unreduced", action="store_true")
    s.set_defaults(fn=cmd_homology)

    s = sub.add_parser("verify", help="run all checks over a corpus directory")
    s.add_argument("--corpus", default=None)
    s.add_argument("--random", type=int, default=0, help="extra seeded random fixtures")
    s.add_argument("--jobs", type=int, default=1, help="worker processes")
    s.set_defaults(fn=cmd_verify)

    s = sub.add_parser("export", help="convert a graph or complex")
    s.add_argument("--input", required=True)
    s.add_argument("--format", choices=("json", "dot", "csv"), default="json")
    s.add_argument("--sd", type=int, default=0, help="subdivide k times first")
    s.add_argument("--csorba", action="store_true", help="export A(K) instead of K")
    s.set_defaults(fn=cmd_export)
    return p


def main(argv=None) -> int:
    a = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if a.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    budget = Budget(simplices=a.budget_simplices, nodes=a.budget_nodes, deadline_s=a.deadline_s)
    try:
        return a.fn(a, budget)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceeded as exc:
        print(f"budget: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
