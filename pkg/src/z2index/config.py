"""Search budgets and the error types shared across the package."""

from __future__ import annotations

import time
from dataclasses import dataclass, field


class InputError(ValueError):
    """Malformed or inadmissible input (bad file, non-simple graph, ...)."""


class BudgetExceeded(RuntimeError):
    """A configured size or search budget ran out before an answer was found.

    ``partial`` carries whatever the caller can still report, e.g. a
    bracketing interval for a chromatic number.
    """

    def __init__(self, what: str, limit, partial=None):
        super().__init__(f"budget exhausted: {what} (limit {limit})")
        self.what = what
        self.limit = limit
        self.partial = partial


@dataclass(frozen=True)
class Budget:
    simplices: int = 10**6
    nodes: int = 10**7
    deadline_s: float | None = None
    _start: float = field(default_factory=time.monotonic, compare=False, repr=False)

    def check_simplices(self, count: int, what: str = "simplex count") -> None:
        if count > self.simplices:
            raise BudgetExceeded(what, self.simplices)

    def expired(self) -> bool:
        return self.deadline_s is not None and time.monotonic() - self._start > self.deadline_s


DEFAULT = Budget()


class NodeCounter:
    """Counts search nodes against a budget; polls the deadline every 4096 nodes."""

    __slots__ = ("budget", "count", "what")

    def __init__(self, budget: Budget, what: str = "search nodes"):
        self.budget = budget
        self.count = 0
        self.what = what

    def tick(self, partial=None) -> None:
        self.count += 1
        if self.count > self.budget.nodes:
            raise BudgetExceeded(self.what, self.budget.nodes, partial)
        if not self.count & 4095 and self.budget.expired():
            raise BudgetExceeded(self.what + " (deadline)", self.budget.deadline_s, partial)
