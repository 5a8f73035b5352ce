"""Exact integer matrix reduction.

``smith_normal_form`` is the dense algorithm with both transforms, used for
small matrices.  Boundary matrices are large and sparse with almost every
pivot a unit, so ``invariant_factors`` and ``solve_integer`` first eliminate
unit pivots sparsely and only hand the (usually tiny) remainder to the dense
routine.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass
class SNF:
    """U @ M @ V == D with U, V unimodular and diag(D) a divisibility chain."""

    D: list
    U: list
    V: list

    @property
    def diagonal(self) -> list[int]:
        return [self.D[i][i] for i in range(min(len(self.D), len(self.V)))]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d)


def identity(n: int) -> list:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(A: list, B: list) -> list:
    if not A:
        return []
    inner = len(B)
    cols = len(B[0]) if B else 0
    return [[sum(A[i][k] * B[k][j] for k in range(inner) if A[i][k]) for j in range(cols)]
            for i in range(len(A))]


def determinant(M: list) -> int:
    """Bareiss fraction-free determinant."""
    n = len(M)
    if n == 0:
        return 1
    A = [list(r) for r in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k]), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def smith_normal_form(M: list, ncols: int | None = None) -> SNF:
    """Smith normal form with transforms.

    Pivot rule: the smallest nonzero absolute value in the remaining block,
    ties broken by (row, column).  ``ncols`` is only needed for 0-row input.
    """
    A = [[int(x) for x in row] for row in M]
    m = len(A)
    n = len(A[0]) if m else (ncols or 0)
    U = identity(m)
    V = identity(n)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for R in A:
            R[i], R[j] = R[j], R[i]
        for R in V:
            R[i], R[j] = R[j], R[i]

    def add_row(dst, src, q):  # row dst += q * row src
        if q:
            ra, rs = A[dst], A[src]
            for k in range(n):
                if rs[k]:
                    ra[k] += q * rs[k]
            ua, us = U[dst], U[src]
            for k in range(m):
                if us[k]:
                    ua[k] += q * us[k]

    def add_col(dst, src, q):  # col dst += q * col src
        if q:
            for R in A:
                if R[src]:
                    R[dst] += q * R[src]
            for R in V:
                if R[src]:
                    R[dst] += q * R[src]

    for t in range(min(m, n)):
        best = None
        for i in range(t, m):
            row = A[i]
            for j in range(t, n):
                x = row[j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
        if best is None:
            break
        _, i, j = best
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            p = A[t][t]
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // p))
            rest = [(abs(A[i][t]), i) for i in range(t + 1, m) if A[i][t]]
            if rest:
                swap_rows(t, min(rest)[1])
                continue
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // p))
            rest = [(abs(A[t][j]), j) for j in range(t + 1, n) if A[t][j]]
            if rest:
                swap_cols(t, min(rest)[1])
                continue
            bad = next((i for i in range(t + 1, m)
                        if any(A[i][j] % p for j in range(t + 1, n))), None)
            if bad is None:
                break
            add_row(t, bad, 1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
    return SNF(A, U, V)


# --- sparse unit-pivot elimination ------------------------------------------

class _Sparse:
    """Row-major sparse integer matrix with a column index."""

    def __init__(self, rows: dict, ncols: int):
        self.rows = {r: dict(v) for r, v in rows.items() if v}
        self.cols: dict = {}
        for r, row in self.rows.items():
            for c in row:
                self.cols.setdefault(c, set()).add(r)
        self.ncols = ncols

    def pick_unit(self, c):
        best = None
        for r in self.cols.get(c, ()):
            x = self.rows[r][c]
            if x in (1, -1) and (best is None or (len(self.rows[r]), r) < best[0]):
                best = ((len(self.rows[r]), r), r)
        return None if best is None else best[1]

    def eliminate(self, pr, c, on_row=None):
        """Clear column c from every other row using the unit at (pr, c)."""
        prow = self.rows[pr]
        s = prow[c]
        for r in sorted(self.cols[c] - {pr}):
            row = self.rows[r]
            q = row[c] * s
            for j, x in prow.items():
                y = row.get(j, 0) - q * x
                if y:
                    if j not in row:
                        self.cols.setdefault(j, set()).add(r)
                    row[j] = y
                elif j in row:
                    del row[j]
                    self.cols[j].discard(r)
            if on_row:
                on_row(r, q)
            if not row:
                del self.rows[r]
        self.drop_row(pr)
        self.cols.pop(c, None)

    def drop_row(self, r):
        for j in self.rows.pop(r):
            s = self.cols.get(j)
            if s is not None:
                s.discard(r)
                if not s:
                    del self.cols[j]

    def unit_passes(self, on_pivot):
        progress = True
        while progress:
            progress = False
            for c in sorted(self.cols):
                if c not in self.cols:
                    continue
                r = self.pick_unit(c)
                if r is not None:
                    on_pivot(r, c)
                    progress = True


def invariant_factors(rows: dict, ncols: int) -> list[int]:
    """Nonzero Smith invariants of a sparse matrix {row: {col: value}}."""
    S = _Sparse(rows, ncols)
    units = 0

    def pivot(r, c):
        nonlocal units
        units += 1
        S.eliminate(r, c)

    S.unit_passes(pivot)
    rest_rows = sorted(S.rows)
    rest_cols = sorted(S.cols)
    if not rest_rows:
        return [1] * units
    dense = [[S.rows[r].get(c, 0) for c in rest_cols] for r in rest_rows]
    diag = [d for d in smith_normal_form(dense).diagonal if d]
    return [1] * units + diag


@dataclass
class IntegerSolution:
    solvable: bool
    y: list | None = None
    obstruction: dict | None = None


def solve_integer(rows: dict, ncols: int, b: dict) -> IntegerSolution:
    """Solve A y = b over the integers; A as {row: {col: value}}, b as {row: value}.

    Unit pivots are substituted out (row operations on [A | b]); the remaining
    block is solved through its Smith form.  On failure the obstruction holds
    the remainder's diagonal and the transformed right-hand side entries that
    violate divisibility.
    """
    S = _Sparse(rows, ncols)
    rhs = {r: b.get(r, 0) for r in set(rows) | set(b)}
    stack = []

    def pivot(r, c):
        prow = dict(S.rows[r])
        br = rhs[r]
        stack.append((c, prow, br))

        def on_row(k, q):
            rhs[k] = rhs.get(k, 0) - q * br

        S.eliminate(r, c, on_row)
        rhs.pop(r, None)

    S.unit_passes(pivot)
    # zero rows left behind must have zero right-hand side
    bad_zero = sorted(r for r, v in rhs.items() if v and r not in S.rows)
    rest_rows = sorted(S.rows)
    rest_cols = sorted(S.cols)
    y = [0] * ncols
    failing = []
    diag: list = []
    Ub: list = []
    if rest_rows:
        dense = [[S.rows[r].get(c, 0) for c in rest_cols] for r in rest_rows]
        snf = smith_normal_form(dense)
        diag = snf.diagonal
        bb = [rhs.get(r, 0) for r in rest_rows]
        Ub = [sum(u * x for u, x in zip(row, bb)) for row in snf.U]
        z = [0] * len(rest_cols)
        for i, val in enumerate(Ub):
            d = diag[i] if i < len(diag) else 0
            if d == 0:
                if val:
                    failing.append(i)
            elif val % d:
                failing.append(i)
            else:
                z[i] = val // d
        if not failing:
            for j, c in enumerate(rest_cols):
                y[c] = sum(snf.V[j][k] * z[k] for k in range(len(rest_cols)))
    if failing or bad_zero:
        return IntegerSolution(False, obstruction={
            "inconsistent_zero_rows": bad_zero,
            "remainder_diagonal": diag,
            "transformed_rhs": Ub,
            "failing_indices": failing,
        })
    for c, prow, br in reversed(stack):
        s = prow[c]
        y[c] = s * (br - sum(x * y[j] for j, x in prow.items() if j != c))
    return IntegerSolution(True, y=y)


def gf2_in_span(columns: list[int], target: int) -> bool:
    """Whether bitmask ``target`` is an XOR of some of ``columns``."""
    basis: dict = {}
    for v in columns:
        while v:
            h = v.bit_length() - 1
            if h in basis:
                v ^= basis[h]
            else:
                basis[h] = v
                break
    while target:
        h = target.bit_length() - 1
        if h not in basis:
            return False
        target ^= basis[h]
    return True
