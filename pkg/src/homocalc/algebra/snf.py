"""Smith normal form and the kernel / solve / cokernel routines built on it."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .matrix import IntMatrix


@dataclass(frozen=True)
class SnfResult:
    """Unimodular ``U``, ``V`` with ``U @ M @ V == S``.

    ``U_inv`` is the inverse of ``U``; it is tracked during the reduction
    because homology generators are read off its columns.
    """

    U: IntMatrix
    S: IntMatrix
    V: IntMatrix
    U_inv: IntMatrix

    @property
    def invariants(self) -> tuple[int, ...]:
        """Nonzero diagonal entries d1 | d2 | ... | dr."""
        out = []
        for i in range(min(self.S.rows, self.S.cols)):
            if self.S[i, i] == 0:
                break
            out.append(self.S[i, i])
        return tuple(out)

    @property
    def rank(self) -> int:
        return len(self.invariants)


def _identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


class _Reducer:
    # Mutable working state; A = U M V holds after every elementary step.

    def __init__(self, M: IntMatrix):
        self.m, self.n = M.rows, M.cols
        self.A = M.tolist()
        self.U = _identity(self.m)
        self.Uinv = _identity(self.m)
        self.V = _identity(self.n)

    # row_i += q * row_k
    def add_row(self, i, k, q):
        A, U, Uinv = self.A, self.U, self.Uinv
        A[i] = [a + q * b for a, b in zip(A[i], A[k])]
        U[i] = [a + q * b for a, b in zip(U[i], U[k])]
        for r in Uinv:
            r[k] -= q * r[i]

    # col_j += q * col_k
    def add_col(self, j, k, q):
        for r in self.A:
            r[j] += q * r[k]
        for r in self.V:
            r[j] += q * r[k]

    def swap_rows(self, i, k):
        if i == k:
            return
        A, U = self.A, self.U
        A[i], A[k] = A[k], A[i]
        U[i], U[k] = U[k], U[i]
        for r in self.Uinv:
            r[i], r[k] = r[k], r[i]

    def swap_cols(self, j, k):
        if j == k:
            return
        for r in self.A:
            r[j], r[k] = r[k], r[j]
        for r in self.V:
            r[j], r[k] = r[k], r[j]

    def negate_row(self, i):
        self.A[i] = [-a for a in self.A[i]]
        self.U[i] = [-a for a in self.U[i]]
        for r in self.Uinv:
            r[i] = -r[i]

    def min_pivot(self, t):
        best = None
        for i in range(t, self.m):
            row = self.A[i]
            for j in range(t, self.n):
                a = row[j]
                if a and (best is None or abs(a) < best[0]):
                    best = (abs(a), i, j)
                    if best[0] == 1:
                        return best
        return best

    def reduce(self):
        A = self.A
        for t in range(min(self.m, self.n)):
            found = self.min_pivot(t)
            if found is None:
                break
            while True:
                _, i, j = found
                self.swap_rows(t, i)
                self.swap_cols(t, j)
                p = A[t][t]
                dirty = False
                for i in range(t + 1, self.m):
                    if A[i][t]:
                        self.add_row(i, t, -(A[i][t] // p))
                        dirty = dirty or A[i][t] != 0
                for j in range(t + 1, self.n):
                    if A[t][j]:
                        self.add_col(j, t, -(A[t][j] // p))
                        dirty = dirty or A[t][j] != 0
                if not dirty:
                    # row and column cleared; enforce divisibility on the rest
                    bad = next(
                        (i for i in range(t + 1, self.m)
                         if any(A[i][j] % p for j in range(t + 1, self.n))),
                        None,
                    )
                    if bad is None:
                        break
                    self.add_row(t, bad, 1)
                # remainders left behind are smaller than |p|
                found = self.min_pivot_in_cross(t)
            if A[t][t] < 0:
                self.negate_row(t)

    def min_pivot_in_cross(self, t):
        A = self.A
        best = (abs(A[t][t]), t, t)
        for i in range(t + 1, self.m):
            if A[i][t] and abs(A[i][t]) < best[0]:
                best = (abs(A[i][t]), i, t)
        for j in range(t + 1, self.n):
            if A[t][j] and abs(A[t][j]) < best[0]:
                best = (abs(A[t][j]), t, j)
        return best


def smith_normal_form(M: IntMatrix) -> SnfResult:
    """Diagonalize ``M`` by unimodular row and column operations.

    Pivots are chosen as the smallest nonzero absolute value to keep
    intermediate entries small.
    """
    red = _Reducer(M)
    red.reduce()
    m, n = M.rows, M.cols
    return SnfResult(
        U=IntMatrix(red.U, m, m),
        S=IntMatrix(red.A, m, n),
        V=IntMatrix(red.V, n, n),
        U_inv=IntMatrix(red.Uinv, m, m),
    )


def kernel_basis(M: IntMatrix, snf: SnfResult | None = None) -> IntMatrix:
    """Columns form a Z-basis of ``{v : M v = 0}``."""
    snf = snf or smith_normal_form(M)
    r = snf.rank
    return snf.V.submatrix(range(M.cols), range(r, M.cols))


def rank(M: IntMatrix) -> int:
    return smith_normal_form(M).rank


def solve(M: IntMatrix, b: Sequence[int], snf: SnfResult | None = None) -> tuple[int, ...] | None:
    """Return an integer ``x`` with ``M x = b``, or ``None`` if there is none."""
    if len(b) != M.rows:
        raise ValueError(f"right-hand side has length {len(b)}, matrix has {M.rows} rows")
    snf = snf or smith_normal_form(M)
    c = snf.U.apply(b)
    d = snf.invariants
    y = [0] * M.cols
    for i, di in enumerate(d):
        q, rem = divmod(c[i], di)
        if rem:
            return None
        y[i] = q
    if any(c[i] for i in range(len(d), M.rows)):
        return None
    return snf.V.apply(y)


def solve_matrix(M: IntMatrix, B: IntMatrix, snf: SnfResult | None = None) -> IntMatrix | None:
    """Solve ``M X = B`` column by column."""
    snf = snf or smith_normal_form(M)
    cols = []
    for b in B.columns():
        x = solve(M, b, snf)
        if x is None:
            return None
        cols.append(x)
    return IntMatrix.from_columns(cols, M.cols)


def in_column_span(M: IntMatrix, vectors: IntMatrix, snf: SnfResult | None = None) -> bool:
    return solve_matrix(M, vectors, snf) is not None
