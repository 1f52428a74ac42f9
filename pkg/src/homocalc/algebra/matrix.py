"""Dense matrices over the integers with exact (arbitrary precision) entries."""

from __future__ import annotations

from typing import Iterable, Sequence


class IntMatrix:
    """Immutable dense integer matrix.

    Zero-row and zero-column matrices are legal and stand for the zero map
    to or from the rank-0 module, so the shape is stored explicitly rather
    than inferred from the nested data.
    """

    __slots__ = ("rows", "cols", "_data")

    def __init__(
        self,
        data: Iterable[Iterable[int]] = (),
        rows: int | None = None,
        cols: int | None = None,
    ):
        data = tuple(tuple(int(x) for x in row) for row in data)
        if rows is None:
            rows = len(data)
        if cols is None:
            cols = len(data[0]) if data else 0
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if not data and rows > 0:
            data = tuple(() for _ in range(rows))
        if len(data) != rows:
            raise ValueError(f"expected {rows} rows, got {len(data)}")
        for r in data:
            if len(r) != cols:
                raise ValueError(f"expected rows of length {cols}, got {len(r)}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "_data", data)

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix is immutable")

    # construction helpers

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls([[0] * cols for _ in range(rows)], rows, cols)

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n, n)

    @classmethod
    def diagonal(cls, entries: Sequence[int], rows: int | None = None,
                 cols: int | None = None) -> IntMatrix:
        n = len(entries)
        rows = n if rows is None else rows
        cols = n if cols is None else cols
        data = [[0] * cols for _ in range(rows)]
        for i, x in enumerate(entries):
            data[i][i] = x
        return cls(data, rows, cols)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int) -> IntMatrix:
        cols = len(columns)
        return cls([[columns[j][i] for j in range(cols)] for i in range(rows)], rows, cols)

    @classmethod
    def column(cls, vector: Sequence[int]) -> IntMatrix:
        return cls([[x] for x in vector], len(vector), 1)

    @staticmethod
    def hstack(*blocks: IntMatrix, rows: int | None = None) -> IntMatrix:
        if rows is None:
            if not blocks:
                raise ValueError("hstack of nothing needs an explicit row count")
            rows = blocks[0].rows
        for b in blocks:
            if b.rows != rows:
                raise ValueError("hstack: row counts differ")
        data = [sum((b._data[i] for b in blocks), ()) for i in range(rows)]
        return IntMatrix(data, rows, sum(b.cols for b in blocks))

    @staticmethod
    def vstack(*blocks: IntMatrix, cols: int | None = None) -> IntMatrix:
        if cols is None:
            if not blocks:
                raise ValueError("vstack of nothing needs an explicit column count")
            cols = blocks[0].cols
        for b in blocks:
            if b.cols != cols:
                raise ValueError("vstack: column counts differ")
        data = [row for b in blocks for row in b._data]
        return IntMatrix(data, len(data), cols)

    @staticmethod
    def block(grid: Sequence[Sequence[IntMatrix]]) -> IntMatrix:
        """Assemble a block matrix; every block in a block-row shares its row count."""
        if not grid:
            return IntMatrix.zeros(0, 0)
        row_blocks = [IntMatrix.hstack(*brow) for brow in grid]
        return IntMatrix.vstack(*row_blocks, cols=row_blocks[0].cols)

    @staticmethod
    def block_diag(*blocks: IntMatrix) -> IntMatrix:
        rows = sum(b.rows for b in blocks)
        cols = sum(b.cols for b in blocks)
        data = [[0] * cols for _ in range(rows)]
        r0 = c0 = 0
        for b in blocks:
            for i in range(b.rows):
                data[r0 + i][c0:c0 + b.cols] = b._data[i]
            r0 += b.rows
            c0 += b.cols
        return IntMatrix(data, rows, cols)

    # access

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def entries(self) -> tuple[int, ...]:
        """Entries in row-major order."""
        return tuple(x for row in self._data for x in row)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self._data[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self._data[i]

    def col(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self._data)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.col(j) for j in range(self.cols)]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self._data]

    def is_zero(self) -> bool:
        return all(x == 0 for r in self._data for x in r)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> IntMatrix:
        return IntMatrix([[self._data[i][j] for j in cols] for i in rows], len(rows), len(cols))

    # arithmetic

    @property
    def T(self) -> IntMatrix:
        return IntMatrix([self.col(j) for j in range(self.cols)], self.cols, self.rows)

    def transpose(self) -> IntMatrix:
        return self.T

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        ocols = other.columns()
        data = [[sum(a * b for a, b in zip(r, c)) for c in ocols] for r in self._data]
        return IntMatrix(data, self.rows, other.cols)

    def apply(self, vector: Sequence[int]) -> tuple[int, ...]:
        if len(vector) != self.cols:
            raise ValueError(f"vector of length {len(vector)} for {self.shape} matrix")
        return tuple(sum(a * b for a, b in zip(r, vector)) for r in self._data)

    def _check_same_shape(self, other: IntMatrix):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: IntMatrix) -> IntMatrix:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        self._check_same_shape(other)
        return IntMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)],
                         self.rows, self.cols)

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        self._check_same_shape(other)
        return IntMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)],
                         self.rows, self.cols)

    def __neg__(self) -> IntMatrix:
        return IntMatrix([[-a for a in r] for r in self._data], self.rows, self.cols)

    def __rmul__(self, scalar: int) -> IntMatrix:
        if not isinstance(scalar, int):
            return NotImplemented
        return IntMatrix([[scalar * a for a in r] for r in self._data], self.rows, self.cols)

    def kron(self, other: IntMatrix) -> IntMatrix:
        """Kronecker product; basis index (a, b) of the product is a * other_dim + b."""
        rows = self.rows * other.rows
        cols = self.cols * other.cols
        data = [[0] * cols for _ in range(rows)]
        for i, r in enumerate(self._data):
            for j, a in enumerate(r):
                if a == 0:
                    continue
                for k, s in enumerate(other._data):
                    out = data[i * other.rows + k]
                    base = j * other.cols
                    for m, b in enumerate(s):
                        out[base + m] = a * b
        return IntMatrix(data, rows, cols)

    # comparison / display

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._data))

    def __repr__(self) -> str:
        return f"IntMatrix({self.tolist()!r}, rows={self.rows}, cols={self.cols})"
