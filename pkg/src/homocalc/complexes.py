"""Bounded chain complexes of finitely generated free abelian groups.

Indexing is homological: ``d_i : C_i -> C_{i-1}`` is a ``rank(i-1) x rank(i)``
matrix.  Cochain complexes are stored as chain complexes on negated degrees
(``C^i`` lives in degree ``-i``), so there is a single code path.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping

from .algebra import FgAbGroup, IntMatrix, Subquotient, homology_at


class ComplexError(ValueError):
    """Raised when a complex fails validation; ``degree`` names the first bad degree."""

    def __init__(self, degree: int, message: str):
        super().__init__(f"degree {degree}: {message}")
        self.degree = degree


def _as_matrix(data, rows: int, cols: int) -> IntMatrix:
    if isinstance(data, IntMatrix):
        return data
    data = [list(r) for r in data]
    if not data:
        return IntMatrix([], 0, cols)
    if all(len(r) == 0 for r in data):
        return IntMatrix(data, len(data), 0)
    return IntMatrix(data)


class ChainComplex:
    """A bounded complex ``... -> C_i -> C_{i-1} -> ...`` of free Z-modules.

    ``ranks`` maps degree to rank; absent degrees have rank zero.
    ``differentials`` maps ``i`` to ``d_i``; absent entries are zero maps.
    Construction only normalizes; call :meth:`validate` to check shapes and
    ``d o d = 0``.
    """

    __slots__ = ("_ranks", "_diffs", "_sq_cache")

    def __init__(self, ranks: Mapping[int, int] | None = None,
                 differentials: Mapping[int, object] | None = None):
        ranks = {int(k): int(v) for k, v in (ranks or {}).items()}
        for k, v in ranks.items():
            if v < 0:
                raise ComplexError(k, f"negative rank {v}")
        self._ranks = {k: v for k, v in sorted(ranks.items()) if v}
        diffs = {}
        for k, m in (differentials or {}).items():
            k = int(k)
            m = _as_matrix(m, self.rank(k - 1), self.rank(k))
            # empty, correctly shaped matrices carry no information
            if m.shape == (self.rank(k - 1), self.rank(k)) and (m.rows == 0 or m.cols == 0):
                continue
            diffs[k] = m
        for k in self._ranks:
            if k - 1 in self._ranks and k not in diffs:
                diffs[k] = IntMatrix.zeros(self._ranks[k - 1], self._ranks[k])
        self._diffs = dict(sorted(diffs.items()))
        self._sq_cache = {}

    # constructors

    @classmethod
    def zero(cls) -> ChainComplex:
        return cls()

    @classmethod
    def concentrated(cls, rank: int = 1, degree: int = 0) -> ChainComplex:
        """``Z^rank`` in a single degree."""
        return cls({degree: rank})

    @classmethod
    def two_term(cls, d: IntMatrix | list, degree: int = 1) -> ChainComplex:
        """``C_degree --d--> C_{degree-1}``."""
        d = _as_matrix(d, 0, 0) if not isinstance(d, IntMatrix) else d
        return cls({degree: d.cols, degree - 1: d.rows}, {degree: d})

    # access

    @property
    def ranks(self) -> dict[int, int]:
        return dict(self._ranks)

    @property
    def differentials(self) -> dict[int, IntMatrix]:
        return dict(self._diffs)

    def rank(self, i: int) -> int:
        return self._ranks.get(i, 0)

    def d(self, i: int) -> IntMatrix:
        """``d_i : C_i -> C_{i-1}``, a zero matrix where nothing is stored."""
        m = self._diffs.get(i)
        if m is None:
            return IntMatrix.zeros(self.rank(i - 1), self.rank(i))
        return m

    @property
    def support(self) -> range:
        """Smallest degree interval containing every nonzero module."""
        if not self._ranks:
            return range(0)
        ks = list(self._ranks)
        return range(min(ks), max(ks) + 1)

    def degrees(self) -> range:
        return self.support

    def is_zero(self) -> bool:
        return not self._ranks

    def total_entries(self) -> int:
        return sum(m.rows * m.cols for m in self._diffs.values())

    def __eq__(self, other) -> bool:
        if not isinstance(other, ChainComplex):
            return NotImplemented
        return self._ranks == other._ranks and self._diffs == other._diffs

    def __hash__(self):
        return hash((tuple(self._ranks.items()), tuple(self._diffs.items())))

    def __repr__(self) -> str:
        ds = {k: m.tolist() for k, m in self._diffs.items()}
        return f"ChainComplex(ranks={self._ranks}, differentials={ds})"

    # checks

    def validate(self) -> None:
        """Raise :class:`ComplexError` at the first degree with a bad shape or ``d o d != 0``."""
        for k, m in self._diffs.items():
            if m.shape != (self.rank(k - 1), self.rank(k)):
                raise ComplexError(
                    k, f"differential has shape {m.shape}, expected "
                       f"{(self.rank(k - 1), self.rank(k))}")
        for k in self.support:
            if k - 1 in self._diffs and k in self._diffs:
                if not (self._diffs[k - 1] @ self._diffs[k]).is_zero():
                    raise ComplexError(k, f"d_{k - 1} o d_{k} is not zero")

    def is_valid(self) -> bool:
        try:
            self.validate()
        except ComplexError:
            return False
        return True

    # homology

    def subquotient(self, i: int) -> Subquotient:
        """``ker d_i / im d_{i+1}`` with canonical generators (cached)."""
        sq = self._sq_cache.get(i)
        if sq is None:
            sq = Subquotient(self.d(i), self.d(i + 1))
            self._sq_cache[i] = sq
        return sq

    def homology_at(self, i: int) -> FgAbGroup:
        return homology_at(self.d(i), self.d(i + 1))

    def homology(self) -> GradedGroup:
        self.validate()
        return GradedGroup({i: self.homology_at(i) for i in self.support})

    def euler_characteristic(self) -> int:
        return sum((-1) ** (k % 2) * r for k, r in self._ranks.items())


class GradedGroup(Mapping[int, FgAbGroup]):
    """Finitely supported map from degree to :class:`FgAbGroup`.

    Missing degrees read as the trivial group, and equality ignores
    trivial entries.
    """

    def __init__(self, groups: Mapping[int, FgAbGroup] | None = None):
        self._groups = dict(sorted((groups or {}).items()))

    def __getitem__(self, i: int) -> FgAbGroup:
        return self._groups.get(i, FgAbGroup())

    def __iter__(self) -> Iterator[int]:
        return iter(self._groups)

    def __len__(self) -> int:
        return len(self._groups)

    def nonzero(self) -> dict[int, FgAbGroup]:
        return {k: g for k, g in self._groups.items() if not g.is_trivial()}

    def is_zero(self) -> bool:
        return not self.nonzero()

    def shifted(self, n: int) -> GradedGroup:
        return GradedGroup({k + n: g for k, g in self._groups.items()})

    def __eq__(self, other) -> bool:
        if isinstance(other, GradedGroup):
            return self.nonzero() == other.nonzero()
        if isinstance(other, Mapping):
            return self == GradedGroup(other)
        return NotImplemented

    def __add__(self, other: GradedGroup) -> GradedGroup:
        keys = set(self) | set(other)
        return GradedGroup({k: self[k] + other[k] for k in keys})

    def format(self, symbol: str = "H_", descending: bool = True, negate: bool = False) -> str:
        keys = sorted(self._groups, reverse=descending)
        if not keys:
            return "0"
        return ", ".join(f"{symbol}{-k if negate else k} = {self._groups[k]}" for k in keys)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"GradedGroup({{{', '.join(f'{k}: {str(g)!r}' for k, g in self._groups.items())}}})"


# constructions


def shift(C: ChainComplex, n: int) -> ChainComplex:
    """``C[n]``: ``C[n]_i = C_{i-n}`` with differential ``(-1)^n d``."""
    sign = -1 if n % 2 else 1
    return ChainComplex(
        {k + n: r for k, r in C.ranks.items()},
        {k + n: sign * m for k, m in C.differentials.items()},
    )


def dual(C: ChainComplex) -> ChainComplex:
    """``Hom(C, Z)`` on negated degrees: degree ``i`` holds ``C_{-i}^*``, ``d'_i = d_{1-i}^T``."""
    return ChainComplex(
        {-k: r for k, r in C.ranks.items()},
        {1 - k: m.T for k, m in C.differentials.items()},
    )


def cohomology(C: ChainComplex) -> GradedGroup:
    """``H^i(C) = H_{-i}(dual(C))``, keyed by the cohomological degree ``i``."""
    H = dual(C).homology()
    return GradedGroup({-k: g for k, g in H.items()})


def direct_sum(*complexes: ChainComplex) -> ChainComplex:
    degrees = sorted({k for C in complexes for k in C.ranks})
    ranks = {k: sum(C.rank(k) for C in complexes) for k in degrees}
    diffs = {k: IntMatrix.block_diag(*(C.d(k) for C in complexes)) for k in degrees}
    return ChainComplex(ranks, diffs)


def _blocks(C: ChainComplex, D: ChainComplex, n: int) -> list[tuple[int, int]]:
    # summands C_i (x) D_{n-i} of the total degree n, ordered by i
    return [(i, n - i) for i in C.support if C.rank(i) and D.rank(n - i)]


def tensor(C: ChainComplex, D: ChainComplex) -> ChainComplex:
    """Total complex of ``C (x) D`` with ``d(x (x) y) = dx (x) y + (-1)^|x| x (x) dy``.

    Degree ``n`` is ordered by the degree of the ``C`` factor, and each
    block ``C_i (x) D_j`` uses the Kronecker basis ``(a, b) -> a * rank_D(j) + b``.
    """
    if C.is_zero() or D.is_zero():
        return ChainComplex()
    lo = C.support.start + D.support.start
    hi = C.support.stop + D.support.stop - 2
    ranks, diffs = {}, {}
    for n in range(lo, hi + 1):
        ranks[n] = sum(C.rank(i) * D.rank(j) for i, j in _blocks(C, D, n))
    for n in range(lo + 1, hi + 1):
        src = _blocks(C, D, n)
        tgt = _blocks(C, D, n - 1)
        grid = []
        for (ti, tj) in tgt:
            row = []
            for (si, sj) in src:
                rows, cols = C.rank(ti) * D.rank(tj), C.rank(si) * D.rank(sj)
                if ti == si - 1 and tj == sj:
                    row.append(C.d(si).kron(IntMatrix.identity(D.rank(sj))))
                elif ti == si and tj == sj - 1:
                    sign = -1 if si % 2 else 1
                    row.append(sign * IntMatrix.identity(C.rank(si)).kron(D.d(sj)))
                else:
                    row.append(IntMatrix.zeros(rows, cols))
            grid.append(row)
        if grid and src:
            diffs[n] = IntMatrix.block(grid)
    return ChainComplex(ranks, diffs)


def hom_complex(C: ChainComplex, D: ChainComplex) -> ChainComplex:
    """``Hom(C, D)``: degree ``n`` is ``prod_i Hom(C_i, D_{i+n})``, ``df = d o f - (-1)^n f o d``.

    Each ``Hom(C_i, D_{i+n})`` is flattened row-major (a ``rank_D x rank_C``
    matrix), and components are ordered by ``i``.
    """
    if C.is_zero() or D.is_zero():
        return ChainComplex()
    lo = D.support.start - (C.support.stop - 1)
    hi = (D.support.stop - 1) - C.support.start

    def parts(n):
        return [i for i in C.support if C.rank(i) and D.rank(i + n)]

    ranks = {n: sum(C.rank(i) * D.rank(i + n) for i in parts(n)) for n in range(lo, hi + 1)}
    diffs = {}
    for n in range(lo + 1, hi + 1):
        src = parts(n)
        tgt = parts(n - 1)
        sign = -1 if n % 2 else 1
        grid = []
        for ti in tgt:
            row = []
            for si in src:
                rows = D.rank(ti + n - 1) * C.rank(ti)
                cols = D.rank(si + n) * C.rank(si)
                blk = IntMatrix.zeros(rows, cols)
                if ti == si:
                    # f_i |-> d_D o f_i ; vec(A X) = (A kron I) vec(X)
                    blk = blk + D.d(si + n).kron(IntMatrix.identity(C.rank(si)))
                if ti == si + 1:
                    # f_i |-> -(-1)^n f_i o d_C ; vec(X B) = (I kron B^T) vec(X)
                    blk = blk + (-sign) * IntMatrix.identity(D.rank(si + n)).kron(C.d(ti).T)
                row.append(blk)
            grid.append(row)
        if grid and src:
            diffs[n] = IntMatrix.block(grid)
    return ChainComplex(ranks, diffs)


def total_entries(complexes: Iterable[ChainComplex]) -> int:
    return sum(C.total_entries() for C in complexes)
