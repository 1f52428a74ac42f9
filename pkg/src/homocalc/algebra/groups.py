"""Finitely generated abelian groups in invariant-factor form."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .matrix import IntMatrix
from .snf import smith_normal_form


@dataclass(frozen=True, order=True)
class FgAbGroup:
    """``Z^rank + Z/t1 + ... + Z/tk`` with ``t1 | t2 | ... | tk`` and every ``ti >= 2``.

    Values are always canonical, so ``==`` is isomorphism.  Use
    :meth:`from_orders` to build a group from arbitrary cyclic factors.
    """

    rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(int(t) for t in self.torsion))
        if self.rank < 0:
            raise ValueError("rank must be nonnegative")
        for t in self.torsion:
            if t < 2:
                raise ValueError(f"torsion coefficients must be >= 2, got {t}")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError(f"torsion {self.torsion} is not a divisibility chain")

    @classmethod
    def trivial(cls) -> FgAbGroup:
        return cls()

    @classmethod
    def free(cls, rank: int) -> FgAbGroup:
        return cls(rank)

    @classmethod
    def cyclic(cls, n: int) -> FgAbGroup:
        """``Z/n``; ``n = 0`` gives ``Z`` and ``n = +-1`` the trivial group."""
        return cls.from_orders([n])

    @classmethod
    def from_orders(cls, orders: Iterable[int], rank: int = 0) -> FgAbGroup:
        """Canonicalize a direct sum of cyclic groups ``Z/n`` (``n = 0`` meaning ``Z``)."""
        orders = [abs(int(n)) for n in orders]
        return cokernel(IntMatrix.diagonal(orders)) + cls(rank)

    @classmethod
    def parse(cls, text: str) -> FgAbGroup:
        """Parse strings such as ``"Z^2+Z/6"``, ``"Z + Z/4 + Z/2"`` or ``"0"``."""
        s = re.sub(r"\s+", "", text)
        if s == "":
            raise ValueError("empty group description")
        if s == "0":
            return cls()
        rank = 0
        orders = []
        for term in s.split("+"):
            m = re.fullmatch(r"Z(?:\^(\d+))?", term)
            if m:
                rank += int(m.group(1)) if m.group(1) is not None else 1
                continue
            m = re.fullmatch(r"Z/(\d+)", term)
            if m:
                n = int(m.group(1))
                if n == 0:
                    rank += 1
                else:
                    orders.append(n)
                continue
            if term == "0":
                continue
            raise ValueError(f"cannot parse group term {term!r} in {text!r}")
        return cls.from_orders(orders, rank)

    @property
    def ngens(self) -> int:
        """Number of canonical generators (free ones first, then torsion)."""
        return self.rank + len(self.torsion)

    @property
    def orders(self) -> tuple[int, ...]:
        """Order of each canonical generator, ``0`` for a free generator."""
        return (0,) * self.rank + self.torsion

    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    def relation_matrix(self) -> IntMatrix:
        """Presentation matrix: ``Z^ngens / columns`` is this group; columns are independent."""
        k = len(self.torsion)
        data = [[0] * k for _ in range(self.ngens)]
        for j, t in enumerate(self.torsion):
            data[self.rank + j][j] = t
        return IntMatrix(data, self.ngens, k)

    def __add__(self, other: FgAbGroup) -> FgAbGroup:
        """Direct sum."""
        if not isinstance(other, FgAbGroup):
            return NotImplemented
        if not other.torsion:
            return FgAbGroup(self.rank + other.rank, self.torsion)
        if not self.torsion:
            return FgAbGroup(self.rank + other.rank, other.torsion)
        return FgAbGroup.from_orders(self.torsion + other.torsion, self.rank + other.rank)

    def __mul__(self, n: int) -> FgAbGroup:
        """Direct sum of ``n`` copies."""
        out = FgAbGroup()
        for _ in range(n):
            out = out + self
        return out

    def __str__(self) -> str:
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {"group": str(self), "rank": self.rank, "torsion": list(self.torsion)}


def cokernel(M: IntMatrix) -> FgAbGroup:
    """``Z^rows / column span of M``."""
    d = smith_normal_form(M).invariants
    return FgAbGroup(M.rows - len(d), tuple(x for x in d if x != 1))
