"""The Grothendieck ring K(P2) = Z[eta]/(eta^3).

A class is stored by its invariants ``(rank, c1, chi)``.  Internally the
ring structure is computed in the basis ``[O], eta = [O_l], eta^2 = [O_p]``
where a class has coordinates ``(r, c1, chi - r - c1)``.  Every basis
element has Euler characteristic 1, so chi of ``a + b*eta + c*eta^2`` is
simply ``a + b + c``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Tuple

from strange_duality.errors import DomainError

__all__ = [
    "KClass",
    "ChernData",
    "ONE",
    "ETA",
    "POINT",
    "to_basis",
    "from_basis",
    "mul",
    "dual",
    "euler_pair",
    "orth_generator",
    "moduli_dim",
    "chern_to_chi",
    "chi_to_chern",
    "parse_triple",
]

Triple = Tuple[int, int, int]


@dataclass(frozen=True)
class KClass:
    """Element of K(P2) given by rank, first Chern class and Euler characteristic."""

    rank: int
    c1: int
    chi: int

    def __iter__(self):
        return iter((self.rank, self.c1, self.chi))

    def __add__(self, other: KClass) -> KClass:
        if not isinstance(other, KClass):
            return NotImplemented
        return KClass(self.rank + other.rank, self.c1 + other.c1, self.chi + other.chi)

    def __sub__(self, other: KClass) -> KClass:
        if not isinstance(other, KClass):
            return NotImplemented
        return KClass(self.rank - other.rank, self.c1 - other.c1, self.chi - other.chi)

    def __neg__(self) -> KClass:
        return KClass(-self.rank, -self.c1, -self.chi)

    def __mul__(self, other):
        if isinstance(other, KClass):
            return mul(self, other)
        if isinstance(other, int):
            return KClass(other * self.rank, other * self.c1, other * self.chi)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __str__(self) -> str:
        return f"({self.rank},{self.c1},{self.chi})"


@dataclass(frozen=True)
class ChernData:
    """Class given by rank and Chern classes ``(r, c1, c2)``."""

    rank: int
    c1: int
    c2: int


ONE = KClass(1, 0, 1)
ETA = KClass(0, 1, 1)
POINT = KClass(0, 0, 1)


def to_basis(c: KClass) -> Triple:
    """Coordinates of ``c`` in the basis ``[O], eta, eta^2``."""
    return (c.rank, c.c1, c.chi - c.rank - c.c1)


def from_basis(a: int, b: int, c: int) -> KClass:
    return KClass(a, b, a + b + c)


def mul(x: KClass, y: KClass) -> KClass:
    a, b, c = to_basis(x)
    a2, b2, c2 = to_basis(y)
    # eta^3 = 0 truncation
    return from_basis(a * a2, a * b2 + a2 * b, a * c2 + a2 * c + b * b2)


def dual(c: KClass) -> KClass:
    """Involution sending a vector bundle class to the class of its dual."""
    return KClass(c.rank, -c.c1, c.chi - 3 * c.c1)


def euler_pair(c: KClass, u: KClass) -> int:
    """``<c, u> = chi(c . u)``."""
    return mul(c, u).chi


def orth_generator(c: KClass) -> Tuple[KClass, int]:
    """Positive generator of the rank-0 classes orthogonal to ``c``.

    Returns ``(u, delta)`` with ``u = (0, r/delta, -c1/delta)`` and
    ``delta = gcd(r, c1)``.
    """
    if c.rank <= 0:
        raise DomainError(f"orthogonal generator needs positive rank, got {c}")
    delta = gcd(c.rank, c.c1)
    return KClass(0, c.rank // delta, -c.c1 // delta), delta


def moduli_dim(c: KClass) -> int:
    """Expected dimension ``1 - <c*, c>`` of the moduli space of class ``c``."""
    return 1 - euler_pair(dual(c), c)


def chern_to_chi(d: ChernData) -> KClass:
    # Riemann-Roch on P2: chi = r + (c1^2 + 3 c1)/2 - c2; c1^2 + 3c1 is always even
    return KClass(d.rank, d.c1, d.rank + (d.c1 * (d.c1 + 3)) // 2 - d.c2)


def chi_to_chern(c: KClass) -> ChernData:
    return ChernData(c.rank, c.c1, (c.c1 * (c.c1 + 3)) // 2 + c.rank - c.chi)


def parse_triple(text: str) -> Triple:
    """Parse ``"a,b,c"`` into an integer triple; raises ValueError."""
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 3:
        raise ValueError(f"expected three comma-separated integers, got {text!r}")
    try:
        return tuple(int(p) for p in parts)  # type: ignore[return-value]
    except ValueError:
        raise ValueError(f"non-integer entry in {text!r}") from None
