"""Characters of polynomial GL(3) representations.

A character is a finitely supported map from weights (exponent triples of
monomials in x1, x2, x3) to integer multiplicities.  Symmetric and exterior
powers are obtained from Adams operations through Newton's identities, and
characters are split into Schur characters by peeling off leading terms.
"""

from __future__ import annotations

from collections import defaultdict
from functools import lru_cache
from itertools import permutations
from math import comb
from typing import Dict, Iterable, Iterator, Mapping, Tuple

from strange_duality.errors import DomainError, InvariantViolation

__all__ = [
    "Weight",
    "Partition",
    "Character",
    "SchurDecomposition",
    "ZERO",
    "TRIVIAL",
    "E",
    "check_partition",
    "schur_char",
    "weyl_dim",
    "sym_E",
    "tensor",
    "adams",
    "sym_power",
    "ext_power",
    "decompose",
    "recompose",
    "char_dim",
]

Weight = Tuple[int, int, int]
Partition = Tuple[int, int, int]


def _weight_key(w: Weight):
    return (sum(w), w)


class Character:
    """Immutable integer combination of weights."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Weight, int] | Iterable[Tuple[Weight, int]] = ()):
        acc: Dict[Weight, int] = defaultdict(int)
        items = terms.items() if isinstance(terms, Mapping) else terms
        for w, m in items:
            w = tuple(w)
            if len(w) != 3 or any(e < 0 for e in w):
                raise DomainError(f"weight must be a triple of nonnegative integers: {w}")
            acc[w] += m
        self._terms = {w: m for w, m in acc.items() if m}
        self._hash = None

    @property
    def terms(self) -> Dict[Weight, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __getitem__(self, w: Weight) -> int:
        return self._terms.get(tuple(w), 0)

    def __iter__(self) -> Iterator[Weight]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Character):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        body = ", ".join(f"{w}: {m}" for w, m in sorted(self._terms.items(), key=lambda t: _weight_key(t[0]), reverse=True))
        return f"Character({{{body}}})"

    def __add__(self, other: Character) -> Character:
        out = defaultdict(int, self._terms)
        for w, m in other._terms.items():
            out[w] += m
        return Character(out)

    def __sub__(self, other: Character) -> Character:
        return self + (-other)

    def __neg__(self) -> Character:
        return Character({w: -m for w, m in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, Character):
            return tensor(self, other)
        if isinstance(other, int):
            return Character({w: other * m for w, m in self._terms.items()})
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    @property
    def dim(self) -> int:
        return sum(self._terms.values())

    @property
    def is_virtual(self) -> bool:
        return any(m < 0 for m in self._terms.values())

    def degrees(self) -> set:
        return {sum(w) for w in self._terms}

    @property
    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def is_symmetric(self) -> bool:
        t = self._terms
        return all(t.get(p, 0) == m for w, m in t.items() for p in permutations(w))


ZERO = Character()
TRIVIAL = Character({(0, 0, 0): 1})


class SchurDecomposition:
    """Signed integer combination of Schur characters indexed by partitions."""

    __slots__ = ("_parts",)

    def __init__(self, parts: Mapping[Partition, int] | Iterable[Tuple[Partition, int]] = ()):
        acc: Dict[Partition, int] = defaultdict(int)
        items = parts.items() if isinstance(parts, Mapping) else parts
        for lam, c in items:
            acc[check_partition(lam)] += c
        self._parts = {lam: c for lam, c in acc.items() if c}

    @property
    def parts(self) -> Dict[Partition, int]:
        return dict(self._parts)

    def items(self):
        return sorted(self._parts.items(), key=lambda t: _weight_key(t[0]), reverse=True)

    def __getitem__(self, lam) -> int:
        return self._parts.get(_pad(lam), 0)

    def __len__(self) -> int:
        return len(self._parts)

    def __eq__(self, other) -> bool:
        if isinstance(other, SchurDecomposition):
            return self._parts == other._parts
        if isinstance(other, Mapping):
            return self == SchurDecomposition({_pad(k): v for k, v in other.items()})
        return NotImplemented

    def __repr__(self) -> str:
        body = ", ".join(f"{lam}: {c}" for lam, c in self.items())
        return f"SchurDecomposition({{{body}}})"

    def __add__(self, other: SchurDecomposition) -> SchurDecomposition:
        return SchurDecomposition(list(self._parts.items()) + list(other._parts.items()))

    def __sub__(self, other: SchurDecomposition) -> SchurDecomposition:
        return SchurDecomposition(list(self._parts.items()) + [(k, -v) for k, v in other._parts.items()])

    @property
    def is_virtual(self) -> bool:
        return any(c < 0 for c in self._parts.values())

    @property
    def dim(self) -> int:
        return sum(c * weyl_dim(lam) for lam, c in self._parts.items())

    def sl3_view(self) -> Dict[Tuple[int, int], int]:
        """Labels normalized for SL(3): ``(l1 - l3, l2 - l3)``, coefficients summed."""
        out: Dict[Tuple[int, int], int] = defaultdict(int)
        for (a, b, c), k in self._parts.items():
            out[(a - c, b - c)] += k
        return {k: v for k, v in out.items() if v}

    def recompose(self) -> Character:
        return recompose(self)


def _pad(lam) -> Partition:
    lam = tuple(lam)
    if len(lam) > 3:
        raise DomainError(f"partition has more than three parts: {lam}")
    return lam + (0,) * (3 - len(lam))  # type: ignore[return-value]


def check_partition(lam) -> Partition:
    """Normalize to a length-3 tuple and validate ``l1 >= l2 >= l3 >= 0``."""
    lam = _pad(lam)
    if not all(isinstance(x, int) for x in lam):
        raise DomainError(f"partition entries must be integers: {lam}")
    if lam[2] < 0 or not (lam[0] >= lam[1] >= lam[2]):
        raise DomainError(f"not a partition (need l1 >= l2 >= l3 >= 0): {lam}")
    return lam


@lru_cache(maxsize=None)
def _schur_terms(lam: Partition) -> Tuple[Tuple[Weight, int], ...]:
    # Gelfand-Tsetlin patterns: lam / (m1, m2) / (k,) interlacing
    l1, l2, l3 = lam
    total = l1 + l2 + l3
    acc: Dict[Weight, int] = defaultdict(int)
    for m1 in range(l2, l1 + 1):
        for m2 in range(l3, l2 + 1):
            for k in range(m2, m1 + 1):
                acc[(k, m1 + m2 - k, total - m1 - m2)] += 1
    return tuple(acc.items())


def schur_char(lam) -> Character:
    """Character of the Schur functor ``S^lam E`` for ``E`` the standard rep."""
    return Character(_schur_terms(check_partition(lam)))


def weyl_dim(lam) -> int:
    l1, l2, l3 = check_partition(lam)
    return (l1 - l2 + 1) * (l2 - l3 + 1) * (l1 - l3 + 2) // 2


E = schur_char((1, 0, 0))


def sym_E(a: int) -> Character:
    """``S^a E``; zero for negative ``a``."""
    if a < 0:
        return ZERO
    return schur_char((a, 0, 0))


def tensor(x: Character, y: Character) -> Character:
    out: Dict[Weight, int] = defaultdict(int)
    for (a, b, c), m in x.items():
        for (a2, b2, c2), m2 in y.items():
            out[(a + a2, b + b2, c + c2)] += m * m2
    return Character(out)


def adams(x: Character, k: int) -> Character:
    """Adams operation: scale every weight by ``k``."""
    if k < 1:
        raise DomainError(f"Adams operation index must be positive, got {k}")
    return Character({(k * a, k * b, k * c): m for (a, b, c), m in x.items()})


def _newton(x: Character, n: int, sign: int) -> Character:
    # n h_n = sum_i psi^i h_{n-i};  n e_n = sum_i (-1)^(i-1) psi^i e_{n-i}
    if x.is_virtual:
        raise DomainError("symmetric/exterior powers need a genuine character")
    if n < 0:
        return ZERO
    powers = [TRIVIAL]
    psi = [None] + [adams(x, i) for i in range(1, n + 1)]
    for j in range(1, n + 1):
        acc: Dict[Weight, int] = defaultdict(int)
        for i in range(1, j + 1):
            s = 1 if sign > 0 or i % 2 == 1 else -1
            for w, m in tensor(psi[i], powers[j - i]).items():
                acc[w] += s * m
        terms = {}
        for w, m in acc.items():
            q, r = divmod(m, j)
            if r:
                raise InvariantViolation(f"non-integral multiplicity {m}/{j} at weight {w} in degree {j}")
            terms[w] = q
        powers.append(Character(terms))
    return powers[n]


def sym_power(x: Character, n: int) -> Character:
    """Character of ``S^n V`` for ``V`` with character ``x`` (zero if n < 0)."""
    return _newton(x, n, +1)


def ext_power(x: Character, n: int) -> Character:
    """Character of the exterior power ``Lambda^n V`` (zero if n < 0)."""
    return _newton(x, n, -1)


def decompose(x: Character) -> SchurDecomposition:
    """Write a symmetric character as a signed sum of Schur characters."""
    if not x.is_symmetric():
        raise DomainError("cannot decompose a character that is not S3-symmetric")
    rest = dict(x.items())
    parts: Dict[Partition, int] = {}
    while rest:
        lead = max(rest, key=_weight_key)
        if not (lead[0] >= lead[1] >= lead[2]):
            raise InvariantViolation(f"leading weight {lead} is not dominant")
        m = rest[lead]
        parts[lead] = m
        for w, k in _schur_terms(lead):
            v = rest.get(w, 0) - m * k
            if v:
                rest[w] = v
            else:
                rest.pop(w, None)
    return SchurDecomposition(parts)


def recompose(d: SchurDecomposition) -> Character:
    out = ZERO
    for lam, c in d.items():
        out = out + c * schur_char(lam)
    return out


def char_dim(x: Character) -> int:
    return x.dim


def sym_power_dim(dim_v: int, n: int) -> int:
    """Binomial dimension of ``S^n`` of a ``dim_v``-dimensional space."""
    if n < 0:
        return 0
    return comb(dim_v + n - 1, n)
