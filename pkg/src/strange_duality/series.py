"""Poincare series ``Q(t) / (1 - t)^(D+1)`` with palindromic numerators.

For a determinant bundle on a moduli space of dimension ``D`` whose
canonical bundle is its ``-3*delta`` power, the numerator ``Q`` has integer
coefficients, degree exactly ``D + 1 - 3*delta``, satisfies
``Q_k = Q_{deg - k}``, starts with ``Q_0 = 1`` and ``Q(1)`` is the top
self-intersection number.  ``reconstruct`` recovers ``Q`` from that
number and a few section counts by exact rational elimination.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import List, Sequence, Tuple

from strange_duality.errors import DomainError, InconsistentConstraints, InsufficientData

__all__ = [
    "IntPolynomial",
    "PoincareSeries",
    "coefficient",
    "expand",
    "reconstruct",
    "hilbert_polynomial",
    "eval_rational_poly",
    "is_palindromic",
    "numerator_from_values",
    "solve_exact",
    "PAPER_SERIES",
]


@dataclass(frozen=True)
class IntPolynomial:
    """Dense integer polynomial in ``t``; ``coeffs[i]`` is the ``t^i`` coefficient."""

    coeffs: Tuple[int, ...] = ()

    def __post_init__(self):
        c = [int(x) for x in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        out = [0] * max(len(self.coeffs) + len(other.coeffs) - 1, 0)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(tuple(out))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if mono and c in (1, -1):
                coef = "-" if c < 0 else ""
            else:
                coef = str(c)
            terms.append(coef + mono)
        return " + ".join(terms).replace("+ -", "- ")


@dataclass(frozen=True)
class PoincareSeries:
    numerator: IntPolynomial
    dim: int
    delta: int = 1

    @property
    def symmetry_length(self) -> int:
        """Expected numerator degree ``D + 1 - 3*delta``."""
        return self.dim + 1 - 3 * self.delta


def coefficient(s: PoincareSeries, k: int) -> int:
    """Coefficient of ``t^k`` in the expansion of ``s``."""
    if k < 0:
        raise DomainError(f"series coefficient index must be >= 0, got {k}")
    D = s.dim
    q = s.numerator
    return sum(q[j] * comb(k - j + D, D) for j in range(min(k, q.degree) + 1))


def expand(s: PoincareSeries, n_terms: int) -> List[int]:
    return [coefficient(s, k) for k in range(n_terms)]


def is_palindromic(p: IntPolynomial, length: int) -> bool:
    """True when ``p_k == p_{length-k}`` for every k (so ``deg p <= length``)."""
    if length < 0:
        return not p.coeffs
    if p.degree > length:
        return False
    return all(p[k] == p[length - k] for k in range(length + 1))


def numerator_from_values(values: Sequence[int], m: int) -> IntPolynomial:
    """Multiply the coefficient stream by ``(1 - t)^m``, truncated to ``len(values)``.

    ``Q_k = sum_i (-1)^i C(m, i) h(k - i)`` with ``h(j) = 0`` for ``j < 0``.
    """
    out = []
    for k in range(len(values)):
        out.append(sum((-1) ** i * comb(m, i) * values[k - i] for i in range(min(m, k) + 1)))
    return IntPolynomial(tuple(out))


def solve_exact(rows: Sequence[Sequence], rhs: Sequence) -> Tuple[List[Fraction], List[int]]:
    """Exact Gauss-Jordan elimination over Q.

    Returns ``(solution, free_columns)``; free variables are set to zero.
    Raises InconsistentConstraints if the system has no solution.
    """
    n = len(rows[0]) if rows else 0
    a = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    pivots = []
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, len(a)) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][col]
        a[r] = [x / p for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(col)
        r += 1
    for row in a[r:]:
        if row[-1] != 0:
            raise InconsistentConstraints("inconsistent constraints: linear system has no solution")
    sol = [Fraction(0)] * n
    for i, col in enumerate(pivots):
        sol[col] = a[i][-1]
    free = [c for c in range(n) if c not in pivots]
    return sol, free


def reconstruct(D: int, delta: int, q_at_1: int, samples: Sequence[Tuple[int, int]] = ()) -> PoincareSeries:
    """Recover the palindromic numerator of degree ``D + 1 - 3*delta``.

    Unknowns are the independent coefficients ``Q_0 .. Q_{L//2}``.
    Constraints: ``Q_0 = 1``, ``Q(1) = q_at_1`` and one equation per
    ``(k, h0)`` sample, ``sum_j Q_j C(k - j + D, D) = h0``.  Redundant
    equations must be consistent.
    """
    if D < 0 or delta < 1:
        raise DomainError(f"need D >= 0 and delta >= 1, got D={D}, delta={delta}")
    L = D + 1 - 3 * delta
    if L < 0:
        raise DomainError(f"numerator degree D + 1 - 3*delta = {L} is negative")
    ks = [k for k, _ in samples]
    if any(k < 0 for k in ks) or len(set(ks)) != len(ks):
        raise DomainError(f"sample indices must be distinct and >= 0: {ks}")

    n_unknowns = L // 2 + 1

    def fold(full: Sequence[int]) -> List[int]:
        # coefficient row over Q_0..Q_L -> row over the independent half
        row = [0] * n_unknowns
        for j, v in enumerate(full):
            row[min(j, L - j)] += v
        return row

    rows, rhs = [], []
    rows.append(fold([1] + [0] * L))
    rhs.append(1)
    rows.append(fold([1] * (L + 1)))
    rhs.append(q_at_1)
    for k, h0 in samples:
        rows.append(fold([comb(k - j + D, D) if j <= k else 0 for j in range(L + 1)]))
        rhs.append(h0)

    sol, free = solve_exact(rows, rhs)
    if free:
        names = ", ".join(f"Q_{j}" for j in free)
        raise InsufficientData(
            f"insufficient data: {len(free)} degree(s) of freedom remain ({names})",
            free_unknowns=free,
        )
    if any(x.denominator != 1 for x in sol):
        raise InconsistentConstraints(f"inconsistent constraints: non-integral solution {[str(x) for x in sol]}")
    half = [int(x) for x in sol]
    q = IntPolynomial(tuple(half[min(j, L - j)] for j in range(L + 1)))
    if q.degree != L or not is_palindromic(q, L):
        raise InconsistentConstraints(f"reconstructed numerator {q} is not palindromic of degree {L}")
    return PoincareSeries(q, D, delta)


def _poly_mul(p: List[Fraction], q: List[Fraction]) -> List[Fraction]:
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def hilbert_polynomial(s: PoincareSeries) -> List[Fraction]:
    """Coefficients (ascending powers of k) of ``h(k) = sum_j Q_j C(k - j + D, D)``."""
    D = s.dim
    total = [Fraction(0)] * (D + 1)
    scale = Fraction(1, factorial(D))
    for j, qj in enumerate(s.numerator.coeffs):
        if qj == 0:
            continue
        # C(k - j + D, D) = prod_{i=1..D} (k - j + i) / D!
        p = [Fraction(1)]
        for i in range(1, D + 1):
            p = _poly_mul(p, [Fraction(i - j), Fraction(1)])
        for e, c in enumerate(p):
            total[e] += qj * c * scale
    return total


def eval_rational_poly(coeffs: Sequence[Fraction], k) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * k + c
    return acc


# Poincare series of the Donaldson bundle on M_(2,0,2-n) for n = 3, 4.
PAPER_SERIES = {
    3: PoincareSeries(IntPolynomial((1, 0, 1, 0, 1)), 9, 2),
    4: PoincareSeries(IntPolynomial((1, 1, 7, 7, 22, 7, 7, 1, 1)), 13, 2),
}
