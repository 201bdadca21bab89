from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from strange_duality.errors import DomainError, InconsistentConstraints, InsufficientData
from strange_duality.series import (
    PAPER_SERIES,
    IntPolynomial,
    PoincareSeries,
    coefficient,
    eval_rational_poly,
    expand,
    hilbert_polynomial,
    is_palindromic,
    numerator_from_values,
    reconstruct,
    solve_exact,
)

from oracles import series_by_division, times_one_minus_t_power

N3 = PAPER_SERIES[3]
N4 = PAPER_SERIES[4]


def test_int_polynomial_trims():
    p = IntPolynomial((1, 2, 0, 0))
    assert p.coeffs == (1, 2)
    assert p.degree == 1
    assert IntPolynomial(()).degree == -1
    assert IntPolynomial((0, 0)).degree == -1
    assert p(1) == 3 and p[5] == 0


def test_coefficient_examples():
    assert coefficient(N3, 1) == 10
    assert coefficient(N3, 0) == 1
    assert coefficient(N4, 0) == 1
    assert coefficient(N3, 3) == 230


def test_coefficient_n4_by_hand():
    # Q2 + 14 Q1 + C(15,2) Q0 = 7 + 14 + 105
    assert coefficient(N4, 2) == 126
    assert coefficient(N4, 3) == 770


@pytest.mark.parametrize("s", [N3, N4, PoincareSeries(IntPolynomial((1, 3, 1)), 4, 1)])
def test_coefficients_match_power_series_division(s):
    assert expand(s, 31) == series_by_division(s.numerator.coeffs, s.dim, 31)


@pytest.mark.parametrize("s", [N3, N4])
def test_multiplying_back_gives_numerator(s):
    vals = expand(s, 31)
    back = times_one_minus_t_power(vals, s.dim + 1)
    assert back == list(s.numerator.coeffs) + [0] * (31 - len(s.numerator.coeffs))


@pytest.mark.parametrize("s", [N3, N4])
def test_finite_difference_recovers_numerator(s):
    vals = expand(s, 25)
    assert numerator_from_values(vals, s.dim + 1) == s.numerator


def test_reconstruct_n3():
    s = reconstruct(9, 2, 3, [(0, 1), (1, 10)])
    assert s.numerator.coeffs == (1, 0, 1, 0, 1)
    assert s.dim == 9 and s.delta == 2


def test_reconstruct_n4():
    s = reconstruct(13, 2, 54, [(0, 1), (1, 15), (2, 126), (3, 770)])
    assert s.numerator.coeffs == (1, 1, 7, 7, 22, 7, 7, 1, 1)


def test_reconstruct_insufficient():
    with pytest.raises(InsufficientData) as info:
        reconstruct(9, 2, 3, [(0, 1)])
    assert "insufficient data" in str(info.value)
    assert info.value.free_unknowns == (2,)


def test_reconstruct_inconsistent():
    with pytest.raises(InconsistentConstraints):
        reconstruct(9, 2, 3, [(0, 1), (1, 10), (2, 57)])
    with pytest.raises(InconsistentConstraints):
        reconstruct(9, 2, 3, [(0, 2), (1, 10)])


def test_reconstruct_non_integral():
    # 8 Q1 = 57 - 55 - 3 + 2 = 1
    with pytest.raises(InconsistentConstraints, match="non-integral"):
        reconstruct(9, 2, 3, [(0, 1), (2, 57)])


def test_reconstruct_degenerate_constant():
    s = reconstruct(5, 2, 1)
    assert s.numerator.coeffs == (1,)
    with pytest.raises(InconsistentConstraints):
        reconstruct(5, 2, 2)


def test_reconstruct_bad_input():
    with pytest.raises(DomainError):
        reconstruct(3, 2, 1)
    with pytest.raises(DomainError):
        reconstruct(9, 2, 3, [(1, 10), (1, 10)])
    with pytest.raises(DomainError):
        reconstruct(9, 2, 3, [(-1, 0)])


def test_palindromic_examples():
    assert is_palindromic(IntPolynomial((1, 0, 1, 0, 1)), 4)
    assert not is_palindromic(IntPolynomial((1, 2)), 1)
    assert is_palindromic(IntPolynomial((1, 1, 7, 7, 22, 7, 7, 1, 1)), 8)
    assert not is_palindromic(IntPolynomial((1, 0, 1, 0, 1)), 5)


def test_hilbert_polynomial_leading_coefficients():
    assert hilbert_polynomial(N3)[-1] == Fraction(3, factorial(9)) == Fraction(1, 120960)
    assert hilbert_polynomial(N4)[-1] == Fraction(54, factorial(13))
    assert hilbert_polynomial(PoincareSeries(IntPolynomial((1,)), 0, 1)) == [1]


@pytest.mark.parametrize("s", [N3, N4])
def test_hilbert_polynomial_agrees_with_coefficients(s):
    h = hilbert_polynomial(s)
    assert len(h) == s.dim + 1
    for k in range(40):
        assert eval_rational_poly(h, k) == coefficient(s, k)


@pytest.mark.parametrize("s", [N3, N4])
def test_hilbert_polynomial_vanishing_and_serre_symmetry(s):
    h = hilbert_polynomial(s)
    shift = 3 * s.delta
    for k in range(-shift + 1, 0):
        assert eval_rational_poly(h, k) == 0
    for k in range(10):
        assert eval_rational_poly(h, -k - shift) == (-1) ** s.dim * eval_rational_poly(h, k)


def test_solve_exact():
    sol, free = solve_exact([[2, 1], [1, 3]], [3, 4])
    assert sol == [1, 1] and free == []
    sol, free = solve_exact([[1, 1], [2, 2]], [1, 2])
    assert free == [1]
    with pytest.raises(InconsistentConstraints):
        solve_exact([[1, 1], [2, 2]], [1, 3])


@st.composite
def palindromic_series(draw):
    delta = draw(st.integers(1, 4))
    L = draw(st.integers(0, 8))
    D = L - 1 + 3 * delta
    if D > 13:
        L -= D - 13
        D = 13
    half = [1] + [draw(st.integers(-50, 50)) for _ in range(L // 2)]
    q = tuple(half[min(j, L - j)] for j in range(L + 1))
    return PoincareSeries(IntPolynomial(q), D, delta)


@settings(max_examples=100, deadline=None)
@given(palindromic_series(), st.integers(0, 3))
def test_reconstruct_round_trip(s, extra):
    L = s.symmetry_length
    assert s.numerator.degree == L <= 8 and s.dim <= 13
    samples = [(k, coefficient(s, k)) for k in range(L // 2 + 1 + extra)]
    r = reconstruct(s.dim, s.delta, s.numerator(1), samples)
    assert r.numerator == s.numerator
