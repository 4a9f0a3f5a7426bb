import pytest

from chebdisc.chebyshev import ChebKind, T, U, cheb
from chebdisc.polycore import RatPoly

X = RatPoly.x()


def test_base_cases():
    assert cheb(ChebKind.FIRST, 0) == RatPoly([1])
    assert cheb(ChebKind.FIRST, 1) == X
    assert cheb("U", 2) == RatPoly([-1, 0, 4])


def test_t5():
    assert T(5) == RatPoly([0, 5, 0, -20, 0, 16])


def test_negative_index():
    with pytest.raises(ValueError):
        cheb("T", -1)


@pytest.mark.parametrize("n", range(1, 31))
def test_leading_coefficients(n):
    assert T(n).lc == 2 ** (n - 1) and T(n).degree == n
    assert U(n).lc == 2**n and U(n).degree == n
    assert T(n).is_integral() and U(n).is_integral()


@pytest.mark.parametrize("n", range(2, 31))
def test_section2_identities(n):
    assert T(n).derivative() == U(n - 1) * n
    assert (X * X - 1) * U(n).derivative() == T(n + 1) * (n + 1) - X * U(n)
    assert T(n) == (U(n) - U(n - 2)) / 2
    assert T(n) == U(n) - X * U(n - 1)
    assert T(n) == X * T(n - 1) - (1 - X * X) * U(n - 2)


@pytest.mark.parametrize("n", range(1, 16))
def test_second_derivative_identity(n):
    u = U(2 * n - 1)
    d1 = u.derivative()
    d2 = d1.derivative()
    assert (X * X - 1) * d2 == X * d1 * (-3) + u * ((2 * n) ** 2 - 1)


def test_values_at_one():
    # independent closed forms T_n(1) = 1, U_n(1) = n + 1, U'_m(1) = m(m+1)(m+2)/3
    for n in range(12):
        assert T(n).evaluate(1) == 1
        assert U(n).evaluate(1) == n + 1
        assert U(n).derivative().evaluate(1) * 3 == n * (n + 1) * (n + 2)
