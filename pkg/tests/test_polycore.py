from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chebdisc.chebyshev import T, U
from chebdisc.polycore import BivarPoly, RatPoly, parse_rational

small_int = st.integers(-9, 9)
polys = st.lists(small_int, max_size=7).map(RatPoly)
rationals = st.fractions(min_value=-5, max_value=5, max_denominator=12)


def P(*cs):
    return RatPoly(cs)


class TestConstruction:
    def test_trailing_zeros_trimmed(self):
        assert P(1, 2, 0, 0).degree == 1
        assert RatPoly().degree == -1
        assert P(0, 0) == RatPoly()

    def test_coefficients_are_fractions(self):
        p = P(1, "3/4")
        assert p.coeffs == (F(1), F(3, 4))

    def test_rejects_floats(self):
        with pytest.raises(TypeError):
            RatPoly([0.5])

    def test_str(self):
        assert str(P(-1, 0, 4)) == "4*x^2 - 1"
        assert str(RatPoly()) == "0"

    def test_json_roundtrip(self):
        p = P(F(-3, 4), 0, 7)
        assert p.to_json() == ["-3/4", "0", "7"]
        assert RatPoly.from_json(p.to_json()) == p

    def test_parse_rational(self):
        assert parse_rational(" -12/8 ") == F(-3, 2)
        with pytest.raises(ValueError):
            parse_rational("1/0")


class TestRingOps:
    def test_difference_of_squares(self):
        assert P(1, 1) * P(-1, 1) == P(-1, 0, 1)

    def test_identity(self):
        assert T(2) * 1 == T(2)
        assert T(2) * P(1) == T(2)

    def test_cheb_combination(self):
        got = T(13) * 11 + T(11) * 13
        want = RatPoly.from_json(
            ["0", "0", "0", "-1144", "0", "16016", "0", "-73216", "0", "146432", "0", "-133120", "0", "45056"]
        )
        assert got == want

    def test_divmod(self):
        q, r = divmod(P(-1, 0, 1), P(-1, 1))
        assert q == P(1, 1) and r == RatPoly()
        q, r = divmod(P(1, 0, 1), P(0, 2))
        assert q == P(0, F(1, 2)) and r == P(1)

    def test_exquo_raises_on_remainder(self):
        with pytest.raises(ArithmeticError):
            P(1, 0, 1).exquo(P(-1, 1))

    def test_gcd(self):
        a = P(-1, 1) * P(2, 1)
        b = P(-1, 1) * P(5, 3)
        assert a.gcd(b) == P(-1, 1)

    @given(polys, polys, polys)
    def test_ring_axioms(self, p, q, r):
        assert p + q == q + p
        assert p * q == q * p
        assert (p + q) + r == p + (q + r)
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r
        assert p - p == RatPoly()

    @given(polys, polys)
    def test_degree_of_product(self, p, q):
        if p and q:
            assert (p * q).degree == p.degree + q.degree
        assert (p + q).degree <= max(p.degree, q.degree)

    @given(polys, polys.filter(bool))
    def test_division_identity(self, a, b):
        q, r = divmod(a, b)
        assert q * b + r == a
        assert r.degree < b.degree


class TestCalculus:
    def test_derivative(self):
        assert P(0, -3, 0, 4).derivative() == P(-3, 0, 12)
        assert T(3).derivative() == U(2) * 3
        assert U(5).derivative() == P(6, 0, -96, 0, 160)

    def test_integrate(self):
        assert P(0, 0, 2).integrate() == P(0, 0, 0, F(2, 3))
        assert RatPoly().integrate() == RatPoly()

    def test_integrate_sum_identity_n1(self):
        lhs = (P(0, 1) * U(1)).integrate() * (2 * 1 * 3)
        assert lhs == P(0, 0, 0, 4)
        assert lhs == T(3) + T(1) * 3

    @given(polys)
    def test_derivative_inverts_integrate(self, p):
        assert p.integrate().derivative() == p
        assert p.integrate().coeff(0) == 0

    def test_evaluate(self):
        assert T(5).evaluate(1) == 1
        assert U(11).derivative().evaluate(1) == 572
        assert RatPoly().evaluate(F(7, 3)) == 0

    @given(polys, polys, rationals)
    def test_evaluate_multiplicative(self, p, q, x0):
        assert (p * q).evaluate(x0) == p.evaluate(x0) * q.evaluate(x0)


class TestIntegerStructure:
    def test_content_primitive(self):
        c, pp = P(254, -19040, 39200).content_primitive()
        assert c == 2 and pp == P(127, -9520, 19600)

    def test_content_primitive_mutt6(self):
        raw = P(-1144, 16016, -73216, 146432, -133120, 45056)
        c, pp = raw.content_primitive()
        assert c == 8
        assert pp == P(-143, 2002, -9152, 18304, -16640, 5632)

    def test_content_constant(self):
        assert P(7).content_primitive() == (F(7), P(1))

    def test_content_negative_leading(self):
        c, pp = P(2, -4).content_primitive()
        assert c == -2 and pp == P(-1, 2)

    def test_content_rational(self):
        c, pp = P(F(1, 2), F(1, 3)).content_primitive()
        assert pp == P(3, 2) and c == F(1, 6)

    def test_content_zero(self):
        with pytest.raises(ValueError, match="zero has no primitive part"):
            RatPoly().content_primitive()

    @given(polys.filter(bool))
    def test_content_roundtrip(self, p):
        from functools import reduce
        from math import gcd

        c, pp = p.content_primitive()
        assert c * pp == p
        assert pp.is_integral() and pp.lc > 0
        assert reduce(gcd, pp.integer_coeffs()) == 1


class TestEvenPart:
    def test_monomial(self):
        assert P(0, 0, 0, 1).even_part_extract("odd", 3) == P(1)

    def test_uprime(self):
        q = U(11).derivative().even_part_extract("even", 0)
        assert q.degree == 5 and q.lc == 22528

    def test_r2(self):
        assert P(0, 0, 0, -40, 0, 48).even_part_extract("odd", 3) == P(-40, 48)

    def test_parity_violation_names_monomial(self):
        with pytest.raises(ValueError, match=r"z\^2"):
            P(0, 1, 5).even_part_extract("odd", 1)

    def test_divisibility_violation(self):
        with pytest.raises(ValueError, match=r"z\^1 is not divisible by z\^3"):
            P(0, 1, 0, 1).even_part_extract("odd", 3)

    @given(st.lists(small_int, max_size=4), st.sampled_from([0, 1, 2, 3]))
    def test_resubstitution(self, qs, drop):
        q = RatPoly(qs)
        p = q.compose(P(0, 0, 1)) * RatPoly.monomial(drop)
        parity = "even" if drop % 2 == 0 else "odd"
        assert p.even_part_extract(parity, drop) == q


class TestShift:
    def test_zero_shift(self):
        assert T(4).shift(0) == T(4)

    def test_jeff3_step(self):
        got = P(6, -96, 160).shift(F(2, 35))
        assert got == P(F(254, 245), F(-544, 7), 160)

    def test_square(self):
        assert P(0, 0, 1).shift(1) == P(1, 2, 1)

    @given(polys, rationals)
    def test_shift_inverse(self, p, a):
        assert p.shift(a).shift(-a) == p

    @given(polys, rationals, rationals)
    def test_shift_matches_compose(self, p, a, x0):
        assert p.shift(a).evaluate(x0) == p.evaluate(x0 + a)


class TestBivar:
    def test_ops(self):
        x = RatPoly.x()
        A = BivarPoly([x, 0, -1])  # x - z^2
        B = BivarPoly([x, 0, 1])
        assert (A * B) == BivarPoly([x * x, 0, RatPoly(), 0, -1])
        assert A + B == BivarPoly([x * 2])
        assert A.degree_z == 2 and A.degree_x == 1

    def test_reflect_and_subs(self):
        x = RatPoly.x()
        A = BivarPoly([x, x, 1])
        assert A.reflect_z() == BivarPoly([x, -x, 1])
        assert A.subs_x(2) == P(2, 2, 1)
        assert A.subs_z(3) == P(9, 4)

    def test_calculus(self):
        x = RatPoly.x()
        A = BivarPoly([x, 0, -1])
        assert A.integrate_z().derivative_z() == A
        assert A.derivative_x() == BivarPoly([P(1)])

    def test_json(self):
        A = BivarPoly([RatPoly.x(), 0, F(-2, 3)])
        assert BivarPoly.from_json(A.to_json()) == A
