"""Resultants, discriminants and the closed-form discriminant formulas.

Univariate resultants run the subresultant remainder sequence over the
integers after clearing denominators.  Resultants of ``BivarPoly`` objects
with respect to ``z`` are obtained by specializing ``x`` at integer points
and interpolating; the same subresultant routine can also be run directly
over Q[x] (``method="subresultant"``).  The Sylvester determinant is kept
as an independent oracle.
"""
from __future__ import annotations

import enum
import operator
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .factor import FactoredInt, small_prime_factors
from .polycore import BivarPoly, RatPoly, as_fraction

__all__ = [
    "resultant",
    "disc",
    "resultant_z",
    "disc_z",
    "sylvester_matrix",
    "bareiss_det",
    "sylvester_resultant",
    "sylvester_resultant_z",
    "Recurrence",
    "recurrence_polys",
    "schur_product",
    "schur_bruteforce",
    "ClosedFormKind",
    "closed_form",
    "allowed_primes",
    "SupportVerdict",
    "support_check",
]


def _int_exquo(a: int, b: int) -> int:
    q, r = divmod(a, b)
    if r:
        raise ArithmeticError(f"inexact integer division {a} / {b}")
    return q


def _trim(cs: list) -> list:
    while cs and not cs[-1]:
        cs.pop()
    return cs


def _prem(A: list, B: list) -> list:
    """Pseudo-remainder lc(B)**(deg A - deg B + 1) * A mod B (ascending lists)."""
    db = len(B) - 1
    lb = B[-1]
    R = list(A)
    e = len(A) - len(B) + 1
    while R and len(R) - 1 >= db:
        lr = R[-1]
        off = len(R) - 1 - db
        R = [lb * c for c in R]
        for i in range(db + 1):
            R[off + i] = R[off + i] - lr * B[i]
        R = _trim(R)
        e -= 1
    if e > 0 and R:
        f = lb**e
        R = [f * c for c in R]
    return R


def _subresultant(A: Sequence, B: Sequence, exquo: Callable, zero, one):
    """Resultant of two nonzero coefficient lists over an integral domain.

    Collins-Brown subresultant sequence; ``exquo`` is exact division in the
    coefficient domain.
    """
    A, B = _trim(list(A)), _trim(list(B))
    da, db = len(A) - 1, len(B) - 1
    s = 1
    if da < db:
        A, B, da, db = B, A, db, da
        if da % 2 and db % 2:
            s = -1
    if db == 0:
        return s * B[0] ** da
    g = h = one
    while True:
        delta = da - db
        if da % 2 and db % 2:
            s = -s
        R = _prem(A, B)
        if not R:
            return zero
        A = B
        B = [exquo(c, g * h**delta) for c in R]
        da, db = db, len(B) - 1
        g = A[-1]
        if delta == 1:
            h = g
        elif delta > 1:
            h = exquo(g**delta, h ** (delta - 1))
        if db == 0:
            if da == 1:
                return s * B[0]
            return s * exquo(B[0] ** da, h ** (da - 1))


def resultant(p: RatPoly, q: RatPoly) -> Fraction:
    """Res_x(p, q) = lc(p)**deg(q) * prod q(r) over roots r of p."""
    if not p or not q:
        raise ValueError("resultant of the zero polynomial is undefined")
    mp, P = p.clear_denominators()
    mq, Q = q.clear_denominators()
    r = _subresultant(P.integer_coeffs(), Q.integer_coeffs(), _int_exquo, 0, 1)
    return Fraction(r, mp**q.degree * mq**p.degree)


def disc(p: RatPoly) -> Fraction:
    """Discriminant via (-1)**(d(d-1)/2) * Res(p, p') / lc(p).

    Degree 1 gives 1 (empty product of root differences).
    """
    d = p.degree
    if d < 1:
        raise ValueError("discriminant needs degree >= 1")
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return sign * resultant(p, p.derivative()) / p.lc


# -- resultants in z of bivariate polynomials ------------------------------------


def _interpolate(points: list[tuple[Fraction, Fraction]]) -> RatPoly:
    # Newton divided differences, then expansion into the monomial basis
    xs = [x for x, _ in points]
    coef = [y for _, y in points]
    n = len(points)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    poly = RatPoly.constant(coef[-1])
    for i in range(n - 2, -1, -1):
        poly = poly * RatPoly([-xs[i], 1]) + coef[i]
    return poly


def _resultant_z_interp(P: BivarPoly, Q: BivarPoly) -> RatPoly:
    bound = Q.degree_z * max(P.degree_x, 0) + P.degree_z * max(Q.degree_x, 0)
    lcP, lcQ = P.lc_z, Q.lc_z
    points = []
    x0 = 0
    while len(points) < bound + 1:
        if lcP.evaluate(x0) and lcQ.evaluate(x0):
            points.append((Fraction(x0), resultant(P.subs_x(x0), Q.subs_x(x0))))
        x0 = -x0 if x0 > 0 else 1 - x0  # 0, 1, -1, 2, -2, ...
    return _interpolate(points)


def _resultant_z_direct(P: BivarPoly, Q: BivarPoly) -> RatPoly:
    return _subresultant(P.zcoeffs, Q.zcoeffs, RatPoly.exquo, RatPoly(), RatPoly.constant(1))


def resultant_z(P: BivarPoly, Q: BivarPoly, method: str = "interp") -> RatPoly:
    """Res_z(P, Q) as a polynomial in x.

    ``interp`` specializes x at integer points where neither leading
    z-coefficient vanishes and interpolates; ``subresultant`` runs the
    remainder sequence over Q[x].
    """
    if not P or not Q:
        raise ValueError("resultant of the zero polynomial is undefined")
    if P.degree_z == 0 and Q.degree_z == 0:
        return RatPoly.constant(1)
    if method == "interp":
        return _resultant_z_interp(P, Q)
    if method == "subresultant":
        r = _resultant_z_direct(P, Q)
        return r if isinstance(r, RatPoly) else RatPoly.constant(r)
    raise ValueError(f"unknown resultant method {method!r}")


def disc_z(P: BivarPoly, method: str = "interp") -> RatPoly:
    """Discriminant of P with respect to z, as a polynomial in x."""
    d = P.degree_z
    if d < 1:
        raise ValueError("discriminant needs z-degree >= 1")
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    res = resultant_z(P, P.derivative_z(), method=method)
    return res.exquo(P.lc_z) * sign


# -- Sylvester oracle --------------------------------------------------------------


def sylvester_matrix(a: Sequence, b: Sequence, zero=0) -> list[list]:
    """Sylvester matrix of two ascending coefficient lists."""
    m, n = len(a) - 1, len(b) - 1
    size = m + n
    rows = []
    for i in range(n):
        row = [zero] * size
        for k, c in enumerate(reversed(a)):
            row[i + k] = c
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for k, c in enumerate(reversed(b)):
            row[i + k] = c
        rows.append(row)
    return rows


def bareiss_det(M: list[list], exquo: Callable = _int_exquo, zero=0, one=1):
    """Fraction-free determinant (Bareiss) over an integral domain."""
    M = [list(r) for r in M]
    n = len(M)
    if n == 0:
        return one
    sign, prev = 1, one
    for k in range(n - 1):
        if not M[k][k]:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return zero
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = exquo(M[i][j] * M[k][k] - M[i][k] * M[k][j], prev)
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def sylvester_resultant(p: RatPoly, q: RatPoly) -> Fraction:
    return as_fraction(bareiss_det(sylvester_matrix(p.coeffs, q.coeffs, Fraction(0)),
                                   operator.truediv, Fraction(0), Fraction(1)))


def sylvester_resultant_z(P: BivarPoly, Q: BivarPoly) -> RatPoly:
    M = sylvester_matrix(P.zcoeffs, Q.zcoeffs, RatPoly())
    r = bareiss_det(M, RatPoly.exquo, RatPoly(), RatPoly.constant(1))
    return r if isinstance(r, RatPoly) else RatPoly.constant(r)


# -- Schur's product formula ---------------------------------------------------------


@dataclass(frozen=True)
class Recurrence:
    """p_k = (a_k x + b_k) p_{k-1} - c_k p_{k-2}, p_0 = 1, p_{-1} = 0.

    Sequences are 1-indexed in meaning: ``a[0]`` is a_1.  c_1 never
    contributes.
    """

    a: tuple
    b: tuple
    c: tuple

    def __init__(self, a, b, c):
        object.__setattr__(self, "a", tuple(as_fraction(v) for v in a))
        object.__setattr__(self, "b", tuple(as_fraction(v) for v in b))
        object.__setattr__(self, "c", tuple(as_fraction(v) for v in c))

    def check(self, n: int) -> None:
        if min(len(self.a), len(self.b), len(self.c)) < n:
            raise ValueError(f"recurrence data shorter than n={n}")
        for j in range(1, n + 1):
            if not self.a[j - 1]:
                raise ValueError(f"a_{j} = 0 violates the hypothesis a_j != 0")
            if j > 1 and not self.c[j - 1]:
                raise ValueError(f"c_{j} = 0 violates the hypothesis c_j != 0")

    @classmethod
    def chebyshev_u(cls, n: int) -> "Recurrence":
        return cls([2] * n, [0] * n, [1] * n)


def recurrence_polys(r: Recurrence, n: int) -> list[RatPoly]:
    """[p_0, ..., p_n] from the three-term recurrence."""
    polys = [RatPoly.constant(1)]
    prev = RatPoly()
    for k in range(1, n + 1):
        nxt = RatPoly([r.b[k - 1], r.a[k - 1]]) * polys[-1] - prev * r.c[k - 1]
        prev = polys[-1]
        polys.append(nxt)
    return polys


def schur_product(r: Recurrence, n: int) -> Fraction:
    """Closed form of prod p_{n-1}(x_i) over the roots x_i of p_n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    r.check(n)
    val = Fraction(-1 if (n * (n - 1) // 2) % 2 else 1)
    for j in range(1, n + 1):
        val *= r.a[j - 1] ** (n - 2 * j + 1)
        if j > 1:
            val *= r.c[j - 1] ** (j - 1)
    return val


def schur_bruteforce(r: Recurrence, n: int) -> Fraction:
    """Same product via Res(p_n, p_{n-1}) / lc(p_n)**(n-1)."""
    r.check(n)
    polys = recurrence_polys(r, n)
    pn, pm = polys[n], polys[n - 1]
    return resultant(pn, pm) / pn.lc ** pm.degree


# -- closed forms ----------------------------------------------------------------------


class ClosedFormKind(enum.Enum):
    DISC_T = "DiscT"
    DISC_U = "DiscU"
    DISC_UPRIME_SQRT = "DiscUprimeSqrt"
    DISC_MUTT_RAW = "DiscMuttRaw"


def closed_form(kind: ClosedFormKind | str, n: int) -> Fraction:
    """Exact value of a closed-form discriminant formula.

    Negative exponents are evaluated as exact rationals.  The Mutt formula
    is returned as a magnitude.
    """
    kind = ClosedFormKind(kind)
    F = Fraction
    if n < 1:
        raise ValueError("n must be >= 1")
    if kind is ClosedFormKind.DISC_T:
        return F(2) ** ((n - 1) ** 2) * F(n) ** n
    if kind is ClosedFormKind.DISC_U:
        return F(2) ** (n * n) * F(n + 1) ** (n - 2)
    if kind is ClosedFormKind.DISC_UPRIME_SQRT:
        return (3 * F(2 * n + 1) ** (n - 2) * F(2 * n - 1) ** (n - 3)
                * F(n) ** (n - 3) * F(2) ** (2 * n * n - 3 * n - 1))
    return (F(2 * n - 1) ** (n - 3) * F(2 * n + 1) ** (n - 2)
            * F(2) ** (2 * n * n - n - 5) * 3 * F(n) ** (n - 3))


# -- prime support -------------------------------------------------------------------


def allowed_primes(n: int) -> frozenset[int]:
    """{2, 3} together with the primes of n, 2n-1 and 2n+1."""
    out = {2, 3}
    for m in (n, 2 * n - 1, 2 * n + 1):
        out |= small_prime_factors(m)
    return frozenset(out)


@dataclass(frozen=True)
class SupportVerdict:
    subset_ok: bool
    primes: frozenset
    reference: frozenset
    symmetric_difference: frozenset

    @property
    def equal(self) -> bool:
        return not self.symmetric_difference

    def to_json(self) -> dict:
        return {
            "subset_ok": self.subset_ok,
            "primes": sorted(self.primes),
            "reference": sorted(self.reference),
            "symmetric_difference": sorted(self.symmetric_difference),
        }


def support_check(f: FactoredInt, n: int, reference: FactoredInt | None = None) -> SupportVerdict:
    """Compare the prime support of ``f`` with the allowed set for ``n``.

    ``subset_ok`` is always judged against ``allowed_primes(n)``; the
    symmetric difference is taken against ``reference``'s primes when
    given, else against the allowed set.
    """
    allowed = allowed_primes(n)
    ref = reference.primes if reference is not None else allowed
    return SupportVerdict(
        subset_ok=f.primes <= allowed,
        primes=f.primes,
        reference=frozenset(ref),
        symmetric_difference=frozenset(f.primes ^ ref),
    )
