"""The transform (S U_{2n-1})(z) and the Mutt and Jeff polynomials.

For p = U_{2n-1} the transform

    (Sp)(z) = 1/2 * integral_{-z}^{z} p'(t) (x - t^2) dt

is a polynomial in z with coefficients linear in x.  Its z-discriminant is
a constant times x^3 * M(x)^2 * J(x)^2, where M (Mutt) comes from
R(x) = (2n-1) T_{2n+1}(x) + (2n+1) T_{2n-1}(x) and J (Jeff) has the roots
zeta^2 - 2/((2n+1)(2n-1)) for the positive critical points zeta of U_{2n-1}.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .chebyshev import T, U
from .discriminant import disc_z, resultant_z
from .polycore import BivarPoly, RatPoly

__all__ = [
    "ConstructionError",
    "StructureError",
    "DecompositionResult",
    "MuttJeffSet",
    "jeff_shift",
    "transform_su",
    "transform_su_closed",
    "transform_su_integral",
    "su_integral",
    "poly_r",
    "mutt",
    "uprime_sqrt",
    "jeff",
    "decompose",
    "jeff_oracle",
    "disc_z_structure",
    "pointmass_disc_check",
    "build",
]


class ConstructionError(RuntimeError):
    """Two independent construction routes disagree."""


class StructureError(ArithmeticError):
    """A claimed factorization does not hold exactly."""

    def __init__(self, message: str, residual: RatPoly):
        super().__init__(f"{message}: residual factor {residual}")
        self.residual = residual


@dataclass(frozen=True)
class DecompositionResult:
    n: int
    constant: Fraction
    parts: tuple[tuple[RatPoly, int], ...]

    def expand(self) -> RatPoly:
        out = RatPoly.constant(self.constant)
        for p, e in self.parts:
            out = out * p**e
        return out


def _check_n(n: int, least: int = 1) -> None:
    if not isinstance(n, int) or n < least:
        raise ValueError(f"n must be an integer >= {least}, got {n!r}")


def jeff_shift(n: int) -> Fraction:
    """2/((2n+1)(2n-1)), the gap between zeta^2 and the matching J root."""
    return Fraction(2, (2 * n + 1) * (2 * n - 1))


_X = RatPoly.x()


def transform_su_closed(n: int) -> BivarPoly:
    """(x - z^2) U_{2n-1}(z) + T_{2n+1}(z)/(2n+1) + T_{2n-1}(z)/(2n-1)."""
    _check_n(n)
    u = U(2 * n - 1)
    x_minus_z2 = BivarPoly([_X, 0, -1])
    tail = T(2 * n + 1) / (2 * n + 1) + T(2 * n - 1) / (2 * n - 1)
    return x_minus_z2 * BivarPoly.from_z(u) + BivarPoly.from_z(tail)


def su_integral(p: RatPoly) -> BivarPoly:
    """(Sp)(z) by formal integration of p'(t)(x - t^2) over [-z, z], halved."""
    integrand = BivarPoly.from_z(p.derivative()) * BivarPoly([_X, 0, -1])
    F = integrand.integrate_z()
    return (F - F.reflect_z()) / 2


def transform_su_integral(n: int) -> BivarPoly:
    _check_n(n)
    return su_integral(U(2 * n - 1))


def transform_su(n: int) -> BivarPoly:
    """(S U_{2n-1})(z), built by both routes and cross-checked."""
    closed = transform_su_closed(n)
    direct = transform_su_integral(n)
    if closed != direct:
        raise ConstructionError(f"transform routes disagree at n={n}")
    return closed


def poly_r(n: int) -> RatPoly:
    """R(x) = (2n-1) T_{2n+1}(x) + (2n+1) T_{2n-1}(x)."""
    _check_n(n)
    return T(2 * n + 1) * (2 * n - 1) + T(2 * n - 1) * (2 * n + 1)


def mutt(n: int) -> tuple[RatPoly, RatPoly]:
    """Return (raw, primitive) Mutt polynomials.

    raw(x) = R(sqrt x) / x^{3/2}, with leading coefficient (2n-1) 2^{2n};
    the primitive part is the conventional normalization for display.
    """
    raw = poly_r(n).even_part_extract("odd", 3)
    return raw, raw.primitive()


def uprime_sqrt(n: int) -> RatPoly:
    """U'_{2n-1}(sqrt x) as a polynomial of degree n-1 in x."""
    _check_n(n)
    return U(2 * n - 1).derivative().even_part_extract("even", 0)


def jeff(n: int) -> RatPoly:
    """Jeff polynomial: primitive, positive leading coefficient, degree n-1."""
    _check_n(n)
    if n == 1:
        return RatPoly.constant(1)
    return uprime_sqrt(n).shift(jeff_shift(n)).primitive()


def decompose(n: int, target: RatPoly, parts: Sequence[tuple[RatPoly, int]], label: str = "") -> DecompositionResult:
    """Write ``target`` exactly as constant * prod(part**e).

    Raises StructureError if some part does not divide or if a non-constant
    factor is left over.
    """
    q = target
    for p, e in parts:
        for _ in range(e):
            q, r = divmod(q, p)
            if r:
                raise StructureError(f"{label or 'decomposition'} at n={n}: {p} does not divide", r)
    if not q.is_constant() or q.is_zero():
        raise StructureError(f"{label or 'decomposition'} at n={n} leaves a non-constant quotient", q)
    return DecompositionResult(n, q.coeff(0), tuple(parts))


def _su_integral_scaled(n: int) -> BivarPoly:
    # (2n+1)(2n-1) * SU has integer coefficients
    return transform_su(n) * ((2 * n + 1) * (2 * n - 1))


def jeff_oracle(n: int, method: str = "interp") -> DecompositionResult:
    """Res_z((2n+1)(2n-1) SU, U'_{2n-1}(z)) = constant * J(x)^2."""
    _check_n(n, 2)
    res = resultant_z(_su_integral_scaled(n), BivarPoly.from_z(U(2 * n - 1).derivative()), method=method)
    try:
        return decompose(n, res, [(jeff(n), 2)], "Jeff oracle")
    except StructureError as exc:
        raise StructureError("Jeff oracle mismatch", exc.residual) from exc


def disc_z_structure(n: int, method: str = "interp") -> DecompositionResult:
    """Disc_z((2n+1)(2n-1) SU) = constant * x^3 * M_raw(x)^2 * J(x)^2."""
    _check_n(n, 2)
    d = disc_z(_su_integral_scaled(n), method=method)
    raw, _ = mutt(n)
    return decompose(n, d, [(_X, 3), (raw, 2), (jeff(n), 2)], "Disc_z structure")


def pointmass_disc_check(n: int, method: str = "interp") -> DecompositionResult:
    """Disc_t(U'_{2n-1}(t) (x - t^2)) = constant * x * U'_{2n-1}(sqrt x)^4."""
    _check_n(n)
    P = BivarPoly.from_z(U(2 * n - 1).derivative()) * BivarPoly([_X, 0, -1])
    d = disc_z(P, method=method)
    return decompose(n, d, [(_X, 1), (uprime_sqrt(n), 4)], "point-mass discriminant")


@dataclass(frozen=True)
class MuttJeffSet:
    n: int
    SU: BivarPoly
    R: RatPoly
    mutt_raw: RatPoly
    mutt_prim: RatPoly
    uprime_sqrt: RatPoly
    jeff: RatPoly


def build(n: int) -> MuttJeffSet:
    raw, prim = mutt(n)
    return MuttJeffSet(n, transform_su(n), poly_r(n), raw, prim, uprime_sqrt(n), jeff(n))
