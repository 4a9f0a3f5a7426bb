"""Exact dense polynomials over the rationals.

``RatPoly`` is a univariate polynomial with :class:`fractions.Fraction`
coefficients stored in ascending degree.  ``BivarPoly`` is a polynomial in
``z`` whose coefficients are ``RatPoly`` objects in ``x``.  Both are
immutable; every operation returns a new object.
"""
from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from numbers import Rational
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]

__all__ = ["RatPoly", "BivarPoly", "as_fraction", "parse_rational"]


def as_fraction(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, (int, Rational, str)):
        return Fraction(v)
    raise TypeError(f"expected an exact rational, got {type(v).__name__}")


def parse_rational(text: str) -> Fraction:
    """Parse ``"17"`` or ``"-3/4"`` into a Fraction."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not an exact rational: {text!r}") from exc


def _trim(cs: list) -> list:
    while cs and not cs[-1]:
        cs.pop()
    return cs


class RatPoly:
    """Dense univariate polynomial with exact rational coefficients."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable = ()):
        self._c = tuple(_trim([as_fraction(c) for c in coeffs]))

    @classmethod
    def _raw(cls, cs: list) -> "RatPoly":
        # cs: list of Fractions, caller guarantees types
        obj = cls.__new__(cls)
        obj._c = tuple(_trim(cs))
        return obj

    @classmethod
    def constant(cls, c: Scalar) -> "RatPoly":
        return cls([c])

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1) -> "RatPoly":
        return cls([0] * k + [c])

    @classmethod
    def x(cls) -> "RatPoly":
        return cls([0, 1])

    # -- basic structure ---------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._c

    @property
    def degree(self) -> int:
        """Degree; the zero polynomial has degree -1."""
        return len(self._c) - 1

    @property
    def lc(self) -> Fraction:
        return self._c[-1] if self._c else Fraction(0)

    def coeff(self, k: int) -> Fraction:
        return self._c[k] if 0 <= k < len(self._c) else Fraction(0)

    def is_zero(self) -> bool:
        return not self._c

    def is_constant(self) -> bool:
        return len(self._c) <= 1

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._c)

    def __bool__(self) -> bool:
        return bool(self._c)

    def __len__(self) -> int:
        return len(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, RatPoly):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == ((Fraction(other),) if other else ())
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("RatPoly", self._c))

    def __repr__(self) -> str:
        return f"RatPoly({[str(c) for c in self._c]})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        terms = []
        for k in range(len(self._c) - 1, -1, -1):
            c = self._c[k]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                mono = "x" if k == 1 else f"x^{k}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    # -- ring operations ----------------------------------------------------

    @staticmethod
    def _coerce(other) -> "RatPoly | None":
        if isinstance(other, RatPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return RatPoly.constant(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._c, o._c
        if len(a) < len(b):
            a, b = b, a
        cs = list(a)
        for i, c in enumerate(b):
            cs[i] += c
        return RatPoly._raw(cs)

    __radd__ = __add__

    def __neg__(self) -> "RatPoly":
        return RatPoly._raw([-c for c in self._c])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return RatPoly()
            f = Fraction(other)
            return RatPoly._raw([c * f for c in self._c])
        if not isinstance(other, RatPoly):
            return NotImplemented
        a, b = self._c, other._c
        if not a or not b:
            return RatPoly()
        cs = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                cs[i + j] += ai * bj
        return RatPoly._raw(cs)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "RatPoly":
        if k < 0:
            raise ValueError("negative polynomial power")
        result = RatPoly.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __truediv__(self, other):
        # scalar division only; polynomial division goes through divmod/exquo
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("polynomial divided by zero scalar")
            inv = 1 / Fraction(other)
            return RatPoly._raw([c * inv for c in self._c])
        return NotImplemented

    def __divmod__(self, other: "RatPoly") -> tuple["RatPoly", "RatPoly"]:
        if not isinstance(other, RatPoly):
            other = RatPoly.constant(other)
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self._c)
        db = other.degree
        if len(r) - 1 < db:
            return RatPoly(), self
        inv = 1 / other.lc
        b = other._c
        q = [Fraction(0)] * (len(r) - db)
        for k in range(len(r) - 1 - db, -1, -1):
            c = r[k + db] * inv
            q[k] = c
            if c:
                for i in range(db + 1):
                    r[k + i] -= c * b[i]
        return RatPoly._raw(q), RatPoly._raw(r[:db] if db > 0 else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exquo(self, other: "RatPoly") -> "RatPoly":
        """Exact quotient; raises ArithmeticError on a nonzero remainder."""
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def monic(self) -> "RatPoly":
        if not self._c:
            return self
        return self / self.lc

    def gcd(self, other: "RatPoly") -> "RatPoly":
        """Monic gcd over Q (zero if both inputs are zero)."""
        a, b = self, other
        while b:
            a, b = b, a % b
        return a.monic()

    # -- calculus and evaluation ----------------------------------------------

    def derivative(self) -> "RatPoly":
        return RatPoly._raw([k * c for k, c in enumerate(self._c)][1:])

    def integrate(self) -> "RatPoly":
        """Antiderivative with zero constant term."""
        return RatPoly._raw([Fraction(0)] + [c / (k + 1) for k, c in enumerate(self._c)])

    def evaluate(self, x0) -> Fraction:
        x0 = as_fraction(x0)
        acc = Fraction(0)
        for c in reversed(self._c):
            acc = acc * x0 + c
        return acc

    def __call__(self, x0):
        if isinstance(x0, RatPoly):
            return self.compose(x0)
        return self.evaluate(x0)

    def compose(self, q: "RatPoly") -> "RatPoly":
        """Return p(q(x))."""
        acc = RatPoly()
        for c in reversed(self._c):
            acc = acc * q + c
        return acc

    def shift(self, c) -> "RatPoly":
        """Return p(x + c), computed by a Taylor shift."""
        c = as_fraction(c)
        if not c:
            return self
        cs = list(self._c)
        n = len(cs)
        # repeated synthetic division, O(n^2) exact operations
        for i in range(n - 1):
            for k in range(n - 2, i - 1, -1):
                cs[k] += c * cs[k + 1]
        return RatPoly._raw(cs)

    def scale_var(self, a) -> "RatPoly":
        """Return p(a*x)."""
        a = as_fraction(a)
        out, pw = [], Fraction(1)
        for c in self._c:
            out.append(c * pw)
            pw *= a
        return RatPoly._raw(out)

    # -- integer structure ------------------------------------------------------

    def denominator_lcm(self) -> int:
        return reduce(lcm, (c.denominator for c in self._c), 1)

    def integer_coeffs(self) -> list[int]:
        """Coefficients as ints; the polynomial must already be integral."""
        if not self.is_integral():
            raise ValueError("polynomial has non-integer coefficients")
        return [c.numerator for c in self._c]

    def clear_denominators(self) -> tuple[int, "RatPoly"]:
        """Return ``(m, m*p)`` with ``m > 0`` minimal so ``m*p`` is integral."""
        m = self.denominator_lcm()
        return m, self * m

    def content_primitive(self) -> tuple[Fraction, "RatPoly"]:
        """Split ``p = content * primitive``.

        The primitive part has coprime integer coefficients and a positive
        leading coefficient; the content carries the sign.
        """
        if not self._c:
            raise ValueError("zero has no primitive part")
        m = self.denominator_lcm()
        ints = [(c * m).numerator for c in self._c]
        g = abs(reduce(gcd, ints))
        if ints[-1] < 0:
            g = -g
        content = Fraction(g, m)
        return content, RatPoly._raw([Fraction(v // g) for v in ints])

    def primitive(self) -> "RatPoly":
        return self.content_primitive()[1]

    def even_part_extract(self, parity: str, drop: int = 0) -> "RatPoly":
        """Return ``q`` with ``p(z) = z**drop * q(z**2)``.

        ``parity`` ('even' or 'odd') is the declared parity of ``p``; a
        violation, or a nonzero coefficient below ``z**drop``, raises
        ValueError naming the offending monomial.
        """
        if parity not in ("even", "odd"):
            raise ValueError(f"parity must be 'even' or 'odd', not {parity!r}")
        if drop < 0:
            raise ValueError("drop must be non-negative")
        want = 0 if parity == "even" else 1
        if drop % 2 != want:
            raise ValueError(f"drop {drop} does not match declared {parity} parity")
        for k, c in enumerate(self._c):
            if c and k % 2 != want:
                raise ValueError(f"monomial {c}*z^{k} violates declared {parity} parity")
            if c and k < drop:
                raise ValueError(f"monomial {c}*z^{k} is not divisible by z^{drop}")
        return RatPoly._raw(list(self._c[drop::2]))

    # -- serialization --------------------------------------------------------

    def to_json(self) -> list[str]:
        return [str(c) for c in self._c]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "RatPoly":
        return cls(parse_rational(s) for s in data)


class BivarPoly:
    """Polynomial in ``z`` whose coefficients are ``RatPoly`` objects in ``x``."""

    __slots__ = ("_c",)

    def __init__(self, zcoeffs: Iterable = ()):
        cs = [c if isinstance(c, RatPoly) else RatPoly.constant(c) for c in zcoeffs]
        self._c = tuple(_trim(cs))

    @classmethod
    def from_z(cls, p: RatPoly) -> "BivarPoly":
        """Lift a polynomial in z with constant (in x) coefficients."""
        return cls(RatPoly.constant(c) for c in p.coeffs)

    @classmethod
    def from_x(cls, p: RatPoly) -> "BivarPoly":
        return cls([p])

    @property
    def zcoeffs(self) -> tuple[RatPoly, ...]:
        return self._c

    @property
    def degree_z(self) -> int:
        return len(self._c) - 1

    @property
    def degree_x(self) -> int:
        return max((c.degree for c in self._c), default=-1)

    @property
    def lc_z(self) -> RatPoly:
        return self._c[-1] if self._c else RatPoly()

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, BivarPoly):
            return self._c == other._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("BivarPoly", self._c))

    def __repr__(self) -> str:
        return f"BivarPoly({[c.to_json() for c in self._c]})"

    def __str__(self) -> str:
        parts = []
        for k, c in enumerate(self._c):
            if c:
                parts.append(f"({c})*z^{k}")
        return " + ".join(parts) if parts else "0"

    @staticmethod
    def _coerce(other) -> "BivarPoly | None":
        if isinstance(other, BivarPoly):
            return other
        if isinstance(other, RatPoly):
            return BivarPoly([other])
        if isinstance(other, (int, Fraction)):
            return BivarPoly([RatPoly.constant(other)])
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._c, o._c
        if len(a) < len(b):
            a, b = b, a
        cs = list(a)
        for i, c in enumerate(b):
            cs[i] = cs[i] + c
        return BivarPoly(cs)

    __radd__ = __add__

    def __neg__(self) -> "BivarPoly":
        return BivarPoly(-c for c in self._c)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, RatPoly)):
            return BivarPoly(c * other for c in self._c)
        if not isinstance(other, BivarPoly):
            return NotImplemented
        a, b = self._c, other._c
        if not a or not b:
            return BivarPoly()
        cs = [RatPoly()] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                cs[i + j] = cs[i + j] + ai * bj
        return BivarPoly(cs)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return BivarPoly(c / other for c in self._c)
        return NotImplemented

    def derivative_z(self) -> "BivarPoly":
        return BivarPoly([c * k for k, c in enumerate(self._c)][1:])

    def derivative_x(self) -> "BivarPoly":
        return BivarPoly(c.derivative() for c in self._c)

    def integrate_z(self) -> "BivarPoly":
        return BivarPoly([RatPoly()] + [c / (k + 1) for k, c in enumerate(self._c)])

    def reflect_z(self) -> "BivarPoly":
        """Return P(x, -z)."""
        return BivarPoly(-c if k % 2 else c for k, c in enumerate(self._c))

    def subs_x(self, x0) -> RatPoly:
        """Specialize x to a rational value, giving a polynomial in z."""
        return RatPoly(c.evaluate(x0) for c in self._c)

    def subs_z(self, z0) -> RatPoly:
        """Specialize z to a rational value, giving a polynomial in x."""
        z0 = as_fraction(z0)
        acc = RatPoly()
        for c in reversed(self._c):
            acc = acc * z0 + c
        return acc

    def denominator_lcm(self) -> int:
        return reduce(lcm, (c.denominator_lcm() for c in self._c), 1)

    def clear_denominators(self) -> tuple[int, "BivarPoly"]:
        m = self.denominator_lcm()
        return m, self * m

    def to_json(self) -> list[list[str]]:
        return [c.to_json() for c in self._c]

    @classmethod
    def from_json(cls, data) -> "BivarPoly":
        return cls(RatPoly.from_json(c) for c in data)
