"""Certified real-root isolation with Sturm sequences, and the J/M root pairing.

Everything here is exact: sign evaluations are done on integer
coefficients with the rational point written as a/b, so window membership
is decided without floating point.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from decimal import ROUND_HALF_UP, Context, Decimal
from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd
from typing import Sequence

from .muttjeff import jeff, mutt
from .polycore import RatPoly, as_fraction

__all__ = [
    "NotSquarefreeError",
    "UndecidableError",
    "RootInterval",
    "sturm_chain",
    "count_roots",
    "isolate_roots",
    "refine_root",
    "round_root",
    "approx",
    "Pair",
    "PairingReport",
    "pair_roots",
]

MIN_WIDTH = Fraction(1, 10**50)


class NotSquarefreeError(ValueError):
    pass


class UndecidableError(ArithmeticError):
    pass


# -- integer sign evaluation -----------------------------------------------------


@lru_cache(maxsize=256)
def _int_coeffs(p: RatPoly) -> tuple[int, ...]:
    if not p:
        return ()
    return tuple(c.numerator for c in p.primitive().coeffs)


def _sign_int(cs: Sequence[int], x: Fraction) -> int:
    # sign of sum c_i a^i b^(d-i), b > 0, which equals sign p(a/b)
    if not cs:
        return 0
    a, b = x.numerator, x.denominator
    acc = cs[-1]
    bp = 1
    for c in reversed(cs[:-1]):
        bp *= b
        acc = acc * a + c * bp
    return (acc > 0) - (acc < 0)


def _sign(p: RatPoly, x) -> int:
    return _sign_int(_int_coeffs(p), as_fraction(x))


# -- Sturm sequences -------------------------------------------------------------


def _neg_rem_normalized(a: list[int], b: list[int]) -> list[int]:
    # positive multiple of -(a mod b), made primitive; ascending integer lists
    db = len(b) - 1
    lb = b[-1]
    r = list(a)
    k = 0
    while r and len(r) - 1 >= db:
        lr = r[-1]
        off = len(r) - 1 - db
        r = [lb * c for c in r]
        for i in range(db + 1):
            r[off + i] -= lr * b[i]
        while r and r[-1] == 0:
            r.pop()
        k += 1
    if not r:
        return []
    # r = lb**k * (a mod b); flip so the result is a positive multiple of -(a mod b)
    if lb < 0 and k % 2:
        r = [-c for c in r]
    r = [-c for c in r]
    g = reduce(gcd, r)
    return [c // g for c in r]


def _int_chain(p: RatPoly) -> tuple[tuple[int, ...], ...]:
    a = list(_int_coeffs(p))
    # both normalized to positive leading coefficient, so b is a positive
    # multiple of the derivative of a
    b = list(_int_coeffs(p.derivative()))
    chain = [a]
    while b:
        chain.append(b)
        a, b = b, _neg_rem_normalized(a, b)
    return tuple(tuple(c) for c in chain)


@lru_cache(maxsize=128)
def _cached_chain(p: RatPoly) -> tuple[tuple[int, ...], ...]:
    if p.degree < 1:
        return (tuple(_int_coeffs(p)),)
    if p.gcd(p.derivative()).degree > 0:
        raise NotSquarefreeError(f"polynomial is not squarefree: {p}")
    return _int_chain(p)


def sturm_chain(p: RatPoly) -> list[RatPoly]:
    """Standard Sturm sequence p, p', -rem(p, p'), ... of a squarefree ``p``.

    Root counting uses an equivalent chain rescaled by positive constants
    to primitive integer form; both give the same sign variations.
    """
    if not p:
        raise ValueError("Sturm chain of the zero polynomial")
    _cached_chain(p)  # squarefree check
    chain = [p]
    b = p.derivative()
    while b:
        chain.append(b)
        b = -(chain[-2] % b)
    return chain


def _variations(chain, x: Fraction) -> int:
    v, last = 0, 0
    for cs in chain:
        s = _sign_int(cs, x)
        if s:
            if last and s != last:
                v += 1
            last = s
    return v


def count_roots(p: RatPoly, lo, hi) -> int:
    """Number of distinct real roots of squarefree ``p`` in (lo, hi]."""
    chain = _cached_chain(p)
    return _variations(chain, as_fraction(lo)) - _variations(chain, as_fraction(hi))


def _cauchy_bound(p: RatPoly) -> Fraction:
    lc = abs(p.lc)
    return 1 + max((abs(c) / lc for c in p.coeffs[:-1]), default=Fraction(0))


# -- isolation and refinement -----------------------------------------------------


@dataclass(frozen=True)
class RootInterval:
    """(lo, hi] containing exactly one real root of ``poly``."""

    lo: Fraction
    hi: Fraction
    poly: RatPoly = field(compare=False, repr=False)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def shifted(self, c) -> "RootInterval":
        c = as_fraction(c)
        return RootInterval(self.lo + c, self.hi + c, self.poly.shift(-c))

    def to_json(self) -> list[str]:
        return [str(self.lo), str(self.hi)]


def isolate_roots(p: RatPoly, domain: tuple | None = None) -> list[RootInterval]:
    """Disjoint intervals, one per real root of ``p`` in ``domain`` = (lo, hi].

    With no domain, a Cauchy bound is used.
    """
    if domain is None:
        b = _cauchy_bound(p)
        lo, hi = -b, b
    else:
        lo, hi = (as_fraction(v) for v in domain)
    if lo >= hi:
        raise ValueError("empty isolation domain")
    chain = _cached_chain(p)
    out: list[RootInterval] = []
    stack = [(lo, hi, _variations(chain, lo), _variations(chain, hi))]
    while stack:
        a, b, va, vb = stack.pop()
        k = va - vb
        if k == 0:
            continue
        if k == 1:
            out.append(RootInterval(a, b, p))
            continue
        m = (a + b) / 2
        vm = _variations(chain, m)
        stack.append((m, b, vm, vb))
        stack.append((a, m, va, vm))
    out.sort(key=lambda iv: iv.lo)
    return out


def _bisect(iv: RootInterval) -> RootInterval:
    cs = _int_coeffs(iv.poly)
    lo, hi = iv.lo, iv.hi
    s_hi = _sign_int(cs, hi)
    m = (lo + hi) / 2
    if s_hi == 0:
        return RootInterval(m, hi, iv.poly)
    s_m = _sign_int(cs, m)
    if s_m != 0 and s_m != s_hi:
        return RootInterval(m, hi, iv.poly)
    return RootInterval(lo, m, iv.poly)


def refine_root(iv: RootInterval, width) -> RootInterval:
    """Bisect until hi - lo <= width; the result is nested in ``iv``."""
    width = as_fraction(width)
    if width <= 0:
        raise ValueError("width must be positive")
    while iv.width > width:
        iv = _bisect(iv)
    return iv


def _to_decimal(x: Fraction, prec: int = 60) -> Decimal:
    ctx = Context(prec=prec)
    return ctx.divide(Decimal(x.numerator), Decimal(x.denominator))


def _fmt_sig(x: Fraction, digits: int) -> str:
    d = _to_decimal(x)
    if not d:
        return "0"
    q = d.quantize(Decimal(1).scaleb(d.adjusted() - digits + 1), rounding=ROUND_HALF_UP)
    return f"{q:f}"


def round_root(iv: RootInterval, digits: int = 5) -> str:
    """Root rounded to ``digits`` significant digits, certified.

    Refines until both endpoints round to the same string.
    """
    while True:
        a, b = _fmt_sig(iv.lo, digits), _fmt_sig(iv.hi, digits)
        if a == b:
            return a
        if iv.width < MIN_WIDTH:
            raise UndecidableError(f"rounding undecided near {a} / {b}")
        iv = _bisect(iv)


def approx(iv: RootInterval) -> str:
    """15-significant-digit rendering for human reading."""
    return _fmt_sig(refine_root(iv, Fraction(1, 10**20)).mid, 15)


# -- pairing of J and M roots -----------------------------------------------------


@dataclass
class Pair:
    j_root: RootInterval
    m_root: RootInterval
    in_window: bool
    gap_upper_bound: Fraction
    gap_ok: bool

    def to_json(self) -> dict:
        return {
            "j": self.j_root.to_json(),
            "m": self.m_root.to_json(),
            "in_window": self.in_window,
            "gap_le": str(self.gap_upper_bound),
            "gap_ok": self.gap_ok,
            "j_approx": approx(self.j_root),
            "m_approx": approx(self.m_root),
        }


@dataclass
class PairingReport:
    n: int
    pairs: list[Pair]
    unpaired_j: RootInterval
    unpaired_m: RootInterval
    # per J root (smallest excluded): does some M root lie in its window
    window_hits: list[bool]

    @property
    def passed(self) -> bool:
        return (all(p.in_window and p.gap_ok for p in self.pairs)
                and all(self.window_hits))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "pairs": [p.to_json() for p in self.pairs],
            "unpaired_j": self.unpaired_j.to_json(),
            "unpaired_m": self.unpaired_m.to_json(),
            "unpaired_j_approx": approx(self.unpaired_j),
            "unpaired_m_approx": approx(self.unpaired_m),
            "window_hits": self.window_hits,
            "pass": self.passed,
        }


def _halve(iv: RootInterval) -> RootInterval:
    if iv.width < MIN_WIDTH:
        raise UndecidableError(f"interval ({iv.lo}, {iv.hi}] reached the refinement floor")
    return _bisect(iv)


def _membership(j: RootInterval, m: RootInterval, below: Fraction, above: Fraction):
    """Decide x_M in [x_J - below, x_J + above); returns (verdict, j, m)."""
    while True:
        if m.hi < j.lo - below or m.lo >= j.hi + above:
            return False, j, m
        if m.lo >= j.hi - below and m.hi < j.lo + above:
            return True, j, m
        j, m = _halve(j), _halve(m)


def _gap_within(j: RootInterval, m: RootInterval, bound: Fraction):
    """Decide |x_M - x_J| <= bound; returns (verdict, upper bound, j, m)."""
    while True:
        upper = max(m.hi - j.lo, j.hi - m.lo)
        lower = max(m.lo - j.hi, j.lo - m.hi)
        if upper <= bound:
            return True, upper, j, m
        if lower > bound:
            return False, upper, j, m
        j, m = _halve(j), _halve(m)


def pair_roots(n: int, width=None) -> PairingReport:
    """Match the roots of J and M for one n.

    The smallest J root and the largest M root are set aside; the k-th
    remaining J root is paired with the k-th remaining M root.  Each pair
    records whether the M root lies in [x_J - 3/(10n^2), x_J + 1/(2n^2))
    and whether |x_M - x_J| <= 1/(2n^2).  Independently of the pairing,
    ``window_hits`` records for every J root but the smallest whether any
    M root falls in its window.
    """
    if n < 2:
        raise ValueError("pairing needs n >= 2")
    width = as_fraction(width) if width is not None else Fraction(1, 100 * n * n)
    below, above = Fraction(3, 10 * n * n), Fraction(1, 2 * n * n)

    J = jeff(n)
    M, _ = mutt(n)
    domain = (Fraction(-1), Fraction(1))
    jr = [refine_root(iv, width) for iv in isolate_roots(J, domain)]
    mr = [refine_root(iv, width) for iv in isolate_roots(M, domain)]
    if len(jr) != n - 1 or len(mr) != n - 1:
        raise ArithmeticError(f"expected {n - 1} real roots each, got J:{len(jr)} M:{len(mr)}")

    hits = []
    for a in range(1, len(jr)):
        hit = False
        for b in range(len(mr)):
            verdict, jr[a], mr[b] = _membership(jr[a], mr[b], below, above)
            if verdict:
                hit = True
                break
        hits.append(hit)

    pairs = []
    for k in range(n - 2):
        inside, j_iv, m_iv = _membership(jr[k + 1], mr[k], below, above)
        ok, upper, j_iv, m_iv = _gap_within(j_iv, m_iv, above)
        jr[k + 1], mr[k] = j_iv, m_iv
        pairs.append(Pair(j_iv, m_iv, inside, upper, ok))
    return PairingReport(n, pairs, jr[0], mr[-1], hits)
