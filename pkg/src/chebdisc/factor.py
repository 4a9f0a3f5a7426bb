"""Integer factorization for discriminant values.

Hinted trial division first, then plain trial division up to a bound, then
Brent's variant of Pollard rho on whatever composite is left.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import gcd, isqrt
from typing import Iterable, Mapping

__all__ = [
    "FactoredInt",
    "FactorizationError",
    "factor_int",
    "is_prime",
    "small_prime_factors",
]

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71)


class FactorizationError(ArithmeticError):
    def __init__(self, residual: int, partial: Mapping[int, int]):
        super().__init__(f"could not split composite residual {residual}")
        self.residual = residual
        self.partial = dict(partial)


def is_prime(n: int) -> bool:
    """Miller-Rabin over the first 20 prime bases.

    Deterministic below 3.3e24; beyond that a strong probable-prime test.
    """
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def small_prime_factors(m: int) -> set[int]:
    """Prime divisors of a small integer by trial division."""
    m = abs(m)
    out = set()
    p = 2
    while p * p <= m:
        while m % p == 0:
            out.add(p)
            m //= p
        p += 1 if p == 2 else 2
    if m > 1:
        out.add(m)
    return out


def _brent(n: int, rng: random.Random, max_iter: int) -> int | None:
    # returns a nontrivial factor of composite odd n, or None after max_iter
    y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
    g = r = q = 1
    x = ys = y
    iters = 0
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = gcd(q, n)
            k += m
        r *= 2
        iters += r
        if iters > max_iter:
            return None
    if g == n:
        while True:
            ys = (ys * ys + c) % n
            g = gcd(abs(x - ys), n)
            if g > 1:
                break
    return g if g != n else None


@dataclass(frozen=True)
class FactoredInt:
    """sign * prod(p**e); zero is sign 0 with no factors."""

    sign: int
    factors: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.sign not in (-1, 0, 1):
            raise ValueError(f"bad sign {self.sign}")
        if self.sign == 0 and self.factors:
            raise ValueError("zero carries no prime factors")
        # canonical ordering so equal values compare and serialize identically
        object.__setattr__(self, "factors", dict(sorted(self.factors.items())))

    @property
    def value(self) -> int:
        v = self.sign
        for p, e in self.factors.items():
            v *= p**e
        return v

    @property
    def primes(self) -> frozenset[int]:
        return frozenset(self.factors)

    def __abs__(self) -> "FactoredInt":
        return FactoredInt(abs(self.sign), self.factors)

    def __str__(self) -> str:
        if self.sign == 0:
            return "0"
        body = " ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors.items())
        body = body or "1"
        return f"-{body}" if self.sign < 0 else body

    def to_json(self) -> dict:
        return {"sign": self.sign, "factors": {str(p): e for p, e in self.factors.items()}}

    @classmethod
    def from_json(cls, data: Mapping) -> "FactoredInt":
        return cls(int(data["sign"]), {int(p): int(e) for p, e in data["factors"].items()})


def factor_int(
    v: int,
    hint_primes: Iterable[int] = (),
    trial_bound: int = 10_000,
    rho_iterations: int = 2_000_000,
    seed: int = 12345,
) -> FactoredInt:
    """Completely factor ``v``.

    Raises FactorizationError carrying the residual if Pollard rho cannot
    split a composite within ``rho_iterations`` steps.
    """
    v = int(v)
    if v == 0:
        return FactoredInt(0)
    sign = 1 if v > 0 else -1
    m = abs(v)
    found: dict[int, int] = {}

    def strip(p: int) -> None:
        nonlocal m
        while m % p == 0:
            found[p] = found.get(p, 0) + 1
            m //= p

    for p in sorted(set(hint_primes)):
        if p > 1 and is_prime(p):
            strip(p)
    if m > 1:
        strip(2)
        p = 3
        while p <= trial_bound and p * p <= m:
            strip(p)
            p += 2
    if m > 1:
        rng = random.Random(seed)
        stack = [m]
        while stack:
            c = stack.pop()
            if c == 1:
                continue
            if is_prime(c):
                found[c] = found.get(c, 0) + 1
                continue
            r = isqrt(c)
            if r * r == c:
                stack += [r, r]
                continue
            for _ in range(8):
                d = _brent(c, rng, rho_iterations)
                if d:
                    stack += [d, c // d]
                    break
            else:
                raise FactorizationError(c, found)
    return FactoredInt(sign, found)
