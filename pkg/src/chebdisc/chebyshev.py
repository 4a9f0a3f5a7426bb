"""Chebyshev polynomials of the first and second kind."""
from __future__ import annotations

import enum
import threading

from .polycore import RatPoly

__all__ = ["ChebKind", "cheb", "T", "U"]


class ChebKind(enum.Enum):
    FIRST = "T"
    SECOND = "U"


_X2 = RatPoly([0, 2])
_cache: dict[ChebKind, list[RatPoly]] = {
    ChebKind.FIRST: [RatPoly([1]), RatPoly([0, 1])],
    ChebKind.SECOND: [RatPoly([1]), RatPoly([0, 2])],
}
_lock = threading.Lock()


def cheb(kind: ChebKind | str, n: int) -> RatPoly:
    """Return T_n or U_n built from p_n = 2x p_{n-1} - p_{n-2}."""
    kind = ChebKind(kind)
    if n < 0:
        raise ValueError(f"Chebyshev index must be non-negative, got {n}")
    seq = _cache[kind]
    if n < len(seq):
        return seq[n]
    with _lock:
        while len(seq) <= n:
            seq.append(_X2 * seq[-1] - seq[-2])
    return seq[n]


def T(n: int) -> RatPoly:
    return cheb(ChebKind.FIRST, n)


def U(n: int) -> RatPoly:
    return cheb(ChebKind.SECOND, n)
