"""Point values of H_r(m, n, lam) from the F coefficients.

The generating functions are linked by ``H * F = x dF/dx``, which at order
``x**r`` reads ``sum_{k=0}^{r} H_{r-k} F_k = r F_r`` with ``F_0 = 1`` and
``H_0 = 0``.  The special cases with one or two arguments equal to one are
computed from closed-form F coefficients only, so they check the general path
rather than share code with it.
"""
from __future__ import annotations

import threading
from fractions import Fraction
from math import factorial
from typing import Dict, List, Optional, Sequence, Tuple

from hypermaps.exactmath import rising_factorial
from hypermaps.fseries import FGrid

__all__ = [
    "HGrid",
    "NonIntegerResult",
    "h_from_f",
    "h_r_point",
    "h_r_special_11m",
    "h_r_special_1mn",
    "totals",
]


class NonIntegerResult(ArithmeticError):
    """The H recursion produced a non-integer; the F values are wrong."""


def h_from_f(fs: Sequence[Fraction], point=None) -> List[int]:
    """``[H_0, ..., H_K]`` from ``[F_0, ..., F_K]`` by the convolution recursion."""
    if fs[0] != 1:
        raise ValueError(f"F_0 must be 1, got {fs[0]}")
    hs: List[int] = [0]
    for r in range(1, len(fs)):
        value = r * fs[r]
        for k in range(1, r):
            value -= fs[k] * hs[r - k]
        if value.denominator != 1:
            raise NonIntegerResult(f"H_{r}{'' if point is None else tuple(point)} = {value}")
        hs.append(value.numerator)
    return hs


class HGrid:
    """Store of integer H_k values keyed by ``(k, m, n, lam)`` with ``m <= n``."""

    def __init__(self):
        self.values: Dict[Tuple[int, int, int, int], int] = {}
        self._lock = threading.Lock()

    @staticmethod
    def key(k, m, n, lam):
        if m > n:
            m, n = n, m
        return (k, m, n, lam)

    def __len__(self):
        return len(self.values)

    def get(self, k, m, n, lam) -> Optional[int]:
        if k == 0:
            return 0
        return self.values.get(self.key(k, m, n, lam))

    def store(self, m, n, lam, hs: Sequence[int]) -> None:
        with self._lock:
            for k in range(1, len(hs)):
                self.values[self.key(k, m, n, lam)] = hs[k]


def h_r_point(
    r: int,
    m: int,
    n: int,
    lam: int,
    fgrid: Optional[FGrid] = None,
    hgrid: Optional[HGrid] = None,
) -> int:
    """Exact ``H_r(m, n, lam)`` at a point of positive integers.

    >>> h_r_point(2, 2, 3, 5)
    300
    """
    if r == 0:
        return 0
    if m > n:
        m, n = n, m
    if hgrid is not None:
        cached = hgrid.get(r, m, n, lam)
        if cached is not None:
            return cached
    if fgrid is None:
        fgrid = FGrid()
    fs = fgrid.ensure(r, m, n, lam)
    hs = h_from_f(fs, (m, n, lam))
    if hs[r] < 0:
        raise NonIntegerResult(f"H_{r}{(m, n, lam)} = {hs[r]} is negative")
    if hgrid is not None:
        hgrid.store(m, n, lam, hs)
    return hs[r]


def h_r_special_1mn(r: int, m: int, n: int) -> int:
    """``H_r(1, m, n)`` using only ``F_k(1, m, n) = rising(m,k) rising(n,k) / k!``."""
    hs: List[int] = [0]
    for t in range(1, r + 1):
        value = Fraction(rising_factorial(m, t) * rising_factorial(n, t), factorial(t - 1))
        for k in range(1, t):
            value -= Fraction(rising_factorial(m, k) * rising_factorial(n, k), factorial(k)) * hs[t - k]
        if value.denominator != 1:
            raise NonIntegerResult(f"H_{t}(1,{m},{n}) = {value}")
        hs.append(value.numerator)
    return hs[r]


def h_r_special_11m(r: int, m: int) -> int:
    """``H_r(1, 1, m) = r rising(m,r) - sum_{k<r} rising(m,k) H_{r-k}(1,1,m)``."""
    hs: List[int] = [0]
    for t in range(1, r + 1):
        value = t * rising_factorial(m, t)
        for k in range(1, t):
            value -= rising_factorial(m, k) * hs[t - k]
        hs.append(value)
    return hs[r]


def totals(r_max: int) -> List[int]:
    """Number of rooted hypermaps with r darts for ``r = 1..r_max``.

    >>> totals(5)
    [1, 3, 13, 71, 461]
    """
    if r_max < 1:
        raise ValueError(f"r_max must be >= 1, got {r_max}")
    hs: List[int] = [0]
    for r in range(1, r_max + 1):
        value = r * factorial(r)
        for k in range(1, r):
            value -= factorial(k) * hs[r - k]
        hs.append(value)
    return hs[1:]
