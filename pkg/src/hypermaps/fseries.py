"""Coefficients F_k(m, n, lam) of the auxiliary series F(m, n, lam; x).

For ``m <= n`` the coefficient of ``x**k`` is a finite sum over weak
compositions ``a = (a_0, ..., a_{m-1})`` of ``k``::

    F_k = sum_a  prod_{i<j} ((a_i - a_j)/(j - i) + 1)
                 * prod_s rising(lam, a_s) * rising(n - s, a_s) / a_s!

Writing ``c_s = a_s - s`` the first product is
``prod_{i<j} (c_i - c_j) / prod_{i<j} (j - i)``, which vanishes whenever two
``c`` values coincide.  The fast path enumerates prefixes depth first and
drops a whole subtree as soon as a collision appears, keeps every partial
product as an integer and divides once per coefficient at the end.
"""
from __future__ import annotations

import threading
from fractions import Fraction
from math import comb, factorial
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from hypermaps.exactmath import rising_factorial, superfactorial

__all__ = [
    "FGrid",
    "compositions",
    "f_r",
    "f_r_m1_closed",
    "f_r_naive",
    "f_series",
    "f_term",
    "vandermonde_factor",
]

FKey = Tuple[int, int, int, int]


def compositions(r: int, m: int) -> Iterator[Tuple[int, ...]]:
    """Weak compositions of `r` into exactly `m` parts, in colex order.

    Colex order means the tuples are ordered by their *last* part first, so
    successive compositions differ mostly in the leading parts.

    >>> list(compositions(2, 2))
    [(2, 0), (1, 1), (0, 2)]
    """
    if m < 1:
        if r == 0 and m == 0:
            yield ()
        return
    a = [0] * m
    a[0] = r
    yield tuple(a)
    while True:
        # first nonzero part that is not the last one
        i = 0
        while i < m - 1 and a[i] == 0:
            i += 1
        if i == m - 1:
            return
        # move one unit from part i to part i+1, refill part 0 with the rest
        head = a[i] - 1
        a[i] = 0
        a[i + 1] += 1
        a[0] = head
        yield tuple(a)


def vandermonde_factor(a: Sequence[int]) -> Fraction:
    """``prod_{0<=i<j<m} ((a_i - a_j)/(j - i) + 1)`` as an exact rational."""
    num = 1
    m = len(a)
    for j in range(m):
        for i in range(j):
            num *= a[i] - a[j] + j - i
    return Fraction(num, superfactorial(m))


def f_term(a: Sequence[int], m: int, n: int, lam: int) -> Fraction:
    """Single summand of the F coefficient for the composition `a`."""
    if len(a) != m:
        raise ValueError(f"composition {tuple(a)} does not have {m} parts")
    if m > n:
        raise ValueError(f"f_term requires m <= n, got m={m}, n={n}")
    term = vandermonde_factor(a)
    if not term:
        return term
    num, den = 1, 1
    for s, part in enumerate(a):
        num *= rising_factorial(lam, part) * rising_factorial(n - s, part)
        den *= factorial(part)
    return term * Fraction(num, den)


def f_r_naive(r: int, m: int, n: int, lam: int) -> Fraction:
    """Unpruned reference sum of :func:`f_term` over every composition."""
    if m > n:
        m, n = n, m
    if r == 0:
        return Fraction(1)
    return sum((f_term(a, m, n, lam) for a in compositions(r, m)), Fraction(0))


def f_r_m1_closed(r: int, m: int, n: int) -> Fraction:
    """``F_r(1, m, n) = rising(m, r) * rising(n, r) / r!``."""
    return Fraction(rising_factorial(m, r) * rising_factorial(n, r), factorial(r))


def _weighted_sums(kmax: int, m: int, n: int, lam: int) -> List[int]:
    """Integer sums ``S_k`` with ``F_k = S_k / (superfactorial(m) * k!)``.

    Each surviving composition contributes
    ``prod_{i<j}(c_i - c_j) * multinomial(a) * prod_s rising(lam,a_s) rising(n-s,a_s)``.
    Requires ``m <= n``.
    """
    sums = [0] * (kmax + 1)
    weight = [
        [rising_factorial(lam, a) * rising_factorial(n - s, a) for a in range(kmax + 1)]
        for s in range(m)
    ]
    binom = [[comb(t + a, a) for a in range(kmax + 1 - t)] for t in range(kmax + 1)]
    cvals = [0] * m
    last = m - 1

    def descend(s: int, total: int, acc: int) -> None:
        row = weight[s]
        brow = binom[total]
        prev = cvals[:s]
        for a in range(kmax - total + 1):
            c = a - s
            v = acc
            for ci in prev:
                v *= ci - c
            if not v:
                # c collides with an earlier part: every completion vanishes
                continue
            v *= brow[a] * row[a]
            if s == last:
                sums[total + a] += v
            else:
                cvals[s] = c
                descend(s + 1, total + a, v)

    descend(0, 0, 1)
    return sums


def f_series(kmax: int, m: int, n: int, lam: int) -> List[Fraction]:
    """``[F_0, F_1, ..., F_kmax]`` at the integer point ``(m, n, lam)``.

    The first two arguments are swapped if needed so that ``m <= n``.
    """
    if min(m, n, lam) < 1:
        raise ValueError(f"F is evaluated at positive integers only, got {(m, n, lam)}")
    if m > n:
        m, n = n, m
    sums = _weighted_sums(kmax, m, n, lam)
    sf = superfactorial(m)
    out = [Fraction(1)]
    for k in range(1, kmax + 1):
        out.append(Fraction(sums[k], sf * factorial(k)))
    if sums[0] != sf:
        raise ArithmeticError(f"F_0 at {(m, n, lam)} is {Fraction(sums[0], sf)}, expected 1")
    return out


class FGrid:
    """Thread-safe store of F_k values keyed by ``(k, m, n, lam)`` with ``m <= n``.

    Each point is computed at most once per process; concurrent callers
    asking for the same point wait on the first one.
    """

    def __init__(self, values: Optional[Dict[FKey, Fraction]] = None):
        self.values: Dict[FKey, Fraction] = {}
        self._lock = threading.Lock()
        self._point_locks: Dict[Tuple[int, int, int], threading.Lock] = {}
        self.computed_points = 0
        if values:
            for key, value in values.items():
                self.put(key, value)

    @staticmethod
    def key(k: int, m: int, n: int, lam: int) -> FKey:
        if m > n:
            m, n = n, m
        return (k, m, n, lam)

    def __len__(self) -> int:
        return len(self.values)

    def __contains__(self, key) -> bool:
        return self.key(*key) in self.values

    def get(self, k: int, m: int, n: int, lam: int) -> Optional[Fraction]:
        return self.values.get(self.key(k, m, n, lam))

    def put(self, key: FKey, value: Fraction) -> None:
        key = self.key(*key)
        value = Fraction(value)
        with self._lock:
            old = self.values.get(key)
            if old is not None and old != value:
                raise ValueError(f"conflicting F values for {key}: {old} != {value}")
            self.values[key] = value

    def series(self, kmax: int, m: int, n: int, lam: int) -> Optional[List[Fraction]]:
        """Stored ``[F_0..F_kmax]`` at a point, or ``None`` if any term is missing."""
        out = [Fraction(1)]
        for k in range(1, kmax + 1):
            value = self.values.get(self.key(k, m, n, lam))
            if value is None:
                return None
            out.append(value)
        return out

    def store_series(self, m: int, n: int, lam: int, series: Sequence[Fraction]) -> None:
        for k in range(1, len(series)):
            self.put((k, m, n, lam), series[k])

    def ensure(self, kmax: int, m: int, n: int, lam: int) -> List[Fraction]:
        """Return ``[F_0..F_kmax]``, computing and storing it if absent."""
        if m > n:
            m, n = n, m
        found = self.series(kmax, m, n, lam)
        if found is not None:
            return found
        with self._lock:
            plock = self._point_locks.setdefault((m, n, lam), threading.Lock())
        with plock:
            found = self.series(kmax, m, n, lam)
            if found is not None:
                return found
            series = f_series(kmax, m, n, lam)
            self.store_series(m, n, lam, series)
            self.computed_points += 1
            return series


def f_r(r: int, m: int, n: int, lam: int, grid: Optional[FGrid] = None) -> Fraction:
    """``F_r(m, n, lam)``; ``F_0 == 1``.  Results are cached in `grid` if given."""
    if r == 0:
        return Fraction(1)
    if grid is None:
        return f_series(r, m, n, lam)[r]
    cached = grid.get(r, m, n, lam)
    if cached is not None:
        return cached
    return grid.ensure(r, m, n, lam)[r]
