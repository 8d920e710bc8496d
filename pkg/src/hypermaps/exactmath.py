"""Exact scalar helpers and the trivariate polynomial type.

Integers are plain Python ``int`` and rationals are ``fractions.Fraction``;
both are arbitrary precision and ``Fraction`` is always kept in lowest terms
with a positive denominator.  Nothing in this package touches floats.
"""
from __future__ import annotations

import threading
from fractions import Fraction
from itertools import permutations
from math import comb, factorial
from typing import Dict, Iterable, Mapping, Tuple

__all__ = [
    "Fraction",
    "PolySym3",
    "RisingFactorialTable",
    "distinct_permutations",
    "poly_eval",
    "rising_factorial",
    "superfactorial",
]

Triple = Tuple[int, int, int]


class RisingFactorialTable:
    """Lazily grown table of ``base*(base+1)*...*(base+k-1)`` for fixed `base`.

    ``values[0] == 1`` and ``values[k] == values[k-1] * (base + k - 1)``.
    """

    __slots__ = ("base", "values", "_lock")

    def __init__(self, base: int, kmax: int = 0):
        if base < 1:
            raise ValueError(f"rising factorial base must be >= 1, got {base}")
        self.base = base
        self.values = [1]
        self._lock = threading.Lock()
        self.grow(kmax)

    def grow(self, kmax: int) -> None:
        if kmax < len(self.values):
            return
        with self._lock:
            values = self.values
            for k in range(len(values), kmax + 1):
                values.append(values[-1] * (self.base + k - 1))

    def __getitem__(self, k: int) -> int:
        if k < 0:
            raise IndexError(k)
        if k >= len(self.values):
            self.grow(k)
        return self.values[k]

    def __len__(self) -> int:
        return len(self.values)


_TABLES: Dict[int, RisingFactorialTable] = {}
_TABLES_LOCK = threading.Lock()


def _table(base: int) -> RisingFactorialTable:
    table = _TABLES.get(base)
    if table is None:
        with _TABLES_LOCK:
            table = _TABLES.get(base)
            if table is None:
                table = _TABLES[base] = RisingFactorialTable(base)
    return table


def rising_factorial(base: int, k: int) -> int:
    """Return ``base*(base+1)*...*(base+k-1)``, i.e. Gamma(base+k)/Gamma(base).

    >>> rising_factorial(3, 4)
    360
    """
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    return _table(base)[k]


def superfactorial(m: int) -> int:
    """Product of ``j - i`` over ``0 <= i < j < m``, i.e. ``0! 1! ... (m-1)!``."""
    out = 1
    for j in range(m):
        out *= factorial(j)
    return out


def distinct_permutations(triple: Iterable[int]) -> list:
    """Sorted list of the distinct orderings of a 3-tuple."""
    return sorted(set(permutations(tuple(triple))))


class PolySym3:
    """Trivariate integer polynomial stored as a sparse exponent map.

    ``coeffs[(i, j, k)]`` is the coefficient of ``m**i * n**j * lam**k``.  The
    full map is stored (every permutation of a symmetric term is present);
    symmetry is checked with :meth:`is_symmetric`, never assumed.
    """

    __slots__ = ("degree", "coeffs")

    def __init__(self, coeffs: Mapping[Triple, int], degree: int | None = None):
        clean = {tuple(e): int(c) for e, c in coeffs.items() if c}
        for e in clean:
            if len(e) != 3 or min(e) < 0:
                raise ValueError(f"bad exponent triple {e!r}")
        if degree is None:
            degree = max((max(e) for e in clean), default=0)
        elif any(max(e) > degree for e in clean):
            raise ValueError(f"exponent exceeds degree bound {degree}")
        self.degree = degree
        self.coeffs: Dict[Triple, int] = clean

    @classmethod
    def from_canonical(cls, entries: Mapping[Triple, int], degree: int | None = None) -> "PolySym3":
        """Expand canonical (sorted) exponent triples to all their permutations."""
        full: Dict[Triple, int] = {}
        for triple, c in entries.items():
            for p in distinct_permutations(triple):
                if p in full and full[p] != c:
                    raise ValueError(f"conflicting coefficients for {p}")
                full[p] = c
        return cls(full, degree)

    def __call__(self, m: int, n: int, lam: int) -> int:
        return poly_eval(self, m, n, lam)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolySym3):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"PolySym3(degree={self.degree}, terms={len(self.coeffs)})"

    def is_symmetric(self) -> bool:
        coeffs = self.coeffs
        for e, c in coeffs.items():
            for p in permutations(e):
                if coeffs.get(p, 0) != c:
                    return False
        return True

    def canonical(self) -> Dict[Triple, int]:
        """Collapse to sorted exponent triples; requires a symmetric polynomial."""
        if not self.is_symmetric():
            raise ValueError("polynomial is not symmetric")
        return {e: c for e, c in self.coeffs.items() if e[0] <= e[1] <= e[2]}

    def symmetrized(self) -> "PolySym3":
        """Average over the six argument permutations.

        The result has integer coefficients only when the orbit sums divide
        evenly; otherwise :class:`ValueError` is raised.
        """
        acc: Dict[Triple, Fraction] = {}
        for e, c in self.coeffs.items():
            for p in permutations(range(3)):
                key = (e[p[0]], e[p[1]], e[p[2]])
                acc[key] = acc.get(key, Fraction(0)) + Fraction(c, 6)
        out = {}
        for key, value in acc.items():
            if value.denominator != 1:
                raise ValueError(f"symmetrized coefficient of {key} is not integral: {value}")
            out[key] = value.numerator
        return PolySym3(out, self.degree)


def poly_eval(p: PolySym3, m: int, n: int, lam: int) -> int:
    """Exact value of ``sum coeff(i,j,k) m**i n**j lam**k``."""
    d = p.degree
    pm = [m**i for i in range(d + 1)]
    pn = [n**i for i in range(d + 1)]
    pl = [lam**i for i in range(d + 1)]
    return sum(c * pm[i] * pn[j] * pl[k] for (i, j, k), c in p.coeffs.items())


def multinomial(parts: Iterable[int]) -> int:
    out, total = 1, 0
    for a in parts:
        total += a
        out *= comb(total, a)
    return out
