"""Recover the coefficient table of H_r from exact point values.

H_r has degree at most r in each argument, so r+1 nodes per axis fix it.
The nodes are ``0..r``: H_r vanishes whenever an argument is zero, so the
zero layer costs nothing and only points with ``1 <= m <= n <= lam <= r``
are ever evaluated.  Coefficients are obtained by univariate Newton divided
differences applied one axis at a time, in exact rationals.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Iterator, List, Mapping, Sequence, Tuple

from hypermaps.exactmath import PolySym3, distinct_permutations

__all__ = [
    "AsymmetryDetected",
    "CoeffTable",
    "InterpolationError",
    "NegativeCoefficient",
    "NonIntegerCoefficient",
    "SymmetricEvaluator",
    "interpolate_table",
    "newton_coefficients",
    "sorted_points",
    "table_to_poly",
]

Triple = Tuple[int, int, int]


class InterpolationError(ArithmeticError):
    pass


class AsymmetryDetected(InterpolationError):
    pass


class NegativeCoefficient(InterpolationError):
    pass


class NonIntegerCoefficient(InterpolationError):
    pass


@dataclass(frozen=True)
class CoeffTable:
    """Counts of rooted hypermaps with `r` darts keyed by sorted ``(v, e, f)``."""

    r: int
    entries: Mapping[Triple, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for key, count in self.entries.items():
            key = tuple(int(x) for x in key)
            if list(key) != sorted(key):
                raise ValueError(f"entry {key} is not in canonical v <= e <= f order")
            if count:
                clean[key] = int(count)
        object.__setattr__(self, "entries", dict(sorted(clean.items())))

    def __iter__(self) -> Iterator[Tuple[int, int, int, int]]:
        for (v, e, f), count in self.entries.items():
            yield v, e, f, count

    def __len__(self) -> int:
        return len(self.entries)

    def rows(self) -> List[Tuple[int, int, int, int]]:
        """Rows in ascending lexicographic ``(v, e, f)`` order."""
        return list(self)

    def walsh_rows(self) -> List[Tuple[int, int, int, int]]:
        """Rows ordered by faces, then edges, then vertices."""
        return sorted(self, key=lambda row: (row[2], row[1], row[0]))

    def total(self) -> int:
        """Number of rooted hypermaps, counting every permutation of each row."""
        return sum(c * len(distinct_permutations(k)) for k, c in self.entries.items())

    def violations(self) -> List[str]:
        """Broken structural constraints; empty for a valid table."""
        out = []
        for (v, e, f), count in self.entries.items():
            s = v + e + f
            if count < 0:
                out.append(f"negative count {count} at {(v, e, f)}")
            if v < 1:
                out.append(f"zero vertices/edges/faces at {(v, e, f)}")
            if s > self.r + 2:
                out.append(f"{(v, e, f)} has v+e+f > r+2")
            if (s - self.r) % 2:
                out.append(f"{(v, e, f)} has v+e+f of wrong parity")
        return out


def table_to_poly(t: CoeffTable) -> PolySym3:
    """Symmetric polynomial whose canonical coefficients are the table entries."""
    return PolySym3.from_canonical(t.entries, degree=t.r)


def sorted_points(r: int) -> List[Triple]:
    """All ``(m, n, lam)`` with ``1 <= m <= n <= lam <= r``."""
    return [(m, n, lam) for m in range(1, r + 1) for n in range(m, r + 1) for lam in range(n, r + 1)]


class SymmetricEvaluator:
    """Memoizing wrapper that sorts arguments and returns 0 on the zero layer.

    ``evaluations`` counts calls that reached the wrapped function.
    """

    def __init__(self, fn: Callable[[int, int, int], int]):
        self.fn = fn
        self.memo: Dict[Triple, int] = {}
        self.evaluations = 0

    def __call__(self, m: int, n: int, lam: int) -> int:
        if m == 0 or n == 0 or lam == 0:
            return 0
        key = tuple(sorted((m, n, lam)))
        value = self.memo.get(key)
        if value is None:
            value = self.fn(*key)
            self.evaluations += 1
            self.memo[key] = value
        return value


def newton_coefficients(nodes: Sequence[int], values: Sequence) -> List[Fraction]:
    """Monomial coefficients of the interpolating polynomial through the data."""
    d = len(nodes) - 1
    dd = [Fraction(v) for v in values]
    for level in range(1, d + 1):
        for i in range(d, level - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - level])
    # nested multiplication of the Newton form
    poly = [dd[d]]
    for k in range(d - 1, -1, -1):
        shifted = [Fraction(0)] + poly
        for i, c in enumerate(poly):
            shifted[i] -= nodes[k] * c
        shifted[0] += dd[k]
        poly = shifted
    return poly


def interpolate_table(r: int, evaluator: Callable[[int, int, int], int]) -> CoeffTable:
    """Coefficient table of the symmetric polynomial ``H_r`` from its values.

    `evaluator` is wrapped in :class:`SymmetricEvaluator` unless it already
    is one, so each sorted point is requested at most once.
    """
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    ev = evaluator if isinstance(evaluator, SymmetricEvaluator) else SymmetricEvaluator(evaluator)
    nodes = list(range(r + 1))
    size = r + 1
    grid = [[[ev(i, j, k) for k in nodes] for j in nodes] for i in nodes]

    # axis 2 (lam)
    for i in range(size):
        for j in range(size):
            grid[i][j] = newton_coefficients(nodes, grid[i][j])
    # axis 1 (n)
    for i in range(size):
        for k in range(size):
            col = newton_coefficients(nodes, [grid[i][j][k] for j in range(size)])
            for j in range(size):
                grid[i][j][k] = col[j]
    # axis 0 (m)
    for j in range(size):
        for k in range(size):
            col = newton_coefficients(nodes, [grid[i][j][k] for i in range(size)])
            for i in range(size):
                grid[i][j][k] = col[i]

    coeffs: Dict[Triple, int] = {}
    for i in range(size):
        for j in range(size):
            for k in range(size):
                c = grid[i][j][k]
                if c.denominator != 1:
                    raise NonIntegerCoefficient(f"coefficient of m^{i} n^{j} lam^{k} is {c}")
                if c < 0:
                    raise NegativeCoefficient(f"coefficient of m^{i} n^{j} lam^{k} is {c}")
                if c:
                    coeffs[(i, j, k)] = c.numerator
    poly = PolySym3(coeffs, degree=r)
    if not poly.is_symmetric():
        raise AsymmetryDetected(f"recovered H_{r} is not symmetric")
    return CoeffTable(r, poly.canonical())
