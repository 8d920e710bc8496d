"""Brute-force checks that do not go through the F-series machinery.

A rooted hypermap with r darts is a pair of permutations ``(xi, eta)`` of
``{0..r-1}`` generating a transitive group, taken up to conjugation by
permutations fixing dart 0; ``chi = (xi eta)^-1`` closes the triple.  Faces,
edges and vertices are the cycles of xi, eta and chi.  Conjugation fixing
the root acts freely on transitive pairs, so each rooted hypermap accounts
for exactly ``(r-1)!`` labelled pairs.

Permutations are tuples of images, 0-based, composed right to left:
``compose(p, q)[i] == p[q[i]]``.
"""
from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from math import factorial
from typing import Dict, Iterator, List, Sequence, Tuple

from hypermaps.exactmath import rising_factorial
from hypermaps.interpolate import CoeffTable

__all__ = [
    "NonDivisibleBucket",
    "TruncatedSeries",
    "brute_force_counts",
    "brute_force_table",
    "check_factorization",
    "check_nested_series",
    "compose",
    "cycle_count",
    "cycle_type_representative",
    "f_from_p_sums",
    "inverse",
    "is_transitive",
    "p_bar_sum",
    "p_sum",
    "partitions",
    "z_factor",
]

Perm = Tuple[int, ...]


class NonDivisibleBucket(ArithmeticError):
    """A labelled-pair count is not a multiple of (r-1)!."""


def compose(p: Perm, q: Perm) -> Perm:
    return tuple(p[i] for i in q)


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, pi in enumerate(p):
        out[pi] = i
    return tuple(out)


def cycle_count(p: Sequence[int]) -> int:
    seen = [False] * len(p)
    count = 0
    for start in range(len(p)):
        if not seen[start]:
            count += 1
            j = start
            while not seen[j]:
                seen[j] = True
                j = p[j]
    return count


def is_transitive(*gens: Sequence[int]) -> bool:
    """Whether the permutations generate a transitive group (union-find)."""
    r = len(gens[0])
    if r == 0:
        return True
    parent = list(range(r))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    components = r
    for g in gens:
        for i in range(r):
            a, b = find(i), find(g[i])
            if a != b:
                parent[a] = b
                components -= 1
                if components == 1:
                    return True
    return components == 1


def partitions(r: int, largest: int | None = None) -> Iterator[Tuple[int, ...]]:
    """Integer partitions of `r` as non-increasing tuples."""
    if largest is None:
        largest = r
    if r == 0:
        yield ()
        return
    for part in range(min(r, largest), 0, -1):
        for rest in partitions(r - part, part):
            yield (part,) + rest


def z_factor(cycle_type: Sequence[int]) -> int:
    """Centralizer order ``prod_i i**m_i m_i!``; the class has ``r!/z`` elements."""
    out = 1
    for part, mult in Counter(cycle_type).items():
        out *= part**mult * factorial(mult)
    return out


def cycle_type_representative(cycle_type: Sequence[int]) -> Perm:
    """Permutation whose cycles are consecutive blocks of the given lengths."""
    images: List[int] = []
    start = 0
    for length in cycle_type:
        if length < 1:
            raise ValueError(f"cycle lengths must be positive: {tuple(cycle_type)}")
        images.extend(start + (i + 1) % length for i in range(length))
        start += length
    return tuple(images)


def _scan_pairs(xis: Sequence[Tuple[Perm, int]], r: int) -> Counter:
    """Weighted ``(cyc chi, cyc eta, cyc xi)`` counts of transitive pairs."""
    etas = list(permutations(range(r)))
    eta_cycles = [cycle_count(eta) for eta in etas]
    out: Counter = Counter()
    for xi, weight in xis:
        f = cycle_count(xi)
        for eta, e in zip(etas, eta_cycles):
            if not is_transitive(xi, eta):
                continue
            v = cycle_count(compose(xi, eta))
            out[(v, e, f)] += weight
    return out


def brute_force_counts(r: int, exhaustive: bool = False, workers: int = 1) -> Dict[Tuple[int, int, int], int]:
    """Rooted-hypermap counts keyed by ordered ``(v, e, f)``.

    By default one representative ``xi`` per cycle type is scanned against
    every ``eta`` and weighted by the class size, which gives the same
    totals as the full ``Sym_r x Sym_r`` scan done with ``exhaustive=True``.
    """
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    if exhaustive:
        xis = [(xi, 1) for xi in permutations(range(r))]
    else:
        xis = [
            (cycle_type_representative(ct), factorial(r) // z_factor(ct))
            for ct in partitions(r)
        ]
    if workers > 1 and len(xis) > 1:
        chunks = [xis[i::workers] for i in range(workers)]
        labelled: Counter = Counter()
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_scan_pairs, chunks, [r] * len(chunks)):
                labelled.update(part)
    else:
        labelled = _scan_pairs(xis, r)

    orbit = factorial(r - 1)
    out = {}
    for key, count in sorted(labelled.items()):
        q, rem = divmod(count, orbit)
        if rem:
            raise NonDivisibleBucket(f"{count} pairs at {key} not divisible by {orbit}")
        out[key] = q
    return out


def brute_force_table(r: int, exhaustive: bool = False, workers: int = 1) -> CoeffTable:
    counts = brute_force_counts(r, exhaustive=exhaustive, workers=workers)
    canonical = {}
    for key, count in counts.items():
        skey = tuple(sorted(key))
        if skey in canonical and canonical[skey] != count:
            raise ValueError(f"brute-force counts not symmetric at {skey}")
        canonical[skey] = count
    for key, count in counts.items():
        for other in permutations(key):
            if counts.get(other, 0) != count:
                raise ValueError(f"brute-force counts not symmetric: {key} vs {other}")
    return CoeffTable(r, canonical)


@lru_cache(maxsize=None)
def _p_counts(cycle_type: Tuple[int, ...], connected: bool) -> Tuple[Tuple[Tuple[int, int], int], ...]:
    """Histogram of ``(cyc eta, cyc xi eta)`` over ``eta`` for a fixed xi."""
    r = sum(cycle_type)
    xi = cycle_type_representative(cycle_type)
    hist: Counter = Counter()
    for eta in permutations(range(r)):
        if connected and not is_transitive(xi, eta):
            continue
        hist[(cycle_count(eta), cycle_count(compose(xi, eta)))] += 1
    return tuple(sorted(hist.items()))


def _eval_hist(hist, m, n) -> int:
    return sum(c * m**a * n**b for (a, b), c in hist)


def p_sum(cycle_type: Sequence[int], m: int, n: int) -> int:
    """``sum_eta m**cyc(eta) * n**cyc(xi eta)`` with xi of the given cycle type.

    The empty cycle type gives 1.
    """
    return _eval_hist(_p_counts(tuple(cycle_type), False), m, n)


def p_bar_sum(cycle_type: Sequence[int], m: int, n: int) -> int:
    """As :func:`p_sum`, restricted to eta with ``<xi, eta>`` transitive."""
    if not cycle_type:
        raise ValueError("connected sum needs at least one cycle")
    return _eval_hist(_p_counts(tuple(cycle_type), True), m, n)


def check_factorization(cycle_type: Sequence[int], m: int, n: int) -> bool:
    """Split ``P`` by the connected component holding the first cycle.

    Checks ``P_{r r_1..r_N} = sum_{u + v} Pbar_{r u} P_v`` over all ``2**N``
    ways of splitting the remaining cycles by position.
    """
    root, rest = cycle_type[0], tuple(cycle_type[1:])
    lhs = p_sum(cycle_type, m, n)
    rhs = 0
    idx = range(len(rest))
    for size in range(len(rest) + 1):
        for chosen in combinations(idx, size):
            u = tuple(rest[i] for i in chosen)
            v = tuple(rest[i] for i in idx if i not in chosen)
            rhs += p_bar_sum((root,) + u, m, n) * p_sum(v, m, n)
    return lhs == rhs


def f_from_p_sums(k: int, m: int, n: int, lam: int) -> Fraction:
    """``F_k`` from its definition as a sum over face-length tuples.

    Summing ``lam**N / N! * prod(1/r_i) * P_{r_1..r_N}`` over ordered tuples of
    total k is the same as summing ``lam**len(mu) * P_mu / z(mu)`` over
    partitions mu of k.
    """
    if k == 0:
        return Fraction(1)
    return sum(
        (Fraction(lam ** len(mu) * p_sum(mu, m, n), z_factor(mu)) for mu in partitions(k)),
        Fraction(0),
    )


class TruncatedSeries:
    """Power series in x with rational coefficients, kept modulo ``x**(order+1)``."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Sequence, order: int):
        c = [Fraction(x) for x in coeffs[: order + 1]]
        c.extend(Fraction(0) for _ in range(order + 1 - len(c)))
        self.coeffs = c
        self.order = order

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls([1], order)

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"TruncatedSeries({[str(c) for c in self.coeffs]})"

    def _check(self, other: "TruncatedSeries") -> None:
        if other.order != self.order:
            raise ValueError("truncation orders differ")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def scale(self, factor) -> "TruncatedSeries":
        factor = Fraction(factor)
        return TruncatedSeries([factor * a for a in self.coeffs], self.order)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        K = self.order
        out = [Fraction(0)] * (K + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j in range(K + 1 - i):
                    out[i + j] += a * other.coeffs[j]
        return TruncatedSeries(out, K)

    def exp(self) -> "TruncatedSeries":
        """``sum_N self**N / N!``; terms with ``N > order`` vanish."""
        if self.coeffs[0]:
            raise ValueError("exp needs a series with zero constant term")
        total = TruncatedSeries.one(self.order)
        power = TruncatedSeries.one(self.order)
        for N in range(1, self.order + 1):
            power = power * self
            total = total + power.scale(Fraction(1, factorial(N)))
        return total


def check_nested_series(m: int, lam: int, q: Sequence[int], K: int) -> bool:
    """Compare ``exp(lam * sum_j -log(1 - q_j x))`` with the product of binomial series.

    Left side: ``sum_N lam**N/N! (sum_j sum_r q_j**r x**r / r)**N``.
    Right side: ``prod_j sum_a rising(lam, a)/a! q_j**a x**a``.
    """
    if len(q) != m:
        raise ValueError(f"expected {m} components in q, got {len(q)}")
    inner = TruncatedSeries([0], K)
    for qj in q:
        inner = inner + TruncatedSeries([0] + [Fraction(qj**r, r) for r in range(1, K + 1)], K)
    lhs = inner.scale(lam).exp()

    rhs = TruncatedSeries.one(K)
    for qj in q:
        rhs = rhs * TruncatedSeries(
            [Fraction(rising_factorial(lam, a) * qj**a, factorial(a)) for a in range(K + 1)], K
        )
    return lhs == rhs
