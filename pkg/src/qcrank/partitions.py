"""Brute-force partition oracle: enumeration, rank, crank and residue tallies.

Everything in this module is computed by walking every partition, with the
single exception of :func:`p_count`, which uses Euler's pentagonal recurrence
above ``n = 30`` (and is cross-checked against enumeration below that).
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Iterator, List, Tuple

from .series import QSeries, from_dict

Partition = Tuple[int, ...]

STATS = ("N", "NT", "M_omega")
_ALIASES = {"rank": "N", "N": "N", "NT": "NT", "parts": "NT", "crank": "M_omega", "M_omega": "M_omega", "M": "M_omega"}


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """Partitions of ``n`` as weakly decreasing tuples, lexicographically descending.

    Zoghbi-Stojmenovic ZS1 ordering; ``n = 0`` yields the empty partition.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        yield ()
        return
    x = [1] * (n + 1)
    x[1] = n
    m, h = 1, 1
    yield (n,)
    while x[1] != 1:
        if x[h] == 2:
            m += 1
            x[h] = 1
            h -= 1
        else:
            r = x[h] - 1
            t = m - h + 1
            x[h] = r
            while t >= r:
                h += 1
                x[h] = r
                t -= r
            if t == 0:
                m = h
            else:
                m = h + 1
                if t > 1:
                    h += 1
                    x[h] = t
        yield tuple(x[1:m + 1])


def ones(parts: Partition) -> int:
    """Number of parts equal to 1."""
    # parts are weakly decreasing, so the ones form a suffix
    return len(parts) - bisect_left([-p for p in parts], -1)


def rank(parts: Partition) -> int:
    """Dyson's rank: largest part minus number of parts (0 for the empty partition)."""
    if not parts:
        return 0
    return parts[0] - len(parts)


def crank(parts: Partition) -> int:
    """Andrews-Garvan crank (0 for the empty partition).

    With ``w`` ones: the largest part if ``w == 0``, otherwise the number of
    parts strictly larger than ``w`` minus ``w``.
    """
    if not parts:
        return 0
    w = ones(parts)
    if w == 0:
        return parts[0]
    mu = sum(1 for p in parts if p > w)
    return mu - w


def _pentagonal_counts(n: int) -> List[int]:
    p = [1] + [0] * n
    for k in range(1, n + 1):
        total = 0
        j = 1
        while True:
            g1 = j * (3 * j - 1) // 2
            if g1 > k:
                break
            sign = 1 if j % 2 else -1
            total += sign * p[k - g1]
            g2 = j * (3 * j + 1) // 2
            if g2 <= k:
                total += sign * p[k - g2]
            j += 1
        p[k] = total
    return p


ENUMERATION_CUTOFF = 30


@lru_cache(maxsize=None)
def p_count(n: int) -> int:
    """Number of partitions of ``n``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n <= ENUMERATION_CUTOFF:
        return sum(1 for _ in enumerate_partitions(n))
    return _pentagonal_counts(n)[n]


def p_pentagonal(n: int) -> int:
    """``p(n)`` from the pentagonal recurrence alone."""
    return _pentagonal_counts(n)[n]


@dataclass
class StatTable:
    """Residue-class tallies of one statistic for the partitions of ``n``."""

    n: int
    k: int
    which: str
    counts: Dict[int, int] = field(default_factory=dict)

    def __getitem__(self, r: int) -> int:
        return self.counts.get(r % self.k, 0)

    def total(self) -> int:
        return sum(self.counts.values())

    def combination(self, weights: Dict[int, int]) -> int:
        """``sum weights[r] * count(r)``."""
        return sum(w * self[r] for r, w in weights.items())


@lru_cache(maxsize=None)
def _raw_stats(n: int) -> Tuple[Tuple[int, int, int, int], ...]:
    """``(rank, crank, parts, ones)`` for every partition of ``n``."""
    rows = []
    for lam in enumerate_partitions(n):
        rows.append((rank(lam), crank(lam), len(lam), ones(lam)))
    return tuple(rows)


def stats(n: int, k: int, which: str) -> StatTable:
    """Tally ``N``, ``NT`` or ``M_omega`` by residue class mod ``k``.

    ``N`` counts partitions by rank, ``NT`` sums their numbers of parts by
    rank, ``M_omega`` sums their numbers of ones by crank.
    """
    if k < 2:
        raise ValueError("modulus k must be at least 2")
    which = _ALIASES.get(which, which)
    if which not in STATS:
        raise ValueError(f"unknown statistic {which!r}; expected one of {STATS}")
    counts = {r: 0 for r in range(k)}
    for rk, ck, nparts, nones in _raw_stats(n):
        if which == "N":
            counts[rk % k] += 1
        elif which == "NT":
            counts[rk % k] += nparts
        else:
            counts[ck % k] += nones
    return StatTable(n, k, which, counts)


def series_from_stats(k: int, b: int, which: str, order: int, start: int = 0) -> QSeries:
    """``sum_n stat(b, k, n) q**n`` for ``start <= n <= order``, by enumeration."""
    terms = {n: stats(n, k, which)[b] for n in range(start, order + 1)}
    return from_dict(terms, order)


def combination_series(k: int, weights: Dict[int, int], which: str, order: int, start: int = 0) -> QSeries:
    """``sum_n (sum_r weights[r] * stat(r, k, n)) q**n`` by enumeration."""
    terms = {n: stats(n, k, which).combination(weights) for n in range(start, order + 1)}
    return from_dict(terms, order)
