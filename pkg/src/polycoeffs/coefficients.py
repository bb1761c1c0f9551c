"""Coefficients of integer powers of 1 + t + ... + t^m.

``coeff(n, k, m)`` is the coefficient of t^k in (1 + t + ... + t^m)^n for any
integer n (negative included), with the convention that it is 0 for k < 0.
Three independent algorithms are provided so each can serve as an oracle for
the others: direct series expansion, row-by-row recurrence with memoization,
and recursive reduction of the degree m down to ordinary binomials.
"""
from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from functools import lru_cache

from .errors import NegativeN
from .series import TruncatedSeries


@dataclass(frozen=True)
class CoeffKey:
    """The triple (n, k, m) indexing one coefficient; m must be at least 1."""

    n: int
    k: int
    m: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("m must be at least 1")


def _require_degree(m: int) -> None:
    if m < 1:
        raise ValueError("m must be at least 1")


def chi(m: int, k: int) -> int:
    """The coefficient of t^k in 1 / (1 + t + ... + t^m), in {-1, 0, 1}.

    Periodic with period m + 1: +1 when k = 0 (mod m+1), -1 when
    k = 1 (mod m+1), 0 otherwise, and 0 for all k < 0.  The degenerate
    m = 0 case is the indicator [k = 0].
    """
    if m < 0:
        raise ValueError("m must be non-negative")
    if k < 0:
        return 0
    if m == 0:
        return 1 if k == 0 else 0
    r = k % (m + 1)
    if r == 0:
        return 1
    if r == 1:
        return -1
    return 0


class CoeffCache:
    """Memoized triangle rows keyed by (n, m); safe for concurrent use.

    Rows with n >= 0 are built by convolving the previous row with
    1 + t + ... + t^m and are stored over their whole support 0..mn.
    Rows with n < 0 are obtained by exact deconvolution of the same
    relation (a left-to-right solve, valid because the constant term is 1)
    and are extended on demand.
    """

    def __init__(self):
        self._rows: dict[tuple[int, int], list[int]] = {}
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def row_prefix(self, n: int, m: int, length: int) -> list[int]:
        """A list of at least ``length`` coefficients of row n (n >= 0 rows
        may be shorter when their full support already ends earlier)."""
        with self._lock:
            row = self._rows.get((n, m))
            if row is not None and (
                len(row) >= length or (n >= 0 and len(row) == m * n + 1)
            ):
                self.hits += 1
                return row
            self.misses += 1
            if n >= 0:
                return self._build_nonnegative(n, m)
            return self._extend_negative(n, m, length)

    def _build_nonnegative(self, n: int, m: int) -> list[int]:
        rows = self._rows
        if (0, m) not in rows:
            rows[(0, m)] = [1]
        j = n
        while j > 0 and (j, m) not in rows:
            j -= 1
        prev = rows[(j, m)]
        for i in range(j + 1, n + 1):
            cur = [0] * (m * i + 1)
            for idx, c in enumerate(prev):
                if c:
                    for d in range(m + 1):
                        cur[idx + d] += c
            rows[(i, m)] = cur
            prev = cur
        return rows[(n, m)]

    def _extend_negative(self, n: int, m: int, length: int) -> list[int]:
        rows = self._rows
        need = max(length, 1)
        if (0, m) not in rows:
            rows[(0, m)] = [1]
        for j in range(-1, n - 1, -1):
            row = rows.setdefault((j, m), [])
            if len(row) >= need:
                continue
            parent = rows[(j + 1, m)]
            for k in range(len(row), need):
                acc = parent[k] if k < len(parent) else 0
                for i in range(1, min(m, k) + 1):
                    acc -= row[k - i]
                row.append(acc)
        return rows[(n, m)]


_DEFAULT_CACHE = CoeffCache()


def coeff_by_recurrence(n: int, k: int, m: int, cache: CoeffCache | None = None) -> int:
    """Row-building algorithm backed by the shared cache (the default path)."""
    _require_degree(m)
    if k < 0 or (n >= 0 and k > m * n):
        return 0
    c = cache if cache is not None else _DEFAULT_CACHE
    return c.row_prefix(n, m, k + 1)[k]


def coeff_by_series(n: int, k: int, m: int) -> int:
    """Direct extraction of [t^k] (1 + t + ... + t^m)^n via series powering."""
    _require_degree(m)
    if k < 0 or (n > 0 and k > m * n):
        return 0
    p = TruncatedSeries([1] * (m + 1), k)
    return (p ** n)[k]


def binom(n: int, k: int) -> int:
    """Binomial coefficient C(n, k) for any integer n and k.

    Negative upper index follows upper negation,
    C(-n, k) = (-1)^k C(n + k - 1, k); k < 0 gives 0.
    """
    if k < 0:
        return 0
    if n >= 0:
        return math.comb(n, k)
    sign = -1 if k & 1 else 1
    return sign * math.comb(-n + k - 1, k)


@lru_cache(maxsize=None)
def _reduce_degree(n: int, k: int, m: int) -> int:
    if k < 0:
        return 0
    if m == 1:
        return binom(n, k)
    total = 0
    for i in range(-(-k // m), k + 1):
        w = binom(n, i)
        if w:
            total += _reduce_degree(i, k - i, m - 1) * w
    return total


def coeff_by_binom_reduction(n: int, k: int, m: int) -> int:
    """Recursive reduction in m down to plain binomials at m = 1."""
    _require_degree(m)
    return _reduce_degree(n, k, m)


def coeff(n: int, k: int, m: int, cache: CoeffCache | None = None) -> int:
    """The default algorithm: memoized row recurrence."""
    return coeff_by_recurrence(n, k, m, cache)


def row(n: int, m: int, limit: int, cache: CoeffCache | None = None) -> list[int]:
    """Coefficients of row n for k = 0..limit, zero-padded beyond the support."""
    _require_degree(m)
    if limit < 0:
        raise ValueError("limit must be non-negative")
    c = cache if cache is not None else _DEFAULT_CACHE
    prefix = c.row_prefix(n, m, limit + 1)
    out = list(prefix[: limit + 1])
    out.extend([0] * (limit + 1 - len(out)))
    return out


def multinomial_oracle(n: int, k: int, m: int) -> int:
    """Brute-force factorial expansion, for n >= 0 only.

    Enumerates all tuples (n_1, ..., n_m) with n_1 + ... + n_m <= n and
    sum(i * n_i) = k, adding n! / ((n - sum n_i)! n_1! ... n_m!) for each.
    Exponential-time reference oracle; keep the arguments desk-sized.
    """
    _require_degree(m)
    if n < 0:
        raise NegativeN("the factorial expansion needs n >= 0")
    if k < 0:
        return 0
    fact = math.factorial
    n_fact = fact(n)
    total = 0

    def descend(size: int, used: int, weight: int, denom: int) -> None:
        nonlocal total
        if weight == 0:
            total += n_fact // (fact(n - used) * denom)
            return
        if size == 0 or weight > size * (n - used):
            return
        for count in range(min(n - used, weight // size) + 1):
            descend(size - 1, used + count, weight - size * count, denom * fact(count))

    descend(m, 0, k, 1)
    return total
