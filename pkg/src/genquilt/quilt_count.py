"""Counting FQ-legal decompositions.

Three intertwined counts over subsets of {q_1 .. q_n}:

  d_n  legal subsets (the empty one included; d_0 = 1),
  c_n  legal subsets containing q_n (c_0 = 1 by convention),
  b_n  legal subsets containing both q_n and q_{n-2}.

For n >= 7 they satisfy d_n = c_n + d_{n-1}, c_n = d_{n-5} + c_{n-2} - b_{n-2},
b_n = d_{n-7}, which collapse to the pure-d recurrence
d_n = d_{n-1} + d_{n-2} - d_{n-3} + d_{n-5} - d_{n-9} for n >= 10.

Note d_n counts subsets by index bound, not by value: some of the counted
subsets sum past q_{n+1}.  Average-count reports filter by value instead, so
the two views must not be conflated (the exact average over [0, q_{n+1}) is
total/q_{n+1} with the value filter applied).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import oracle
from .errors import BudgetExceededError
from .quilt import QuiltCache, shared_cache

_WINDOW_BAD = 0b1101  # offsets 1, 3, 4 occupied (difference 2 is allowed)

AVERAGE_BUDGET = 30


@dataclass
class CountTables:
    """Aligned columns d, c, b; d[n] = d_n etc.  b[0] is a zero pad (b_n starts at n = 1)."""

    d: list[int]
    c: list[int]
    b: list[int]

    @property
    def n_max(self) -> int:
        return len(self.d) - 1


@dataclass
class AverageReport:
    """Exact average number of decompositions over [0, q_{n+1})."""

    n: int
    total: int
    average: Fraction
    exponent_estimate: float | None


def _seed_tables(upto: int) -> tuple[list[int], list[int], list[int]]:
    # Rows below the recurrence threshold come from exhaustive enumeration,
    # not from a hard-coded table.
    d = [1]
    c = [1]
    b = [0]
    for n in range(1, upto + 1):
        subsets = oracle.enumerate_legal("quilt", n).subsets
        d.append(len(subsets))
        c.append(sum(1 for s in subsets if n in s))
        b.append(sum(1 for s in subsets if n in s and n - 2 in s))
    return d, c, b


def count_tables(n_max: int) -> CountTables:
    """d, c, b for 0..n_max: enumeration seeds below 7, recurrences beyond."""
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    d, c, b = _seed_tables(min(n_max, 6))
    for n in range(7, n_max + 1):
        b.append(d[n - 7])
        c.append(d[n - 5] + c[n - 2] - b[n - 2])
        d.append(c[n] + d[n - 1])
    return CountTables(d, c, b)


def count_decompositions(m: int, max_index: int | None = None, cache: QuiltCache | None = None) -> int:
    """Exact number of FQ-legal index sets summing to ``m`` (m = 0 counts 1).

    Depth-first over indices descending with the 5-wide occupancy window, the
    {1,3} rule, and pruning by the partial-sum identity
    q_1 + ... + q_i = q_{i+5} - 6.  ``max_index`` is a sizing hint only: the
    cache auto-extends to cover ``m``, and indices whose term exceeds ``m``
    cannot occur in any decomposition, so the count never depends on it.
    """
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    if max_index is not None and max_index < 1:
        raise ValueError(f"max_index must be >= 1, got {max_index}")
    if m == 0:
        return 1
    cache = cache or shared_cache()
    top = cache.index_of_largest_leq(m)
    cache.ensure_count(top + 5)
    term = cache.term

    def rec(i: int, remaining: int, mask: int, three_used: bool) -> int:
        if remaining == 0:
            return 1
        if i == 0 or remaining > term(i + 5) - 6:
            return 0  # even taking everything below i cannot reach
        total = 0
        v = term(i)
        if v <= remaining and not mask & _WINDOW_BAD and not (i == 1 and three_used):
            total += rec(i - 1, remaining - v, ((mask << 1) | 1) & 0b1111, three_used or i == 3)
        total += rec(i - 1, remaining, (mask << 1) & 0b1111, three_used)
        return total

    return rec(top, m, 0, False)


def _filtered_subset_total(n: int, cache: QuiltCache) -> int:
    """Number of legal subsets with value below q_{n+1}.

    Indices above n need not be visited: any such summand is itself at least
    q_{n+1}, so the value filter would reject the subset anyway.
    """
    limit = cache.term(n + 1)
    cache.ensure_count(n + 5)
    term = cache.term

    def rec(i: int, used: int, mask: int, three_used: bool) -> int:
        if i == 0:
            return 1
        total = rec(i - 1, used, (mask << 1) & 0b1111, three_used)
        v = term(i)
        if used + v < limit and not mask & _WINDOW_BAD and not (i == 1 and three_used):
            total += rec(i - 1, used + v, ((mask << 1) | 1) & 0b1111, three_used or i == 3)
        return total

    return rec(n, 0, 0, False)


def average_decompositions(n: int, budget: int = AVERAGE_BUDGET) -> AverageReport:
    """Exact mean of the per-integer decomposition count over [0, q_{n+1}).

    Computed by enumerating legal subsets whose value stays below q_{n+1}
    (each decomposition of each m in range appears exactly once).  The
    exponent estimate is average(n)/average(n-1), defined for n >= 2.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > budget:
        raise BudgetExceededError("average enumeration index", n, budget)
    cache = shared_cache()
    total = _filtered_subset_total(n, cache)
    average = Fraction(total, cache.term(n + 1))
    exponent = None
    if n >= 2:
        prev = Fraction(_filtered_subset_total(n - 1, cache), cache.term(n))
        exponent = float(average / prev)
    return AverageReport(n=n, total=total, average=average, exponent_estimate=exponent)
