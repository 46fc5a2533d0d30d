"""Hilbert functions of the score-sheet monoids and their quasipolynomials.

An ordered sheet is determined by its goal vector ``g`` (weakly decreasing)
plus, for each team, a way to spread ``g_i`` goals over ``n-1`` opponents.
The latter contributes ``C(g_i+n-2, n-2)`` choices, so counting ordered
sheets is a weighted count of partitions with at most ``n`` parts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import PeriodTooSmall, TooLarge
from .linalg import solve_exact
from .sheets import is_weakly_decreasing, iter_compositions, row_sums

_tables: dict[int, list[int]] = {}


def _row_weight(n: int, goals: int) -> int:
    return math.comb(goals + n - 2, n - 2)


def _partition_table(n: int, g_max: int) -> list[int]:
    # dp[k][s]: weighted count of decreasing length-k vectors with
    # entries <= b summing to s; b sweeps 0..g_max and dp is updated in place
    dp = [[0] * (g_max + 1) for _ in range(n + 1)]
    for k in range(n + 1):
        dp[k][0] = 1
    for b in range(1, g_max + 1):
        w = _row_weight(n, b)
        for k in range(1, n + 1):
            cur, prev = dp[k], dp[k - 1]
            cur[b:] = [x + w * y for x, y in zip(cur[b:], prev)]
    return dp[n]


def count_table(n: int, g_max: int) -> list[int]:
    """``[H(M_n, 0), ..., H(M_n, g_max)]``, cached per ``n``."""
    if n < 2 or g_max < 0:
        raise ValueError("need n >= 2 and g_max >= 0")
    table = _tables.get(n)
    if table is None or len(table) <= g_max:
        table = _partition_table(n, max(g_max, 2 * len(table or [])))
        _tables[n] = table
    return table[:g_max + 1]


def count_ordered(n: int, G: int) -> int:
    return count_table(n, G)[G]


def count_ordered_bruteforce(n: int, G: int) -> int:
    """Enumerate every sheet with ``G`` goals and keep the ordered ones."""
    if n > 5 or G > 8:
        raise TooLarge(f"brute force limited to n <= 5, G <= 8 (got n={n}, G={G})")
    return sum(1 for cells in iter_compositions(G, n * (n - 1))
               if is_weakly_decreasing(row_sums(n, cells)))


def count_unordered(n: int, G: int) -> int:
    return math.comb(n * n - n + G - 1, G)


def count_unordered_cumulative(n: int, G: int) -> int:
    return math.comb(n * n - n + G, G)


def count_unordered_bruteforce(n: int, G: int) -> int:
    if n > 4 or G > 8:
        raise TooLarge(f"brute force limited to n <= 4, G <= 8 (got n={n}, G={G})")
    return sum(1 for _ in iter_compositions(G, n * (n - 1)))


@lru_cache(maxsize=None)
def _top_tail(n: int, rest: int, bound: int) -> int:
    # weighted count of decreasing (g_2..) of length `rest` with entries <= bound
    if rest == 0:
        return 1
    return sum(_row_weight(n, g) * _top_tail(n, rest - 1, g) for g in range(bound + 1))


def count_ordered_top(n: int, k: int) -> int:
    """Ordered sheets whose first team scores exactly ``k`` goals."""
    return _row_weight(n, k) * _top_tail(n, n - 1, k)


@dataclass(frozen=True)
class Quasipolynomial:
    period: int
    degree: int
    # coefficients[c][l] multiplies G**l when G = c (mod period)
    coefficients: tuple[tuple[Fraction, ...], ...]

    def __call__(self, G: int) -> Fraction:
        row = self.coefficients[G % self.period]
        return sum((a * G ** l for l, a in enumerate(row)), Fraction(0))

    @property
    def leading_coefficients(self) -> list[Fraction]:
        return [row[self.degree] for row in self.coefficients]

    def to_json(self) -> dict:
        return {
            "period": self.period,
            "degree": self.degree,
            "classes": [[[str(a.numerator), str(a.denominator)] for a in row]
                        for row in self.coefficients],
        }

    @classmethod
    def from_json(cls, data: dict) -> Quasipolynomial:
        rows = tuple(tuple(Fraction(int(num), int(den)) for num, den in row)
                     for row in data["classes"])
        return cls(int(data["period"]), int(data["degree"]), rows)


def fit_polynomial(xs: list[int], ys: list[int]) -> list[Fraction]:
    """Coefficients (constant first) of the interpolating polynomial."""
    return solve_exact([[x ** k for k in range(len(xs))] for x in xs], ys)


def fit_quasipolynomial(n: int, period: int) -> Quasipolynomial:
    """Fit ``H(M_n, G)`` residue class by residue class and validate.

    Each class ``c`` is interpolated through the ``d = n^2 - n`` samples
    ``G = c, c+p, ..., c+(d-1)p`` and must reproduce ``d`` further samples.
    """
    if period < 1:
        raise ValueError("period must be positive")
    d = n * n - n
    counts = count_table(n, period * 2 * d)
    rows = []
    for c in range(period):
        xs = [c + k * period for k in range(2 * d)]
        coeffs = fit_polynomial(xs[:d], [counts[x] for x in xs[:d]])
        for x in xs[d:]:
            value = sum(a * x ** l for l, a in enumerate(coeffs))
            if value != counts[x]:
                raise PeriodTooSmall(
                    f"period {period} fails for n={n}: class {c} mispredicts G={x}"
                )
        rows.append(tuple(coeffs))
    return Quasipolynomial(period, d - 1, tuple(rows))


def lcm_upto(n: int) -> int:
    return math.lcm(*range(1, n + 1))


def minimal_period(n: int, limit: int = 4) -> int:
    """Smallest divisor of ``lcm(1..n)`` for which the fit validates."""
    if n > limit:
        raise TooLarge(f"minimal period search limited to n <= {limit}")
    e = lcm_upto(n)
    for p in range(1, e + 1):
        if e % p:
            continue
        try:
            fit_quasipolynomial(n, p)
        except PeriodTooSmall:
            continue
        return p
    raise AssertionError("lcm(1..n) must always be a valid period")


def multiplicity_of(n: int, limit: int = 4) -> Fraction:
    """Normalized volume ``a_{d-1} * (d-1)!`` read off the fitted quasipolynomial."""
    q = fit_quasipolynomial(n, minimal_period(n, limit))
    leads = set(q.leading_coefficients)
    if len(leads) != 1:
        raise AssertionError(f"residue classes disagree on the leading coefficient: {leads}")
    return leads.pop() * math.factorial(q.degree)
