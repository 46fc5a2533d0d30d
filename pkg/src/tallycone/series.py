"""Hilbert series as ``R(t) / prod(1 - t^d_k)`` with exact integer numerators."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .counting import count_table, lcm_upto
from .errors import NonTerminating

# factored denominators (exponent -> multiplicity) of the reference series
_KNOWN_DENOMINATORS = {
    3: {1: 2, 3: 1, 6: 3},
    4: {1: 2, 2: 1, 4: 2, 12: 7},
    5: {1: 4, 5: 2, 10: 1, 20: 3, 60: 10},
    6: {1: 3, 2: 1, 6: 5, 30: 4, 60: 17},
    7: {1: 6, 7: 3, 14: 1, 42: 6, 210: 5, 420: 21},
}


@dataclass(frozen=True)
class SeriesRep:
    numerator: tuple[int, ...]
    denominator: tuple[int, ...]

    def expand(self, k: int) -> list[int]:
        return expand_series(self, k)

    def to_json(self) -> dict:
        return {"numerator": [str(c) for c in self.numerator],
                "denominator": list(self.denominator)}

    @classmethod
    def from_json(cls, data: dict) -> SeriesRep:
        return cls(tuple(int(c) for c in data["numerator"]),
                   tuple(int(d) for d in data["denominator"]))


def default_denominator(n: int) -> tuple[int, ...]:
    if n < 2:
        raise ValueError("need at least 2 teams")
    known = _KNOWN_DENOMINATORS.get(n)
    if known is None:
        return (lcm_upto(n),) * (n * n - n)
    return tuple(d for d, m in sorted(known.items()) for _ in range(m))


def format_denominator(denominator: Sequence[int]) -> str:
    """Factored form such as ``(1-t)^2(1-t^3)(1-t^6)^3``."""
    parts = []
    for d, m in sorted(Counter(denominator).items()):
        base = "(1-t)" if d == 1 else f"(1-t^{d})"
        parts.append(base if m == 1 else f"{base}^{m}")
    return "".join(parts)


def _times_one_minus(coeffs: list[int], d: int) -> list[int]:
    # truncated in place multiplication by (1 - t^d)
    for i in range(len(coeffs) - 1, d - 1, -1):
        coeffs[i] -= coeffs[i - d]
    return coeffs


def multiply_denominator(counts: Sequence[int], denominator: Sequence[int]) -> list[int]:
    """First ``len(counts)`` coefficients of ``counts(t) * prod(1 - t^d)``."""
    out = list(counts)
    for d in denominator:
        _times_one_minus(out, d)
    return out


def numerator_from_counts(counts: Sequence[int], denominator: Sequence[int]) -> list[int]:
    """Recover ``R(t)`` from Hilbert function values ``counts[0..]``.

    The product is proper, so ``deg R < sum(denominator)``; the coefficients
    from ``sum(denominator)`` up to ``len(counts)-1`` must all vanish and are
    checked as a termination witness.
    """
    bound = sum(denominator)
    if len(counts) <= bound:
        raise NonTerminating(
            f"need counts up to G={bound} for a termination witness, got {len(counts) - 1}"
        )
    product = multiply_denominator(counts, denominator)
    residual = [(i, c) for i, c in enumerate(product[bound:], start=bound) if c]
    if residual:
        i, c = residual[0]
        raise NonTerminating(f"coefficient of t^{i} is {c}, expected 0")
    numerator = product[:bound]
    while len(numerator) > 1 and numerator[-1] == 0:
        numerator.pop()
    return numerator


def numerator_prefix(counts: Sequence[int], denominator: Sequence[int]) -> list[int]:
    """Leading numerator coefficients; exact but carries no termination check."""
    return multiply_denominator(counts, denominator)


def expand_series(rep: SeriesRep, k: int) -> list[int]:
    """First ``k`` coefficients of ``numerator / prod(1 - t^d)``."""
    if k < 1:
        raise ValueError("k must be positive")
    out = list(rep.numerator[:k]) + [0] * max(0, k - len(rep.numerator))
    for d in rep.denominator:
        # dividing by (1 - t^d) is a running sum with stride d
        for i in range(d, k):
            out[i] += out[i - d]
    return out


def hilbert_series(n: int, denominator: Sequence[int] | None = None,
                   extra: int = 16) -> SeriesRep:
    """Full series for ``n`` teams, with ``extra`` witness coefficients."""
    if denominator is None:
        denominator = default_denominator(n)
    counts = count_table(n, sum(denominator) + extra)
    return SeriesRep(tuple(numerator_from_counts(counts, denominator)),
                     tuple(denominator))


def series_prefix(n: int, k: int, denominator: Sequence[int] | None = None) -> list[int]:
    if denominator is None:
        denominator = default_denominator(n)
    return numerator_prefix(count_table(n, k - 1), denominator)
