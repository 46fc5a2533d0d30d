"""Hilbert basis of the monoid of ordered score sheets.

The irreducible ordered sheets are exactly those in which teams ``0..i-1``
each score a single goal (against any opponent) and nobody else scores.
Every ordered sheet splits greedily into such elements.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .errors import ContainsZero, DimensionMismatch, NotOrdered
from .sheets import (
    ScoreSheet,
    cell_index,
    goal_vector,
    is_member,
    is_ordered,
    iter_sheets,
    random_ordered_sheet,
    total_goals,
)

DEFAULT_SEED = 20100625


@dataclass(frozen=True, order=True)
class HBElement:
    sheet: ScoreSheet
    scoring: int

    @property
    def cells(self) -> tuple[int, ...]:
        return self.sheet.cells


@dataclass
class Decomposition:
    target: ScoreSheet
    parts: list[HBElement] = field(default_factory=list)

    def total(self) -> ScoreSheet:
        acc = ScoreSheet.zero(self.target.teams)
        for part in self.parts:
            acc = acc + part.sheet
        return acc

    def is_valid(self) -> bool:
        return self.total() == self.target


def scoring_count(s: ScoreSheet) -> int | None:
    """Number of scoring teams if ``s`` has Hilbert-basis shape, else None."""
    g = goal_vector(s)
    if any(c > 1 for c in s.cells) or any(x > 1 for x in g):
        return None
    i = sum(g)
    if i == 0 or g != (1,) * i + (0,) * (s.teams - i):
        return None
    return i


def hb_element(s: ScoreSheet) -> HBElement:
    i = scoring_count(s)
    if i is None:
        raise ValueError("sheet is not a Hilbert basis element")
    return HBElement(s, i)


def hilbert_basis(n: int) -> list[HBElement]:
    """All irreducible ordered sheets for ``n`` teams, sorted by storage vector."""
    if n < 2:
        raise ValueError("need at least 2 teams")
    out = []
    size = n * (n - 1)
    for i in range(1, n + 1):
        choices = [[j for j in range(n) if j != k] for k in range(i)]
        for targets in itertools.product(*choices):
            cells = [0] * size
            for k, j in enumerate(targets):
                cells[cell_index(n, k, j)] = 1
            out.append(HBElement(ScoreSheet(n, tuple(cells)), i))
    out.sort(key=lambda h: h.cells)
    return out


def hb_cardinality(n: int) -> int:
    if n < 2:
        raise ValueError("need at least 2 teams")
    return sum((n - 1) ** i for i in range(1, n + 1))


def decompose(s: ScoreSheet) -> Decomposition:
    """Split an ordered sheet into Hilbert basis elements.

    Each step takes the last team ``r`` that still scores, lets every team
    ``i <= r`` give up one goal from its smallest nonzero column, and records
    that single-goal-per-row element.  The remainder stays ordered, so the
    loop runs exactly ``top_goals(s)`` times.
    """
    if not is_ordered(s):
        raise NotOrdered(f"goal vector {goal_vector(s)} is not weakly decreasing")
    n = s.teams
    m = n - 1
    cells = list(s.cells)
    g = list(goal_vector(s))
    parts = []
    while g[0] > 0:
        r = max(k for k in range(n) if g[k] > 0)
        h = [0] * len(cells)
        for i in range(r + 1):
            base = i * m
            slot = next(base + t for t in range(m) if cells[base + t] > 0)
            h[slot] = 1
            cells[slot] -= 1
            g[i] -= 1
        parts.append(HBElement(ScoreSheet(n, tuple(h)), r + 1))
    return Decomposition(s, parts)


def decompose_over(candidate: list[ScoreSheet], s: ScoreSheet) -> list[ScoreSheet] | None:
    """Write ``s`` as a sum of candidate elements by memoized search, or None.

    Candidates are assumed to lie in the monoid, so every partial remainder
    must be a member too; that prunes most branches.
    """
    n = s.teams
    gens = sorted({c.cells for c in candidate if any(c.cells)},
                  key=lambda c: (-sum(c), c))
    dead: set[tuple[int, ...]] = set()

    def search(x):
        if not any(x):
            return []
        if x in dead:
            return None
        for gen in gens:
            rest = tuple(a - b for a, b in zip(x, gen))
            if not is_member(n, rest):
                continue
            tail = search(rest)
            if tail is not None:
                return [gen] + tail
        dead.add(x)
        return None

    found = search(s.cells)
    if found is None:
        return None
    return [ScoreSheet(n, c) for c in found]


@dataclass
class VerificationReport:
    teams: int
    checked_sheets: int = 0
    checked_pairs: int = 0
    generation_failures: list[ScoreSheet] = field(default_factory=list)
    irreducibility_failures: list[tuple[ScoreSheet, ScoreSheet]] = field(default_factory=list)

    @property
    def generation_ok(self) -> bool:
        return not self.generation_failures

    @property
    def irreducibility_ok(self) -> bool:
        return not self.irreducibility_failures

    @property
    def passed(self) -> bool:
        return self.generation_ok and self.irreducibility_ok


def verify_hilbert_basis(
    n: int,
    candidate: list[ScoreSheet],
    *,
    exhaustive_total: int = 4,
    samples: int = 1000,
    sample_total: int = 20,
    seed: int = DEFAULT_SEED,
) -> VerificationReport:
    """Check a candidate Hilbert basis by generation and pairwise differences.

    Generation: every ordered sheet with at most ``exhaustive_total`` goals is
    searched for a representation over the candidate.  ``samples`` seeded
    random sheets with up to ``sample_total`` goals are greedily decomposed;
    since any generating set contains the Hilbert basis, each greedy part
    has to appear in the candidate.

    Irreducibility: for distinct ``x, y`` the difference ``x - y`` must leave
    the monoid (a negative entry or an unordered goal vector).
    """
    sheets = []
    for s in candidate:
        if isinstance(s, HBElement):
            s = s.sheet
        if s.teams != n:
            raise DimensionMismatch(f"candidate for {s.teams} teams, expected {n}")
        if s.is_zero():
            raise ContainsZero("the zero sheet cannot be part of a Hilbert basis")
        sheets.append(s)
    if not sheets:
        raise ValueError("empty candidate")

    report = VerificationReport(n)
    members = set(s.cells for s in sheets)

    for t in range(1, exhaustive_total + 1):
        for s in iter_sheets(n, t, ordered=True):
            report.checked_sheets += 1
            if decompose_over(sheets, s) is None:
                report.generation_failures.append(s)

    rng = random.Random(seed)
    for _ in range(samples):
        s = random_ordered_sheet(n, rng.randint(0, sample_total), rng)
        report.checked_sheets += 1
        if any(part.cells not in members for part in decompose(s).parts):
            report.generation_failures.append(s)

    for x in sheets:
        for y in sheets:
            if x is y or x == y:
                continue
            report.checked_pairs += 1
            diff = tuple(a - b for a, b in zip(x.cells, y.cells))
            if is_member(n, diff):
                report.irreducibility_failures.append((x, y))
    return report


def degree_sum(d: Decomposition) -> int:
    return sum(total_goals(p.sheet) for p in d.parts)
