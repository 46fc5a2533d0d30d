"""Score sheets of a round-robin tournament and the monoid operations on them.

A sheet for ``n`` teams records ``g[i][j]``, the goals team ``i`` scored
against team ``j``.  Internally the diagonal is dropped and the off-diagonal
entries are stored row-major in a tuple of length ``n*(n-1)``.  Teams are
indexed from 0 in the API.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import (
    BadDimension,
    BadPermutation,
    DimensionMismatch,
    NegativeEntry,
    NonzeroDiagonal,
)

GoalVector = tuple[int, ...]


def cell_index(n: int, i: int, j: int) -> int:
    """Position of entry (i, j), i != j, in the diagonal-free storage."""
    if i == j:
        raise IndexError("diagonal cells are not stored")
    return i * (n - 1) + (j if j < i else j - 1)


def cell_pairs(n: int) -> list[tuple[int, int]]:
    """The (i, j) pair of every storage slot, in storage order."""
    return [(i, j) for i in range(n) for j in range(n) if i != j]


@dataclass(frozen=True, order=True)
class ScoreSheet:
    teams: int
    cells: tuple[int, ...]

    def __post_init__(self):
        n = self.teams
        if not isinstance(n, int) or n < 2:
            raise BadDimension(f"need at least 2 teams, got {n!r}")
        cells = tuple(self.cells)
        if len(cells) != n * (n - 1):
            raise BadDimension(
                f"{n} teams need {n * (n - 1)} cells, got {len(cells)}"
            )
        for c in cells:
            if not isinstance(c, int) or isinstance(c, bool):
                raise TypeError(f"entry {c!r} is not an integer")
            if c < 0:
                raise NegativeEntry(f"negative entry {c}")
        object.__setattr__(self, "cells", cells)

    @classmethod
    def zero(cls, n: int) -> ScoreSheet:
        return cls(n, (0,) * (n * (n - 1)))

    def entry(self, i: int, j: int) -> int:
        if i == j:
            return 0
        return self.cells[cell_index(self.teams, i, j)]

    def row(self, i: int) -> tuple[int, ...]:
        m = self.teams - 1
        return self.cells[i * m:(i + 1) * m]

    def grid(self) -> list[list[int]]:
        n = self.teams
        return [[self.entry(i, j) for j in range(n)] for i in range(n)]

    def is_zero(self) -> bool:
        return not any(self.cells)

    def __add__(self, other: ScoreSheet) -> ScoreSheet:
        return add_sheets(self, other)

    def __iter__(self) -> Iterator[int]:
        return iter(self.cells)

    def __str__(self) -> str:
        n = self.teams
        rows = []
        for i in range(n):
            rows.append(" ".join("*" if i == j else str(self.entry(i, j))
                                 for j in range(n)))
        return "\n".join(rows)


def make_sheet(n: int, entries: Sequence[Sequence[int]]) -> ScoreSheet:
    """Build a sheet from a full ``n x n`` grid whose diagonal must be zero."""
    if not isinstance(n, int) or n < 2:
        raise BadDimension(f"need at least 2 teams, got {n!r}")
    if len(entries) != n or any(len(row) != n for row in entries):
        raise BadDimension(f"expected a {n}x{n} grid")
    cells = []
    for i, row in enumerate(entries):
        for j, value in enumerate(row):
            if i == j:
                if value != 0:
                    raise NonzeroDiagonal(f"diagonal entry ({i},{i}) is {value}")
                continue
            if value < 0:
                raise NegativeEntry(f"entry ({i},{j}) is {value}")
            cells.append(int(value))
    return ScoreSheet(n, tuple(cells))


def add_sheets(a: ScoreSheet, b: ScoreSheet) -> ScoreSheet:
    if a.teams != b.teams:
        raise DimensionMismatch(f"cannot add sheets for {a.teams} and {b.teams} teams")
    return ScoreSheet(a.teams, tuple(x + y for x, y in zip(a.cells, b.cells)))


def difference(a: ScoreSheet, b: ScoreSheet) -> tuple[int, ...]:
    """Raw entrywise ``a - b``; entries may be negative, so no sheet is built."""
    if a.teams != b.teams:
        raise DimensionMismatch(f"{a.teams} vs {b.teams} teams")
    return tuple(x - y for x, y in zip(a.cells, b.cells))


def row_sums(n: int, cells: Sequence[int]) -> GoalVector:
    m = n - 1
    return tuple(sum(cells[i * m:(i + 1) * m]) for i in range(n))


def goal_vector(s: ScoreSheet) -> GoalVector:
    return row_sums(s.teams, s.cells)


def total_goals(s: ScoreSheet) -> int:
    return sum(s.cells)


def top_goals(s: ScoreSheet) -> int:
    """The degree-one grading: goals scored by the first team."""
    return sum(s.row(0))


def is_weakly_decreasing(g: Sequence[int]) -> bool:
    return all(g[k] >= g[k + 1] for k in range(len(g) - 1))


def is_ordered(s: ScoreSheet) -> bool:
    return is_weakly_decreasing(goal_vector(s))


def is_member(n: int, cells: Sequence[int]) -> bool:
    """Membership in the ordered monoid: nonnegative integers, decreasing totals."""
    if any(c < 0 for c in cells):
        return False
    return is_weakly_decreasing(row_sums(n, cells))


def pattern_vector(n: int, i: int) -> GoalVector:
    """``(1,...,1,0,...,0)`` with ``i`` leading ones."""
    if not 0 <= i <= n:
        raise ValueError(f"pattern index {i} out of range for {n} teams")
    return (1,) * i + (0,) * (n - i)


def relabel(s: ScoreSheet, perm: Sequence[int]) -> ScoreSheet:
    """Reorder teams so that new team ``k`` is old team ``perm[k]``.

    Rows and columns are permuted simultaneously.
    """
    n = s.teams
    perm = tuple(perm)
    if sorted(perm) != list(range(n)):
        raise BadPermutation(f"{perm!r} is not a permutation of 0..{n - 1}")
    cells = tuple(s.entry(perm[i], perm[j]) for i, j in cell_pairs(n))
    return ScoreSheet(n, cells)


def inverse_permutation(perm: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(perm)
    for k, p in enumerate(perm):
        inv[p] = k
    return tuple(inv)


def canonical_permutation(s: ScoreSheet) -> tuple[int, ...]:
    g = goal_vector(s)
    # sorted() is stable, so ties keep the original team order
    return tuple(sorted(range(s.teams), key=lambda k: -g[k]))


def canonicalize(s: ScoreSheet) -> ScoreSheet:
    """Relabel teams by descending goal total; the result is always ordered."""
    return relabel(s, canonical_permutation(s))


def iter_compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All nonnegative integer vectors of length ``parts`` summing to ``total``."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in iter_compositions(total - first, parts - 1):
            yield (first,) + rest


def iter_sheets(n: int, total: int, ordered: bool = False) -> Iterator[ScoreSheet]:
    """Every sheet with exactly ``total`` goals, optionally only ordered ones."""
    for cells in iter_compositions(total, n * (n - 1)):
        if ordered and not is_weakly_decreasing(row_sums(n, cells)):
            continue
        yield ScoreSheet(n, cells)


def random_sheet(n: int, total: int, rng) -> ScoreSheet:
    """Drop ``total`` goals into uniformly random cells (``rng``: random.Random)."""
    cells = [0] * (n * (n - 1))
    for _ in range(total):
        cells[rng.randrange(len(cells))] += 1
    return ScoreSheet(n, tuple(cells))


def random_ordered_sheet(n: int, total: int, rng) -> ScoreSheet:
    return canonicalize(random_sheet(n, total, rng))
