"""Small exact linear algebra over the integers and rationals."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import SingularSystem


def solve_exact(matrix: Sequence[Sequence[int | Fraction]],
                rhs: Sequence[int | Fraction]) -> list[Fraction]:
    """Solve a square system by Gauss-Jordan elimination over Q."""
    size = len(matrix)
    a = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    for col in range(size):
        pivot = next((r for r in range(col, size) if a[r][col] != 0), None)
        if pivot is None:
            raise SingularSystem(f"no pivot in column {col}")
        a[col], a[pivot] = a[pivot], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(size):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[-1] for row in a]


def _eliminate(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    # fraction-free row echelon form; returns the nonzero rows
    a = [list(r) for r in rows]
    if not a:
        return []
    width = len(a[0])
    out = []
    col = 0
    while a and col < width:
        pivot = next((r for r in a if r[col] != 0), None)
        if pivot is None:
            col += 1
            continue
        a.remove(pivot)
        p = pivot[col]
        a = [[p * x - r[col] * y for x, y in zip(r, pivot)] if r[col] else r for r in a]
        a = [r for r in a if any(r)]
        out.append(pivot)
        col += 1
    return out


def rank(rows: Sequence[Sequence[int]]) -> int:
    return len(_eliminate(rows))


def affine_rank(points: Sequence[Sequence[int]]) -> int:
    """Dimension of the affine hull of ``points`` (-1 for no points)."""
    if not points:
        return -1
    p0 = points[0]
    return rank([[a - b for a, b in zip(p, p0)] for p in points[1:]])


def det(matrix: Sequence[Sequence[int]]) -> int:
    """Determinant of an integer matrix by Bareiss elimination."""
    size = len(matrix)
    a = [list(map(int, row)) for row in matrix]
    sign = 1
    prev = 1
    for k in range(size - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, size) if a[r][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1] if size else 1
