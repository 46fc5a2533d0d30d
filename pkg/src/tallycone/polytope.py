"""The polytope of ordered sheets whose first team scores exactly one goal.

Under the grading "goals of team 0" the ordered monoid is the Ehrhart
monoid of a 0/1 polytope whose vertices are the Hilbert basis elements.
Vertices are checked against the inequality description, and pulling
triangulations are built with exact lattice volumes.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .basis import hilbert_basis
from .counting import count_ordered_top, fit_polynomial
from .errors import DegenerateSimplex, DimensionTooLarge
from .linalg import affine_rank, det, rank, solve_exact
from .sheets import cell_index

EQ, GE0, LE1 = "eq", "ge0", "le1"


@dataclass(frozen=True)
class Constraint:
    coefficients: tuple[int, ...]
    relation: str  # eq: form == 1, ge0: form >= 0, le1: form <= 1

    def value(self, x: Sequence[int]) -> int:
        return sum(a * b for a, b in zip(self.coefficients, x) if a)

    def holds(self, x: Sequence[int]) -> bool:
        v = self.value(x)
        if self.relation == EQ:
            return v == 1
        if self.relation == GE0:
            return v >= 0
        return v <= 1

    def is_tight(self, x: Sequence[int]) -> bool:
        return self.value(x) == (0 if self.relation == GE0 else 1)

    def to_json(self) -> dict:
        return {"coefficients": list(self.coefficients), "relation": self.relation}


@dataclass(frozen=True)
class FacetSystem:
    teams: int
    constraints: tuple[Constraint, ...]

    @property
    def dimension(self) -> int:
        return self.teams * (self.teams - 1)

    @property
    def equations(self) -> list[Constraint]:
        return [c for c in self.constraints if c.relation == EQ]

    @property
    def inequalities(self) -> list[Constraint]:
        return [c for c in self.constraints if c.relation != EQ]

    def contains(self, x: Sequence[int]) -> bool:
        return all(c.holds(x) for c in self.constraints)

    def to_json(self) -> dict:
        return {"teams": self.teams, "dimension": self.dimension,
                "rows": [c.to_json() for c in self.constraints]}


def _row_form(n: int, i: int) -> list[int]:
    form = [0] * (n * (n - 1))
    for j in range(n):
        if j != i:
            form[cell_index(n, i, j)] = 1
    return form


def facet_system(n: int) -> FacetSystem:
    """``g_1 = 1``, ``0 <= g_{i-1} - g_i <= 1`` and ``0 <= g_ij <= 1``."""
    if n < 2:
        raise ValueError("need at least 2 teams")
    size = n * (n - 1)
    rows = [Constraint(tuple(_row_form(n, 0)), EQ)]
    for i in range(1, n):
        a, b = _row_form(n, i - 1), _row_form(n, i)
        form = tuple(x - y for x, y in zip(a, b))
        rows.append(Constraint(form, GE0))
        rows.append(Constraint(form, LE1))
    for k in range(size):
        unit = tuple(int(t == k) for t in range(size))
        rows.append(Constraint(unit, GE0))
        rows.append(Constraint(unit, LE1))
    return FacetSystem(n, tuple(rows))


@dataclass
class VertexReport:
    teams: int
    dimension: int
    vertices: list[tuple[int, ...]] = field(default_factory=list)
    not_vertices: list[tuple[int, ...]] = field(default_factory=list)
    extra_lattice_points: list[tuple[int, ...]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.not_vertices and not self.extra_lattice_points


def verify_vertices(n: int, limit: int = 4) -> VertexReport:
    """Check that every Hilbert basis element is a vertex of the polytope and
    that the polytope has no other lattice points (a full 0/1 scan)."""
    if n > limit:
        raise DimensionTooLarge(f"vertex verification limited to n <= {limit}")
    system = facet_system(n)
    size = system.dimension
    hb = [h.cells for h in hilbert_basis(n)]
    report = VertexReport(n, affine_rank(hb))
    for x in hb:
        normals = [c.coefficients for c in system.constraints if c.is_tight(x)]
        if system.contains(x) and rank(normals) == size:
            report.vertices.append(x)
        else:
            report.not_vertices.append(x)
    known = set(hb)
    for x in itertools.product((0, 1), repeat=size):
        if x not in known and system.contains(x):
            report.extra_lattice_points.append(x)
    return report


def lattice_coordinates(v: Sequence[int]) -> tuple[int, ...]:
    """Coordinates of a vector with zero first-row sum in the basis
    ``{e_k : k outside row 0} + {e_j - e_0 : j in row 0, j != 0}``,
    which amounts to dropping storage coordinate 0."""
    return tuple(v[1:])


def simplex_volume(points: Sequence[Sequence[int]]) -> int:
    """Normalized lattice volume of a full-dimensional simplex in the polytope."""
    p0 = points[0]
    edges = [lattice_coordinates([a - b for a, b in zip(p, p0)]) for p in points[1:]]
    if not edges:
        return 1
    if len(edges) != len(edges[0]):
        raise DegenerateSimplex(
            f"{len(points)} points do not span a {len(edges[0])}-dimensional simplex"
        )
    vol = abs(det(edges))
    if vol == 0:
        raise DegenerateSimplex("points are affinely dependent")
    return vol


@dataclass
class Triangulation:
    teams: int
    points: list[tuple[int, ...]]
    simplices: list[tuple[int, ...]]
    volumes: list[int]

    @property
    def total_volume(self) -> int:
        return sum(self.volumes)

    def is_unimodular(self) -> bool:
        return all(v == 1 for v in self.volumes)

    def to_json(self) -> dict:
        return {
            "teams": self.teams,
            "simplices": [{"vertices": list(s), "volume": v}
                          for s, v in zip(self.simplices, self.volumes)],
        }


def pulling_triangulation(n: int, long_run: bool = False,
                          order: Sequence[int] | None = None) -> Triangulation:
    """Recursively pull the first vertex (in ``order``) of every face.

    Vertices are indexed into ``hilbert_basis(n)``; the default order is that
    list's lexicographic order.  Faces are vertex sets cut out by tight
    constraints, which suffices because every lattice point is a vertex.
    """
    if n > 4 or (n == 4 and not long_run):
        raise DimensionTooLarge(
            f"pulling triangulation for n={n} needs long_run (n=4) or is out of reach"
        )
    system = facet_system(n)
    points = [h.cells for h in hilbert_basis(n)]
    rank_of = {k: i for i, k in enumerate(order if order is not None else range(len(points)))}
    tight_sets = []
    for c in system.inequalities:
        ts = frozenset(i for i, x in enumerate(points) if c.is_tight(x))
        if ts and len(ts) < len(points):
            tight_sets.append(ts)
    tight_sets = list(set(tight_sets))

    dims: dict[frozenset, int] = {}

    def dim(face):
        if face not in dims:
            dims[face] = affine_rank([points[i] for i in face])
        return dims[face]

    memo: dict[frozenset, list[tuple[int, ...]]] = {}

    def pull(face):
        if face in memo:
            return memo[face]
        d = dim(face)
        if len(face) == d + 1:
            out = [tuple(sorted(face))]
        else:
            apex = min(face, key=rank_of.__getitem__)
            facets = set()
            for ts in tight_sets:
                sub = face & ts
                if sub and sub != face and apex not in sub and dim(sub) == d - 1:
                    facets.add(sub)
            out = []
            for sub in sorted(facets, key=sorted):
                for simplex in pull(sub):
                    out.append(tuple(sorted((apex,) + simplex)))
        memo[face] = out
        return out

    simplices = pull(frozenset(range(len(points))))
    volumes = [simplex_volume([points[i] for i in s]) for s in simplices]
    return Triangulation(n, points, simplices, volumes)


def _barycentric(points: Sequence[Sequence[int]], x: Sequence[Fraction]) -> list[Fraction]:
    p0 = lattice_coordinates(points[0])
    cols = [[a - b for a, b in zip(lattice_coordinates(p), p0)] for p in points[1:]]
    matrix = [list(row) for row in zip(*cols)]
    rhs = [a - b for a, b in zip(lattice_coordinates(x), p0)]
    lam = solve_exact(matrix, rhs)
    return [1 - sum(lam)] + lam


def check_interiors_disjoint(tri: Triangulation) -> list[tuple[int, int]]:
    """Pairs ``(s, t)`` whose simplex ``t`` contains the barycenter of ``s``.

    A barycenter is interior to its own simplex, so any such pair with
    ``s != t`` means two simplices overlap in their interiors.
    """
    bad = []
    cells = [[tri.points[i] for i in s] for s in tri.simplices]
    for s, verts in enumerate(cells):
        k = len(verts)
        center = [Fraction(sum(col), k) for col in zip(*verts)]
        for t, other in enumerate(cells):
            if t != s and all(l >= 0 for l in _barycentric(other, center)):
                bad.append((s, t))
    return bad


def ehrhart_volume(n: int) -> int:
    """Normalized volume from the Ehrhart polynomial of the polytope.

    Lattice points of the ``k``-th dilate are the ordered sheets whose first
    team scores ``k`` goals; the interpolated leading coefficient times
    ``dim!`` is the normalized volume, independent of any triangulation.
    """
    dim = n * (n - 1) - 1
    ks = list(range(2 * dim + 2))
    values = [count_ordered_top(n, k) for k in ks]
    coeffs = fit_polynomial(ks[:dim + 1], values[:dim + 1])
    for k in ks[dim + 1:]:
        if sum(a * k ** l for l, a in enumerate(coeffs)) != values[k]:
            raise AssertionError(f"Ehrhart fit fails at k={k}")
    vol = coeffs[dim] * math.factorial(dim)
    if vol.denominator != 1:
        raise AssertionError(f"non-integral normalized volume {vol}")
    return int(vol)
