"""Hilbert basis of the ordered cone from its inequalities alone.

This is an independent check on the constructive basis.  It starts from the
unit vectors (the Hilbert basis of the orthant) and cuts with one ordering
halfspace at a time.  For each cut the current generators are closed under
sums of a positive and a negative element, each sum being reduced
sign-compatibly; the nonnegative side, stripped of reducible elements, is the
Hilbert basis of the smaller monoid.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import BudgetExceeded
from .sheets import cell_index

Vector = tuple[int, ...]
DEFAULT_CAP = 10 ** 6


@dataclass(frozen=True)
class ConeSystem:
    teams: int
    forms: tuple[Vector, ...]  # each form f means f . x >= 0, on top of x >= 0

    @property
    def dimension(self) -> int:
        return self.teams * (self.teams - 1)

    def contains(self, x: Sequence[int]) -> bool:
        return all(c >= 0 for c in x) and all(_dot(f, x) >= 0 for f in self.forms)


def _dot(f: Sequence[int], x: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(f, x) if a)


def cone_system(n: int) -> ConeSystem:
    """Forms ``g_i - g_{i+1} >= 0`` over the diagonal-free coordinates."""
    if n < 2:
        raise ValueError("need at least 2 teams")
    size = n * (n - 1)
    forms = []
    for i in range(n - 1):
        f = [0] * size
        for j in range(n):
            if j != i:
                f[cell_index(n, i, j)] += 1
            if j != i + 1:
                f[cell_index(n, i + 1, j)] -= 1
        forms.append(tuple(f))
    return ConeSystem(n, tuple(forms))


def _sub(x: Vector, y: Vector) -> Vector:
    return tuple(a - b for a, b in zip(x, y))


def _add(x: Vector, y: Vector) -> Vector:
    return tuple(a + b for a, b in zip(x, y))


def _conformal(lw: int, ls: int) -> bool:
    # w may be split off s only if lambda(w) and lambda(s - w) share a sign
    if ls > 0:
        return 0 <= lw <= ls
    if ls < 0:
        return ls <= lw <= 0
    return lw == 0


def _cut(gens: list[Vector], member: Callable[[Vector], bool],
         form: Vector, cap: int) -> list[Vector]:
    lam = {g: _dot(form, g) for g in gens}
    elements = list(gens)
    known = set(gens)

    def reduce(s: Vector) -> Vector:
        ls = _dot(form, s)
        changed = True
        while changed and any(s):
            changed = False
            for w in elements:
                if w != s and _conformal(lam[w], ls):
                    rest = _sub(s, w)
                    if member(rest):
                        s, ls = rest, ls - lam[w]
                        changed = True
                        break
        return s

    queue: list[tuple[int, Vector, Vector]] = []

    def push_pairs(x: Vector):
        lx = lam[x]
        for y in elements:
            if lx * lam[y] < 0:
                heapq.heappush(queue, (sum(x) + sum(y), x, y))

    for g in gens:
        if lam[g] > 0:
            push_pairs(g)
    while queue:
        _, x, y = heapq.heappop(queue)
        r = reduce(_add(x, y))
        if not any(r) or r in known:
            continue
        lam[r] = _dot(form, r)
        elements.append(r)
        known.add(r)
        if len(elements) > cap:
            raise BudgetExceeded(f"more than {cap} intermediate vectors")
        push_pairs(r)

    positive = [e for e in elements if lam[e] >= 0]

    def member_after(x: Vector) -> bool:
        return member(x) and _dot(form, x) >= 0

    return [e for e in positive
            if not any(f != e and member_after(_sub(e, f)) for f in positive)]


def hilbert_basis_completion(system: ConeSystem, cap: int = DEFAULT_CAP,
                             long_run: bool = False,
                             trace: list | None = None) -> list[Vector]:
    """Minimal generating set of the lattice points of the cone, sorted.

    ``trace``, if given, receives ``(forms_applied, generators)`` after the
    start and after every halfspace.
    """
    n = system.teams
    if n > 5 or (n == 5 and not long_run):
        raise BudgetExceeded(f"completion for n={n} needs long_run (n=5) or is out of reach")
    size = system.dimension
    gens = [tuple(int(k == t) for k in range(size)) for t in range(size)]
    applied: list[Vector] = []
    if trace is not None:
        trace.append((0, list(gens)))
    for form in system.forms:
        frozen = tuple(applied)

        def member(x, frozen=frozen):
            return all(c >= 0 for c in x) and all(_dot(f, x) >= 0 for f in frozen)

        gens = _cut(gens, member, form, cap)
        applied.append(form)
        if trace is not None:
            trace.append((len(applied), list(gens)))
    return sorted(gens)


def represent(x: Vector, gens: Sequence[Vector]) -> list[Vector] | None:
    """Write ``x`` as a sum of ``gens`` (all nonnegative) by memoized search."""
    gens = sorted({g for g in gens if any(g)}, key=lambda g: (-sum(g), g))
    dead: set[Vector] = set()

    def search(v):
        if not any(v):
            return []
        if v in dead:
            return None
        for g in gens:
            rest = _sub(v, g)
            if min(rest) >= 0:
                tail = search(rest)
                if tail is not None:
                    return [g] + tail
        dead.add(v)
        return None

    return search(tuple(x))


def has_reductions(elements: Sequence[Vector], system: ConeSystem) -> list[tuple[Vector, Vector]]:
    """Pairs ``(x, y)`` with ``y`` reducing ``x``: ``x - y`` stays in the cone."""
    return [(x, y) for x in elements for y in elements
            if x != y and any(y) and system.contains(_sub(x, y))]
