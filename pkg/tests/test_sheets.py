import itertools

import pytest
from hypothesis import given, strategies as st

from tallycone.errors import (
    BadDimension,
    BadPermutation,
    DimensionMismatch,
    NegativeEntry,
    NonzeroDiagonal,
)
from tallycone.sheets import (
    ScoreSheet,
    add_sheets,
    canonicalize,
    cell_index,
    goal_vector,
    inverse_permutation,
    is_ordered,
    make_sheet,
    relabel,
    top_goals,
    total_goals,
)


@st.composite
def sheets(draw, n=None, ordered=False, max_entry=5):
    if n is None:
        n = draw(st.integers(2, 5))
    cells = draw(st.lists(st.integers(0, max_entry), min_size=n * (n - 1), max_size=n * (n - 1)))
    s = ScoreSheet(n, tuple(cells))
    return canonicalize(s) if ordered else s


@st.composite
def sheet_triples(draw):
    n = draw(st.integers(2, 5))
    return draw(sheets(n)), draw(sheets(n)), draw(sheets(n))


def test_make_sheet_group_h(group_h):
    assert group_h.teams == 4
    assert len(group_h.cells) == 12
    assert group_h.entry(0, 1) == 2 and group_h.entry(2, 0) == 1


def test_zero_sheet_is_valid():
    z = make_sheet(3, [[0] * 3 for _ in range(3)])
    assert z == ScoreSheet.zero(3)
    assert z.is_zero()


@pytest.mark.parametrize("grid, exc", [
    ([[1, 0, 0], [0, 0, 0], [0, 0, 0]], NonzeroDiagonal),
    ([[0, -1, 0], [0, 0, 0], [0, 0, 0]], NegativeEntry),
    ([[0, 1], [0, 0], [0, 0]], BadDimension),
])
def test_make_sheet_errors(grid, exc):
    with pytest.raises(exc):
        make_sheet(3, grid)


def test_one_team_rejected():
    with pytest.raises(BadDimension):
        make_sheet(1, [[0]])


def test_storage_layout():
    n = 4
    slots = [cell_index(n, i, j) for i in range(n) for j in range(n) if i != j]
    assert slots == list(range(12))
    with pytest.raises(IndexError):
        cell_index(n, 2, 2)


def test_add_identity(group_h):
    assert add_sheets(group_h, ScoreSheet.zero(4)) == group_h


def test_add_dimension_mismatch(group_h):
    with pytest.raises(DimensionMismatch):
        add_sheets(group_h, ScoreSheet.zero(3))


def test_add_ordered_goal_vectors():
    a = make_sheet(3, [[0, 1, 1], [1, 0, 0], [0, 0, 0]])
    b = make_sheet(3, [[0, 0, 1], [0, 0, 1], [0, 1, 0]])
    assert goal_vector(a) == (2, 1, 0) and goal_vector(b) == (1, 1, 1)
    c = a + b
    assert c.grid() == [[0, 1, 2], [1, 0, 1], [0, 1, 0]]
    assert goal_vector(c) == (3, 2, 1)
    assert is_ordered(c)


def test_goal_vector_and_gradings(group_h):
    assert goal_vector(group_h) == (4, 3, 1, 0)
    assert total_goals(group_h) == 8
    assert top_goals(group_h) == 4
    z = ScoreSheet.zero(5)
    assert goal_vector(z) == (0,) * 5
    assert total_goals(z) == 0 and top_goals(z) == 0


def test_is_ordered(group_h, group_h_alpha):
    assert is_ordered(group_h)
    assert goal_vector(group_h_alpha) == (3, 0, 4, 1)
    assert not is_ordered(group_h_alpha)
    assert is_ordered(ScoreSheet.zero(4))


def test_relabel_group_h(group_h, group_h_alpha):
    # alphabetical order Chile, Honduras, Spain, Switzerland -> Spain, Chile, Switzerland, Honduras
    assert relabel(group_h_alpha, (2, 0, 3, 1)) == group_h
    assert canonicalize(group_h_alpha) == group_h


def test_relabel_identity_and_bad(group_h):
    assert relabel(group_h, range(4)) == group_h
    with pytest.raises(BadPermutation):
        relabel(group_h, (0, 0, 1, 2))
    with pytest.raises(BadPermutation):
        relabel(group_h, (0, 1, 2))


def test_canonical_tie_break_is_stable():
    s = make_sheet(3, [[0, 0, 0], [1, 0, 0], [0, 1, 0]])
    # teams 1 and 2 tie on one goal each; team 1 stays ahead of team 2
    assert canonicalize(s) == relabel(s, (1, 2, 0))


@given(sheets(), st.data())
def test_relabel_roundtrip(s, data):
    perm = data.draw(st.permutations(range(s.teams)))
    t = relabel(s, perm)
    assert relabel(t, inverse_permutation(perm)) == s
    assert total_goals(t) == total_goals(s)
    assert sorted(goal_vector(t)) == sorted(goal_vector(s))


@given(sheet_triples())
def test_monoid_laws(triple):
    a, b, c = triple
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert a + ScoreSheet.zero(a.teams) == a
    assert goal_vector(a + b) == tuple(x + y for x, y in zip(goal_vector(a), goal_vector(b)))


@given(st.integers(2, 5).flatmap(lambda n: st.tuples(sheets(n, ordered=True), sheets(n, ordered=True))))
def test_ordered_submonoid_closed(pair):
    a, b = pair
    assert is_ordered(a) and is_ordered(b)
    assert is_ordered(a + b)


@given(sheets())
def test_canonicalize_idempotent(s):
    c = canonicalize(s)
    assert is_ordered(c)
    assert canonicalize(c) == c


def test_every_sheet_has_an_ordering_relabel():
    s = make_sheet(3, [[0, 0, 1], [2, 0, 1], [0, 3, 0]])
    orders = [p for p in itertools.permutations(range(3)) if is_ordered(relabel(s, p))]
    assert orders
    assert canonicalize(s) == relabel(s, orders[0])


def test_big_entries_are_exact():
    big = 10 ** 40
    s = make_sheet(2, [[0, big], [big - 1, 0]])
    assert total_goals(s + s) == 4 * big - 2
    assert is_ordered(s)
