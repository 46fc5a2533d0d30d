import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from reference_values import GROUP_H_PARTS, HB3
from tallycone.basis import (
    decompose,
    degree_sum,
    hb_cardinality,
    hilbert_basis,
    scoring_count,
    verify_hilbert_basis,
)
from tallycone.errors import ContainsZero, NotOrdered
from tallycone.sheets import (
    ScoreSheet,
    goal_vector,
    is_member,
    is_ordered,
    iter_sheets,
    make_sheet,
    pattern_vector,
    random_ordered_sheet,
    top_goals,
    total_goals,
)


def brute_force_irreducibles(n, max_total):
    """Members of the ordered monoid with total <= max_total that are not a
    sum of two nonzero members, found by trying every sub-vector."""
    out = set()
    for t in range(1, max_total + 1):
        for s in iter_sheets(n, t, ordered=True):
            x = s.cells
            reducible = False
            for y in itertools.product(*(range(c + 1) for c in x)):
                if any(y) and y != x and is_member(n, y) and \
                        is_member(n, tuple(a - b for a, b in zip(x, y))):
                    reducible = True
                    break
            if not reducible:
                out.add(x)
    return out


def test_n2_matches_brute_force():
    hb = hilbert_basis(2)
    assert [h.cells for h in hb] == [(1, 0), (1, 1)]
    assert brute_force_irreducibles(2, 2) == {(1, 0), (1, 1)}


def test_n3_matches_printed_list():
    printed = {make_sheet(3, g).cells for g in HB3}
    assert len(printed) == 14
    assert {h.cells for h in hilbert_basis(3)} == printed


@pytest.mark.parametrize("n, max_total", [(3, 4), (4, 4)])
def test_matches_brute_force_irreducibles(n, max_total):
    # every Hilbert basis element has at most n goals, so this scan is complete
    assert brute_force_irreducibles(n, max_total) == {h.cells for h in hilbert_basis(n)}


@pytest.mark.parametrize("n, size", [(3, 14), (4, 120), (8, 6725600)])
def test_cardinality_values(n, size):
    assert hb_cardinality(n) == size


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_cardinality_matches_list(n):
    hb = hilbert_basis(n)
    assert len(hb) == hb_cardinality(n)
    assert [h.cells for h in hb] == sorted(h.cells for h in hb)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_row_structure(n):
    for h in hilbert_basis(n):
        i = h.scoring
        for k in range(n):
            row = h.sheet.row(k)
            if k < i:
                assert sorted(row) == [0] * (n - 2) + [1]
            else:
                assert not any(row)
        assert total_goals(h.sheet) == i
        assert top_goals(h.sheet) == 1
        assert goal_vector(h.sheet) == pattern_vector(n, i)
        assert scoring_count(h.sheet) == i


def test_decompose_group_h(group_h):
    d = decompose(group_h)
    assert len(d.parts) == 4
    assert d.is_valid()
    assert degree_sum(d) == total_goals(group_h)
    printed = sum((make_sheet(4, g) for g in GROUP_H_PARTS), ScoreSheet.zero(4))
    assert printed == group_h
    hb = {h.cells for h in hilbert_basis(4)}
    assert all(make_sheet(4, g).cells in hb for g in GROUP_H_PARTS)
    assert all(p.cells in hb for p in d.parts)


def test_decompose_zero_and_irreducible():
    assert decompose(ScoreSheet.zero(3)).parts == []
    for h in hilbert_basis(3):
        assert decompose(h.sheet).parts == [h]


def test_decompose_requires_order(group_h_alpha):
    with pytest.raises(NotOrdered):
        decompose(group_h_alpha)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_decompose_roundtrip_exhaustive(n):
    hb = {h.cells for h in hilbert_basis(n)}
    for t in range(7):
        for s in iter_sheets(n, t, ordered=True):
            d = decompose(s)
            assert d.is_valid()
            assert degree_sum(d) == t
            assert len(d.parts) == top_goals(s)
            assert all(p.cells in hb for p in d.parts)


def test_decompose_roundtrip_random():
    rng = random.Random(7)
    for _ in range(1000):
        n = rng.randint(2, 7)
        s = random_ordered_sheet(n, rng.randint(0, 60), rng)
        d = decompose(s)
        assert d.is_valid()
        assert degree_sum(d) == total_goals(s)


@settings(max_examples=50)
@given(st.integers(2, 5), st.integers(0, 30), st.randoms(use_true_random=False))
def test_greedy_keeps_remainders_ordered(n, t, rng):
    s = random_ordered_sheet(n, t, rng)
    rest = s
    for part in decompose(s).parts:
        rest = ScoreSheet(n, tuple(a - b for a, b in zip(rest.cells, part.cells)))
        assert is_ordered(rest)
    assert rest.is_zero()


def test_verify_n3_passes():
    report = verify_hilbert_basis(3, [h.sheet for h in hilbert_basis(3)])
    assert report.passed
    assert report.checked_pairs == 14 * 13


def test_verify_detects_redundant_element():
    hb = [h.sheet for h in hilbert_basis(3)]
    x, y = hb[0], hb[5]
    report = verify_hilbert_basis(3, hb + [x + y], samples=50)
    assert report.generation_ok
    assert (x + y, x) in report.irreducibility_failures
    assert not report.passed


def test_verify_detects_missing_element():
    hb = [h.sheet for h in hilbert_basis(3)]
    removed = hb.pop(7)
    report = verify_hilbert_basis(3, hb, samples=50)
    assert report.irreducibility_ok
    assert removed in report.generation_failures


def test_verify_rejects_zero():
    with pytest.raises(ContainsZero):
        verify_hilbert_basis(3, [ScoreSheet.zero(3)])


def test_pairwise_irreducibility_n4():
    hb = [h.cells for h in hilbert_basis(4)]
    for x in hb:
        for y in hb:
            if x != y:
                assert not is_member(4, tuple(a - b for a, b in zip(x, y)))
