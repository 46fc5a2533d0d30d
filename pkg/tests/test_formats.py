import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from reference_values import GROUP_H_ORDERED
from tallycone import formats
from tallycone.basis import decompose, hilbert_basis, verify_hilbert_basis
from tallycone.errors import BadDimension, NonzeroDiagonal
from tallycone.sheets import make_sheet, random_sheet


def test_dumps_is_canonical():
    assert formats.dumps({"b": 1, "a": [2]}) == '{\n  "a": [\n    2\n  ],\n  "b": 1\n}\n'


@pytest.mark.parametrize("q, text", [
    (Fraction(3), "3"), (Fraction(-1, 2), "-1/2"), (Fraction(6, 4), "3/2"),
])
def test_format_fraction(q, text):
    assert formats.format_fraction(q) == text


@given(st.integers(2, 5), st.integers(0, 30), st.randoms(use_true_random=False))
def test_sheet_json_and_csv_roundtrip(n, total, rng):
    s = random_sheet(n, total, rng)
    assert formats.sheet_from_json(json.loads(json.dumps(formats.sheet_to_json(s)))) == s
    assert formats.sheet_from_csv(formats.sheet_to_csv(s)) == s


def test_read_sheet_sniffs_format(tmp_path):
    s = make_sheet(4, GROUP_H_ORDERED)
    js = tmp_path / "a.json"
    js.write_text(formats.dumps(formats.sheet_to_json(s)))
    cs = tmp_path / "a.csv"
    cs.write_text(formats.sheet_to_csv(s))
    assert formats.read_sheet(js) == formats.read_sheet(cs) == s


def test_csv_rejects_diagonal():
    with pytest.raises(NonzeroDiagonal):
        formats.sheet_from_csv("1,0\n0,0\n")


def test_sheet_list_roundtrip(tmp_path):
    sheets = [h.sheet for h in hilbert_basis(3)]
    path = tmp_path / "hb.csv"
    path.write_text(formats.sheets_to_csv(sheets))
    assert path.read_text().splitlines()[0].startswith("g1_1,g1_2,g1_3,g2_1")
    assert formats.read_sheet_list(path) == sheets
    path = tmp_path / "hb.json"
    path.write_text(formats.dumps(formats.sheets_to_json(sheets)))
    assert formats.read_sheet_list(path) == sheets


def test_sheet_list_bad_row(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("0,1,2\n")
    with pytest.raises(BadDimension):
        formats.read_sheet_list(path)


def test_decomposition_json():
    d = decompose(make_sheet(4, GROUP_H_ORDERED))
    data = formats.decomposition_to_json(d)
    assert data["target"]["goals"] == GROUP_H_ORDERED
    assert len(data["parts"]) == len(d.parts)


def test_report_json():
    report = verify_hilbert_basis(3, [h.sheet for h in hilbert_basis(3)], samples=20)
    data = formats.report_to_json(report)
    assert data["generation"]["status"] == data["irreducibility"]["status"] == "pass"
    assert data["irreducibility"]["checked"] == 14 * 13


def test_count_table_encodings():
    rows = [(0, 1), (1, 2)]
    assert formats.count_table_to_csv(rows) == "G,count\n0,1\n1,2\n"
    assert formats.count_table_to_json(3, rows)["counts"][1] == {"G": 1, "count": "2"}
