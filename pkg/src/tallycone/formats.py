"""JSON and CSV encodings for sheets and computed tables.

Big integers go out as decimal strings, while team counts and sheet entries
stay numeric.  Keys are sorted so output is
byte-stable across runs.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence

from .basis import Decomposition, VerificationReport
from .errors import BadDimension
from .sheets import ScoreSheet, make_sheet


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def format_fraction(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def sheet_to_json(s: ScoreSheet) -> dict:
    return {"teams": s.teams, "goals": s.grid()}


def sheet_from_json(obj: dict) -> ScoreSheet:
    goals = obj["goals"]
    n = int(obj.get("teams", len(goals)))
    return make_sheet(n, [[int(v) for v in row] for row in goals])


def sheet_from_csv(text: str) -> ScoreSheet:
    rows = [[int(v) for v in row] for row in csv.reader(io.StringIO(text)) if row]
    return make_sheet(len(rows), rows)


def sheet_to_csv(s: ScoreSheet) -> str:
    return "".join(",".join(str(v) for v in row) + "\n" for row in s.grid())


def read_sheet(path: str | Path) -> ScoreSheet:
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        return sheet_from_json(json.loads(text))
    return sheet_from_csv(text)


def read_sheet_list(path: str | Path) -> list[ScoreSheet]:
    """A JSON array of sheet objects, or CSV with one flattened grid per line."""
    text = Path(path).read_text()
    if text.lstrip().startswith("["):
        return [sheet_from_json(obj) for obj in json.loads(text)]
    out = []
    for row in csv.reader(io.StringIO(text)):
        if not row or not row[0].strip().lstrip("-").isdigit():
            continue
        values = [int(v) for v in row]
        n = int(round(len(values) ** 0.5))
        if n * n != len(values):
            raise BadDimension(f"row of {len(values)} values is not a square grid")
        out.append(make_sheet(n, [values[i * n:(i + 1) * n] for i in range(n)]))
    return out


def sheets_to_json(sheets: Iterable[ScoreSheet]) -> list[dict]:
    return [sheet_to_json(s) for s in sheets]


def sheets_to_csv(sheets: Sequence[ScoreSheet]) -> str:
    if not sheets:
        return ""
    n = sheets[0].teams
    header = ",".join(f"g{i + 1}_{j + 1}" for i in range(n) for j in range(n))
    lines = [header]
    for s in sheets:
        lines.append(",".join(str(v) for row in s.grid() for v in row))
    return "\n".join(lines) + "\n"


def decomposition_to_json(d: Decomposition) -> dict:
    return {"target": sheet_to_json(d.target),
            "parts": [sheet_to_json(p.sheet) for p in d.parts]}


def report_to_json(r: VerificationReport) -> dict:
    return {
        "teams": r.teams,
        "generation": {
            "status": "pass" if r.generation_ok else "fail",
            "checked": r.checked_sheets,
            "failures": sheets_to_json(r.generation_failures),
        },
        "irreducibility": {
            "status": "pass" if r.irreducibility_ok else "fail",
            "checked": r.checked_pairs,
            "failures": [{"x": sheet_to_json(x), "y": sheet_to_json(y)}
                         for x, y in r.irreducibility_failures],
        },
    }


def count_table_to_csv(rows: Sequence[tuple[int, int]]) -> str:
    return "G,count\n" + "".join(f"{g},{c}\n" for g, c in rows)


def count_table_to_json(n: int, rows: Sequence[tuple[int, int]]) -> dict:
    return {"teams": n, "counts": [{"G": g, "count": str(c)} for g, c in rows]}
