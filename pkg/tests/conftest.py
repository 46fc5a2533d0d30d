import os
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from reference_values import GROUP_H_ALPHABETICAL, GROUP_H_ORDERED  # noqa: E402
from tallycone.sheets import make_sheet  # noqa: E402

EXTENDED = os.environ.get("TALLYCONE_EXTENDED") == "1"

extended = pytest.mark.skipif(not EXTENDED, reason="set TALLYCONE_EXTENDED=1 for extended runs")


@pytest.fixture
def group_h():
    return make_sheet(4, GROUP_H_ORDERED)


@pytest.fixture
def group_h_alpha():
    return make_sheet(4, GROUP_H_ALPHABETICAL)

# acceptance verdict lines, echoed in the terminal summary
VERDICTS: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if VERDICTS:
        terminalreporter.section("acceptance criteria")
        for line in VERDICTS:
            terminalreporter.write_line(line)
