import json
from pathlib import Path

import pytest

DATA = Path(__file__).parent / "data"

# criterion id -> (passed, detail); filled by test_acceptance
ACCEPTANCE: dict = {}


def golden(family: str) -> dict:
    return json.loads((DATA / f"golden_type{family}.json").read_text(encoding="utf-8"))


@pytest.fixture(scope="session")
def golden_a():
    return golden("A")


@pytest.fixture(scope="session")
def golden_b():
    return golden("B")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda k: (int(k.split(".")[0].lstrip("C")), k)):
        ok, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {key}: {detail}")
