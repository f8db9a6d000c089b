from __future__ import annotations

from pathlib import Path

import pytest

from colorhom.fixtures import load_fixture

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def heis3():
    return load_fixture("heis3")


@pytest.fixture(scope="session")
def heis3_U(heis3):
    return heis3.enveloping()


@pytest.fixture(scope="session")
def odd1():
    return load_fixture("abelian_odd_1")


@pytest.fixture(scope="session")
def odd2():
    return load_fixture("abelian_odd_2")


@pytest.fixture(scope="session")
def glcolor():
    return load_fixture("glcolor")


@pytest.fixture(scope="session")
def heis_z3():
    return load_fixture("heis_z3")


# one line per acceptance criterion, filled in by tests/test_acceptance.py
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
