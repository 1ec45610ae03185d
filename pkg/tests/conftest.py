from __future__ import annotations

import pytest

from cfknu import corpus as corpus_mod
from cfknu.builders import box, torus, unknot

_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def record():
    """Collects one pass/fail line per acceptance criterion for the terminal summary."""

    def _record(label: str, ok: bool, detail: str = "") -> None:
        status = "PASS" if ok else "FAIL"
        _ACCEPTANCE_LINES.append(f"[{status}] {label}" + (f" -- {detail}" if detail else ""))

    return _record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def t29():
    return torus(2, 9)


@pytest.fixture(scope="session")
def trefoil():
    return torus(2, 3)


@pytest.fixture(scope="session")
def the_unknot():
    return unknot()


@pytest.fixture(scope="session")
def unit_box():
    return box(0, 0)


@pytest.fixture(scope="session")
def corpus():
    return corpus_mod.corpus()


@pytest.fixture(scope="session")
def small_corpus():
    """Members with at most 9 generators; enough for the per-operation property tests."""
    return [c for c in corpus_mod.corpus() if len(c) <= 9]
