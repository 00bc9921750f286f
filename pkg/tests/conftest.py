import itertools

import pytest

from quadrica.arrangement import WeightVector

ACCEPTANCE_LOG: list[str] = []


def acceptance_grid(n_min=2, n_max=7, s_max=5):
    for n in range(n_min, n_max + 1):
        for s in range(1, s_max + 1):
            for ws in itertools.combinations_with_replacement(range(n - 1, -1, -1), s):
                yield WeightVector(n, ws)


@pytest.fixture
def report():
    def _report(criterion: int, ok: bool, detail: str):
        ACCEPTANCE_LOG.append(f"criterion {criterion}: {'PASS' if ok else 'FAIL'} - {detail}")
        print(ACCEPTANCE_LOG[-1])

    return _report


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LOG:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LOG:
            terminalreporter.write_line(line)
