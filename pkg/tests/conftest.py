import pytest

from walksym.enumeration import corpus
from walksym.graph import complete, complete_bipartite, cycle, hypercube, path, petersen, star

_ACCEPTANCE_LINES = []


def record_criterion(number, title, passed, detail=""):
    line = f"[{'PASS' if passed else 'FAIL'}] criterion {number:>2}: {title}"
    if detail:
        line += f" -- {detail}"
    _ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def corpus7():
    return list(corpus(7))


@pytest.fixture(scope="session")
def corpus6():
    return list(corpus(6))


@pytest.fixture
def named():
    return {
        "K2": complete(2),
        "K3": complete(3),
        "K4": complete(4),
        "P3": path(3),
        "P4": path(4),
        "P5": path(5),
        "C4": cycle(4),
        "C5": cycle(5),
        "C7": cycle(7),
        "star3": star(3),
        "K33": complete_bipartite(3, 3),
        "Q3": hypercube(3),
        "petersen": petersen(),
    }
