import random
from pathlib import Path

import pytest

from betapack import Graph, parse_edge_list
from oracles import random_connected_edges

DATA = Path(__file__).parent / "data"


def random_connected_graph(seed: int, n_min: int = 2, n_max: int = 10) -> Graph:
    rng = random.Random(seed)
    n = rng.randint(n_min, n_max)
    p = rng.choice([0.1, 0.25, 0.4, 0.6])
    return Graph.from_edges(n, random_connected_edges(rng, n, p))


@pytest.fixture
def house():
    return parse_edge_list((DATA / "house.txt").read_text())


@pytest.fixture
def data_dir():
    return DATA


# one summary line per acceptance criterion
_acceptance = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))
    elif report.when == "setup" and report.failed and "test_acceptance.py" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], "error"))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        mark = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{mark}  {name}")
