import json
from importlib import resources
from pathlib import Path

import pytest

from arcmodels import GF, QQ, PolyRing, parse_poly
from arcmodels.problem import Problem

ROOT = Path(__file__).resolve().parents[1]


def fixture_path(name: str) -> Path:
    return Path(str(resources.files("arcmodels").joinpath("data", "fixtures", name)))


def load_problem(name: str) -> Problem:
    return Problem.from_path(fixture_path(name))


def load_doc(name: str) -> dict:
    return json.loads(fixture_path(name).read_text())


def polys(texts, variables, field=QQ):
    ring = PolyRing(variables, field)
    return [parse_poly(t, ring) for t in texts]


@pytest.fixture(scope="session")
def cusp_problem():
    return load_problem("cusp.json")


@pytest.fixture(scope="session")
def node_problem():
    return load_problem("node.json")


@pytest.fixture
def F5():
    return GF(5)


# one line per acceptance criterion, echoed after the run
CRITERIA = []


def pytest_terminal_summary(terminalreporter):
    if CRITERIA:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in CRITERIA:
            terminalreporter.write_line(line)
