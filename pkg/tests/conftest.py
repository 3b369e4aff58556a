import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from mapenum import build_edge_table, build_edge_vertex_table, build_unrooted_table, reinterpret_as_vertices

_ACCEPTANCE = {}


@pytest.fixture(scope="session")
def edge_table_30():
    return build_edge_table(15, 30)


@pytest.fixture(scope="session")
def face_table_30():
    return build_edge_vertex_table(15, 30)


@pytest.fixture(scope="session")
def unrooted_30(face_table_30):
    return build_unrooted_table(reinterpret_as_vertices(face_table_30))


@pytest.fixture(scope="session")
def reference_tables():
    rooted = reinterpret_as_vertices(build_edge_vertex_table(19, 44))
    return rooted, build_unrooted_table(rooted)


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if report.when == "call" or report.failed or report.skipped:
        prev = _ACCEPTANCE.get(name)
        if prev in (None, "PASS") or report.failed:
            _ACCEPTANCE[name] = "PASS" if report.passed else "SKIP" if report.skipped else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    from test_acceptance import CRITERIA, DETAILS

    terminalreporter.section("acceptance criteria")
    for name, label in CRITERIA.items():
        extra = f" [{DETAILS[name]}]" if name in DETAILS else ""
        terminalreporter.write_line(f"{_ACCEPTANCE.get(name, 'NOT RUN')}: {label}{extra}")
