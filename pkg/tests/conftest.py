import json
from dataclasses import dataclass, field
from pathlib import Path

import pytest

DATA = Path(__file__).parent / "data"


@dataclass
class _Criterion:
    title: str
    nodes: set = field(default_factory=set)
    passed: int = 0
    failed: int = 0


_criteria: dict[int, _Criterion] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by a test")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark:
            num, title = mark.args
            _criteria.setdefault(num, _Criterion(title)).nodes.add(item.nodeid)


def pytest_runtest_logreport(report):
    for crit in _criteria.values():
        if report.nodeid not in crit.nodes:
            continue
        if report.failed:
            crit.failed += 1
        elif report.when == "call" and report.passed:
            crit.passed += 1


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria):
        crit = _criteria[num]
        ok = crit.failed == 0 and crit.passed == len(crit.nodes)
        terminalreporter.write_line(
            f"criterion {num}: {'PASS' if ok else 'FAIL'}  {crit.title}  ({crit.passed}/{len(crit.nodes)} checks)")


@pytest.fixture(scope="session")
def golden():
    def load(name):
        return json.loads((DATA / name).read_text())
    return load
