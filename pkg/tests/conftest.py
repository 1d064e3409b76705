import pytest

from replistream.domain import DomainSpec

_criteria = {}


@pytest.fixture
def abc():
    return DomainSpec.from_pairs([("a", 1), ("b", 2), ("c", 3)])


@pytest.fixture
def d012():
    return DomainSpec.from_pairs([("a0", 0), ("a1", 1), ("a2", 2)])


@pytest.fixture
def d01():
    return DomainSpec.from_pairs([("a", 0), ("b", 1)])


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    if "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if name.startswith("test_criterion_"):
        _criteria[name] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    grouped = {}
    for name, outcome in _criteria.items():
        number = int(name.split("_")[2])
        grouped.setdefault(number, []).append(outcome)
    terminalreporter.section("acceptance criteria")
    for number in sorted(grouped):
        outcomes = grouped[number]
        mark = "PASS" if all(o == "passed" for o in outcomes) else "FAIL"
        terminalreporter.write_line(f"criterion {number}: {mark} ({len(outcomes)} case(s))")
