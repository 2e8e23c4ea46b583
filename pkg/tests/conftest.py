from functools import lru_cache

import pytest

from mannheim.residue_field import build_field

SMALL_PRIMES = (7, 13, 19, 31, 37, 43)


@lru_cache(maxsize=None)
def field_for(p):
    return build_field(p)


@pytest.fixture(params=SMALL_PRIMES, ids=lambda p: f"p{p}")
def small_field(request):
    return field_for(request.param)


@pytest.fixture
def f7():
    return field_for(7)


@pytest.fixture
def f13():
    return field_for(13)


@pytest.fixture
def f19():
    return field_for(19)


@pytest.fixture
def f193():
    return field_for(193)


_criteria = {}


def pytest_runtest_logreport(report):
    marker = getattr(report, "acceptance", None)
    if marker and (report.when == "call" or report.outcome != "passed"):
        _criteria[marker] = report.outcome


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    mark = item.get_closest_marker("acceptance")
    if mark:
        outcome.get_result().acceptance = mark.args


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for (num, title), outcome in sorted(_criteria.items()):
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {num:>2}: {status}  {title}")
