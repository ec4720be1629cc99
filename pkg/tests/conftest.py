import pytest
from hypothesis import settings

settings.register_profile("default", deadline=None, max_examples=60, derandomize=True)
settings.load_profile("default")

_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(wrapper=True)
def pytest_runtest_makereport(item, call):
    report = yield
    mark = item.get_closest_marker("criterion")
    if mark is not None:
        report.criterion = mark.args
    return report


def pytest_runtest_logreport(report):
    key = getattr(report, "criterion", None)
    if key is None:
        return
    # the call phase decides, unless setup or teardown went wrong
    if report.when == "call" or report.outcome != "passed":
        if _CRITERIA.get(key) != "failed":
            _CRITERIA[key] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for (number, title), outcome in sorted(_CRITERIA.items()):
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {number:2d} {status}  {title}")
