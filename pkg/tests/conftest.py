import re

_criteria: dict[int, str] = {}


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_criterion_(\d+)", report.nodeid)
    if not m:
        return
    k = int(m.group(1))
    if report.when == "call":
        _criteria[k] = "PASS" if report.passed else "FAIL"
    elif report.failed:
        _criteria[k] = "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(_criteria):
        terminalreporter.write_line(f"ACCEPTANCE criterion {k}: {_criteria[k]}")
