import re

_ACCEPTANCE = {}


def pytest_runtest_logreport(report):
    match = re.search(r"test_acceptance\.py::test_ac(\d+)_", report.nodeid)
    if not match:
        return
    key = int(match.group(1))
    if report.when == "call" or report.outcome != "passed":
        _ACCEPTANCE[key] = (report.outcome, report.nodeid.split("::")[-1])


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_ACCEPTANCE):
        outcome, name = _ACCEPTANCE[key]
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"AC{key:<3d}{status}  {name}")
