"""Shared pytest hooks: print one PASS/FAIL line per acceptance criterion."""

_outcomes = {}
_labels = {}


def pytest_collection_modifyitems(items):
    for item in items:
        if "test_acceptance.py" in item.nodeid:
            doc = (item.function.__doc__ or "").strip().splitlines()
            _labels[item.nodeid] = doc[0] if doc else item.name


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _outcomes[report.nodeid] = report.outcome


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _outcomes:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for nodeid in sorted(_outcomes):
        label = "PASS" if _outcomes[nodeid] == "passed" else "FAIL"
        terminalreporter.write_line(f"{label}  {_labels.get(nodeid, nodeid)}")
