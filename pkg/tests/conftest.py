import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(name, limit): acceptance criterion with a time limit in seconds")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("acceptance")
    if marker is None or call.when not in ("setup", "call"):
        return
    name = marker.args[0]
    failed = call.excinfo is not None
    limit = marker.args[1] if len(marker.args) > 1 else None
    prev = CRITERIA.get(name, ("PASS", 0.0, limit))
    status = "FAIL" if failed or prev[0] == "FAIL" else "PASS"
    CRITERIA[name] = (status, prev[1] + call.duration, limit)


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(CRITERIA):
        status, seconds, limit = CRITERIA[name]
        bound = f", limit {limit}s" if limit else ""
        terminalreporter.write_line(f"{name}: {status} ({seconds:.2f}s{bound})")
