import json
from pathlib import Path

import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture(scope="session")
def small_values():
    return json.loads((GOLDEN / "small_values.json").read_text())


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, title): acceptance criterion checked by this test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is not None and report.when == "call":
        report.user_properties.append(("criterion", marker.args))


def pytest_terminal_summary(terminalreporter):
    lines = []
    for status in ("passed", "failed"):
        for report in terminalreporter.stats.get(status, []):
            for key, value in getattr(report, "user_properties", []):
                if key == "criterion":
                    num, title = value
                    lines.append((num, f"criterion {num}: {'PASS' if status == 'passed' else 'FAIL'}  {title}"
                                       f"  ({report.duration:.1f}s)"))
    if lines:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(lines):
            terminalreporter.write_line(line)
