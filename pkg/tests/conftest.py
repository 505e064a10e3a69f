import pytest

from neutromap.models import fixture_dir


@pytest.fixture
def fixture_path():
    return lambda name: fixture_dir() / f"{name}.json"


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in module.summary_lines():
        terminalreporter.write_line(line)
