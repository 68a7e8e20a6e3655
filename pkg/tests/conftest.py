import pytest

_ACCEPTANCE_KEY = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_ACCEPTANCE_KEY] = []


@pytest.fixture
def criterion(request):
    """Record one acceptance line: ``criterion(number, title, passed, detail)``."""
    lines = request.config.stash[_ACCEPTANCE_KEY]

    def record(number: int, title: str, passed: bool, detail: str = "") -> bool:
        lines.append((number, title, passed, detail))
        print(_format(number, title, passed, detail))
        return passed

    return record


def _format(number, title, passed, detail):
    tail = f" ({detail})" if detail else ""
    return f"criterion {number:>2} {'PASS' if passed else 'FAIL'}: {title}{tail}"


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_ACCEPTANCE_KEY, [])
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for entry in sorted(lines, key=lambda e: e[0]):
        terminalreporter.write_line(_format(*entry))
