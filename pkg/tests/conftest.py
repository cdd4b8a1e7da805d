import pytest

_LINES = pytest.StashKey[list]()


@pytest.fixture
def report(request):
    """Record one PASS/FAIL summary line for an acceptance criterion."""
    lines = request.config.stash.setdefault(_LINES, [])

    def record(number, title, error, tolerance):
        ok = error <= tolerance
        line = f"criterion {number:>2}  {'PASS' if ok else 'FAIL'}  {title}: max error {error:.3e} (tol {tolerance:.0e})"
        print(line)
        lines.append(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_LINES, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
