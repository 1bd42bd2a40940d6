import pytest

from bibliostat.ingest import load_bundled_fixture
from bibliostat.report import Dataset

_ACCEPTANCE = []


def within(value, target, tol):
    """|value - target| <= tol, treating exact half-unit rounding ties as inside."""
    return value is not None and abs(value - target) <= tol * (1 + 1e-9)


@pytest.fixture(scope="session")
def fixture():
    return load_bundled_fixture()


@pytest.fixture(scope="session")
def dataset(fixture):
    return Dataset.from_fixture(fixture)


@pytest.fixture
def criterion():
    """Record a named acceptance check; the terminal summary prints one line each."""
    def record(label, ok, detail=""):
        _ACCEPTANCE.append((label, bool(ok), detail))
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, detail in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}  {detail}".rstrip())
