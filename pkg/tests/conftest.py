import pytest

from gcoalg import fixtures
from gcoalg.linalg import Field


@pytest.fixture
def F3():
    return Field(3)


@pytest.fixture
def Q():
    return Field()


@pytest.fixture(params=sorted(fixtures.GROUP_COALGEBRAS))
def named_gc(request):
    return request.param, fixtures.GROUP_COALGEBRAS[request.param]()


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(f"{'PASS' if mod.RESULTS[n] else 'FAIL'} criterion {n}")
