import pytest

from oracles import ROSTER


@pytest.fixture(params=ROSTER, ids=str)
def family(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    from oracles import ACCEPTANCE_RESULTS

    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {name}  {detail}")
