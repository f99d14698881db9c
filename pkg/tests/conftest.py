import pytest

from hochschild.algebra import regular_bimodule
from hochschild.fixtures import STANDARD


@pytest.fixture(params=sorted(STANDARD))
def standard(request):
    m = STANDARD[request.param]()
    return request.param, m, regular_bimodule(m)


# criterion id -> (passed, detail, seconds); filled by test_acceptance
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda k: (int(k.split()[0]), k)):
        ok, detail, secs = ACCEPTANCE[key]
        terminalreporter.write_line(
            f"criterion {key:<3} {'PASS' if ok else 'FAIL'}  {secs:6.2f}s  {detail}")
