import pytest

from floorzeta.exact_arith import ExponentA

EXPONENTS = ["1", "1/2", "1/3", "2/3", "3/4", "1/5"]


@pytest.fixture(params=EXPONENTS)
def exponent(request):
    return ExponentA.of(request.param)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
