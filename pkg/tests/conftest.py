import re

import pytest
import sympy

ACCEPTANCE = {}


def to_sympy(poly, symbols=None):
    """Independent oracle bridge: re-parse the printed polynomial in sympy."""
    symbols = symbols or {v: sympy.Symbol(v) for v in poly.ring.variables}
    return sympy.sympify(str(poly).replace("^", "**"), locals=symbols)


@pytest.fixture
def sym():
    return to_sympy


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)", report.nodeid)
    if not m:
        return
    key = (int(m.group(1)), m.group(2))
    if report.when == "call" or report.outcome != "passed":
        # parametrized criteria: any failing case fails the criterion
        if ACCEPTANCE.get(key, "passed") == "passed":
            ACCEPTANCE[key] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for (n, name), outcome in sorted(ACCEPTANCE.items()):
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{status} criterion {n}: {name.replace('_', ' ')}")
