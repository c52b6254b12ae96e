from fractions import Fraction

import pytest


def fr(text):
    return tuple(Fraction(v) for v in text.split(","))


@pytest.fixture
def triple():
    return fr


ACCEPTANCE = {}


def record(n, ok, detail):
    ACCEPTANCE[n] = (ok, detail)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'} - {detail}")
