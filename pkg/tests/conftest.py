from fractions import Fraction

import pytest
from hypothesis import strategies as st


def rationals(magnitude: int = 8):
    return st.builds(
        Fraction,
        st.integers(-magnitude, magnitude),
        st.integers(1, magnitude),
    )


def nonzero_rationals(magnitude: int = 8):
    return rationals(magnitude).filter(bool)


# -- acceptance summary --------------------------------------------------------

_ACCEPTANCE: dict[str, str] = {}


@pytest.fixture
def criterion(request):
    """Record a one-line pass/fail verdict for an acceptance criterion."""
    label = request.node.get_closest_marker("criterion").args[0]
    _ACCEPTANCE[label] = "FAIL"
    yield
    rep = getattr(request.node, "rep_call", None)
    if rep is not None and rep.passed:
        _ACCEPTANCE[label] = "PASS"


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_ACCEPTANCE, key=lambda s: int(s.split(".")[0])):
        terminalreporter.write_line(f"{_ACCEPTANCE[label]}  {label}")
