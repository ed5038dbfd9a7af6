import random
from importlib import resources

import pytest
from hypothesis import strategies as st

from plvknots.diagram import random_code

FIXTURES = resources.files("plvknots") / "data" / "fixtures"
GEOMETRIC_FIXTURES = ("triangle.knot", "square.knot", "trefoil.knot", "fig4.knot",
                      "fig6a.knot", "fig6c.pld")


def fixture_path(name):
    return FIXTURES / name


@st.composite
def codes(draw, max_crossings=6):
    n = draw(st.integers(0, max_crossings))
    seed = draw(st.integers(0, 2 ** 32 - 1))
    return random_code(random.Random(seed), n)


@pytest.fixture
def fixture_dir():
    return FIXTURES


# acceptance bookkeeping: criterion number -> list of outcomes
_ACCEPTANCE: dict[int, list[str]] = {}


def pytest_runtest_logreport(report):
    num = dict(report.user_properties).get("criterion")
    if num is None:
        return
    # count the call phase, or a setup phase that failed before the call
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _ACCEPTANCE.setdefault(num, []).append(report.outcome)


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m:
            item.user_properties.append(("criterion", m.args[0]))


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_ACCEPTANCE):
        outcomes = _ACCEPTANCE[num]
        ok = all(o == "passed" for o in outcomes)
        terminalreporter.write_line(f"criterion {num}: {'PASS' if ok else 'FAIL'} "
                                    f"({outcomes.count('passed')}/{len(outcomes)} checks)")
