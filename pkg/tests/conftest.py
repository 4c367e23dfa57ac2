import numpy as np
import pytest
from hypothesis import strategies as st

finite = st.floats(min_value=-1e6, max_value=1e6, allow_nan=False, allow_infinity=False)


@st.composite
def samples(draw, min_size=2, max_size=25, nondegenerate=False):
    """Data vectors; small integers mixed in so ties actually happen."""
    elem = st.one_of(finite, st.integers(-5, 5).map(float))
    xs = draw(st.lists(elem, min_size=min_size, max_size=max_size))
    if nondegenerate and max(xs) - min(xs) < 1e-300:
        xs = xs + [xs[0] + 1.0]
    return xs


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        ok, detail = results[number]
        doc = mod.CRITERIA[number].__doc__
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {doc} {detail}")
