from __future__ import annotations

import sys
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from gallai import QuadScalar, make_pointset  # noqa: E402

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
nonzero_fractions = fractions.filter(bool)


@st.composite
def quad_scalars(draw, d: int):
    return QuadScalar(draw(fractions), draw(fractions), d)


@pytest.fixture
def triangle():
    return make_pointset([[0, 0], [1, 0], [0, 1]])


@pytest.fixture
def equilateral():
    return make_pointset([[0, 0], [1, 0], ["1/2", "1/2√3"]])


def F(x) -> Fraction:
    return Fraction(x)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
