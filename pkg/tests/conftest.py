from fractions import Fraction

import pytest
from hypothesis import strategies as st

from charcalc import Weight, build_root_system

SYSTEMS = {name: build_root_system(name) for name in ["A1", "A2", "B2", "G2", "A1xA1", "A3", "C3"]}

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def systems():
    return SYSTEMS


def rationals(max_num=12, denominators=(1, 2, 3)):
    return st.builds(
        lambda n, d: Fraction(n, d),
        st.integers(-max_num, max_num),
        st.sampled_from(denominators),
    )


def weights(rank, torsion=False, **kw):
    real = st.tuples(*[rationals(**kw)] * rank)
    if not torsion:
        return real.map(Weight)
    tors = st.tuples(*[st.sampled_from([Fraction(0), Fraction(1, 2), Fraction(1, 4)])] * rank)
    return st.builds(Weight, real, tors)


def integral_weights(rank, bound=6):
    return st.tuples(*[st.integers(-bound, bound)] * rank).map(Weight)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
