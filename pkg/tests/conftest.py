import os

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from monomult import MonomialIdeal, edge_ideal, cycle_edges, maximal_ideal

settings.register_profile(
    "default",
    deadline=None,
    max_examples=40,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile("thorough", deadline=None, max_examples=400)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def ideal(*gens):
    return MonomialIdeal(gens)


# Named instances shared by several suites.
STAIR_A = ideal((0, 4), (2, 1), (1, 2))
STAIR_B = ideal((1, 5), (2, 3), (3, 2))
SYM6 = ideal((6, 0, 0), (0, 6, 0), (0, 0, 6), (2, 1, 1), (1, 2, 1), (1, 1, 2))
SYM6_XY = ideal((6, 0, 0), (0, 6, 0), (2, 1, 1), (1, 2, 1))
SYM6_XZ = ideal((6, 0, 0), (0, 0, 6), (2, 1, 1), (1, 1, 2))
SYM6_YZ = ideal((0, 6, 0), (0, 0, 6), (1, 2, 1), (1, 1, 2))
SYM6_CORE = ideal((2, 1, 1), (1, 2, 1), (1, 1, 2))
TRIANGLE = ideal((1, 1, 0), (0, 1, 1), (1, 0, 1))
XY = ideal((1, 1))

IDEALS_2D = {
    "m2": maximal_ideal(2),
    "stair_a": STAIR_A,
    "stair_b": STAIR_B,
    "x2y3": ideal((2, 0), (0, 3)),
    "x4y5": ideal((4, 0), (0, 5)),
    "x2_xy": ideal((2, 0), (1, 1)),
    "xy": XY,
}
IDEALS_3D = {
    "m3": maximal_ideal(3),
    "triangle": TRIANGLE,
    "sym6": SYM6,
    "sym6_xy": SYM6_XY,
    "sym6_core": SYM6_CORE,
}
ALL_IDEALS = {**IDEALS_2D, **IDEALS_3D, "c5": edge_ideal(cycle_edges(5))}


@st.composite
def monomial_ideals(draw, dim=None, max_exp=5, max_gens=4):
    d = draw(st.sampled_from([2, 3])) if dim is None else dim
    top = max_exp if d == 2 else min(max_exp, 3)
    vec = st.tuples(*[st.integers(0, top) for _ in range(d)]).filter(any)
    gens = draw(st.lists(vec, min_size=1, max_size=max_gens))
    return MonomialIdeal(gens, d)


# Acceptance lines collected during the run and echoed in the summary.
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
        terminalreporter.write_line(line)


@pytest.fixture
def report_line():
    return ACCEPTANCE_LINES.append
