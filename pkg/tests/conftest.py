import random
from pathlib import Path

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from curvepoly.arrgeo import Curve
from curvepoly.curvefile import load_curve_file
from curvepoly.qpoly import TriPoly, parse_poly

settings.register_profile("ci", max_examples=60, deadline=None, derandomize=True)
settings.load_profile("ci")

DATA = Path(__file__).resolve().parent.parent / "data"

C1_LINES = ("x - z", "x + z", "y - z", "y + z", "y - x", "y + x")
CONIC = "x^2 + y^2 - 2*z^2"


def lines(*texts) -> Curve:
    return Curve(tuple(parse_poly(t) for t in texts))


@pytest.fixture(scope="session")
def c1():
    return Curve(tuple(parse_poly(t) for t in C1_LINES), name="C1")


@pytest.fixture(scope="session")
def c2():
    return Curve((parse_poly(CONIC),), name="C2")


@pytest.fixture(scope="session")
def example_file():
    return DATA / "six_lines_and_conic.curves"


@pytest.fixture(scope="session")
def example_curves(example_file):
    return load_curve_file(example_file)


small_ints = st.integers(min_value=-6, max_value=6)


@st.composite
def tripolys(draw, max_terms=5, max_deg=3):
    n = draw(st.integers(min_value=0, max_value=max_terms))
    terms = {}
    for _ in range(n):
        a = draw(st.integers(0, max_deg))
        b = draw(st.integers(0, max_deg - a))
        c = draw(st.integers(0, max_deg - a - b))
        terms[(a, b, c)] = terms.get((a, b, c), 0) + draw(small_ints)
    out = TriPoly.constant(0)
    for e, c in terms.items():
        out = out + TriPoly.monomial(e, c)
    return out


@st.composite
def homogeneous_tripolys(draw, degree=None, max_terms=6):
    d = degree if degree is not None else draw(st.integers(1, 4))
    out = TriPoly.constant(0)
    for _ in range(draw(st.integers(1, max_terms))):
        a = draw(st.integers(0, d))
        b = draw(st.integers(0, d - a))
        out = out + TriPoly.monomial((a, b, d - a - b), draw(small_ints))
    return out


@st.composite
def invertible_matrices(draw, lo=-3, hi=3):
    from curvepoly.qpoly import det3

    m = draw(st.lists(st.lists(st.integers(lo, hi), min_size=3, max_size=3), min_size=3, max_size=3))
    from hypothesis import assume

    assume(det3(m) != 0)
    return m


def rng(seed=0):
    return random.Random(seed)


def pytest_terminal_summary(terminalreporter):
    try:
        import test_acceptance
    except ImportError:
        return
    if not test_acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(test_acceptance.RESULTS):
        terminalreporter.write_line(test_acceptance.verdict_line(n))
