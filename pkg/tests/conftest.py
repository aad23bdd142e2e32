from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from oack.core import FUNCTION, MEASURE, LatticeVector

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

rationals = st.fractions(min_value=-6, max_value=6, max_denominator=8)
nonneg_rationals = st.fractions(min_value=0, max_value=4, max_denominator=6)


def vectors(role=FUNCTION, min_k=1, max_k=5, elements=rationals):
    return st.integers(min_k, max_k).flatmap(
        lambda k: st.lists(elements, min_size=k, max_size=k).map(lambda c: LatticeVector(tuple(c), role))
    )


functions = vectors(FUNCTION)
measures = vectors(MEASURE)


@st.composite
def vector_pairs(draw, role=FUNCTION, max_k=5):
    k = draw(st.integers(1, max_k))
    a = draw(st.lists(rationals, min_size=k, max_size=k))
    b = draw(st.lists(rationals, min_size=k, max_size=k))
    return LatticeVector(tuple(a), role), LatticeVector(tuple(b), role)


@pytest.fixture
def F():
    return Fraction


def pytest_terminal_summary(terminalreporter):
    from .test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(f"criterion {n}: {'PASS' if RESULTS[n] else 'FAIL'}")
