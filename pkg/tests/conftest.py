import itertools
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from multitoric.exterior import Form, VectorField
from multitoric.poly import Poly

# acceptance lines collected by test_acceptance.record()
ACCEPTANCE: list[str] = []

N = 4


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)


small_fracs = st.fractions(min_value=-3, max_value=3, max_denominator=4)


@st.composite
def polys(draw, nvars=N, max_deg=2, max_terms=3):
    n = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n):
        exp = tuple(draw(st.lists(st.integers(0, max_deg), min_size=nvars, max_size=nvars)))
        if sum(exp) <= max_deg:
            terms[exp] = draw(small_fracs)
    return Poly(nvars, terms)


@st.composite
def forms(draw, degree=None, nvars=N, constant=False):
    p = draw(st.integers(0, nvars)) if degree is None else degree
    idxs = list(itertools.combinations(range(nvars), p))
    chosen = draw(st.lists(st.sampled_from(idxs), max_size=3, unique=True)) if idxs else []
    coeffs = {}
    for k in chosen:
        coeffs[k] = Poly.const(nvars, draw(small_fracs)) if constant else draw(polys(nvars))
    return Form(nvars, p, coeffs)


@st.composite
def fields(draw, nvars=N):
    return VectorField([draw(polys(nvars, max_deg=1, max_terms=2)) for _ in range(nvars)])


@pytest.fixture
def half():
    return Fraction(1, 2)
