from fractions import Fraction

from hypothesis import settings, strategies as st

from qsmzv.coeffring import HPoly
from qsmzv.freealg import NCPoly, aword_poly, awords

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)
hpolys = st.lists(rationals, max_size=3).map(HPoly)


@st.composite
def index_st(draw, max_wt=5, min_len=0):
    parts = draw(st.lists(st.integers(1, 3), min_size=min_len, max_size=4))
    while sum(parts) > max_wt:
        parts.pop()
    return tuple(parts)


@st.composite
def aword_st(draw, max_wt=4):
    wt = draw(st.integers(0, max_wt))
    return draw(st.sampled_from(awords(wt)))


@st.composite
def apoly_st(draw, max_wt=3, max_terms=3):
    out = NCPoly()
    for _ in range(draw(st.integers(0, max_terms))):
        out = out + aword_poly(draw(aword_st(max_wt))).scale(draw(hpolys))
    return out


@st.composite
def ab_word_st(draw, max_len=5):
    return "".join(draw(st.lists(st.sampled_from("ab"), max_size=max_len)))


@st.composite
def ncpoly_st(draw, max_len=4, max_terms=3):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        terms[draw(ab_word_st(max_len))] = draw(hpolys)
    return NCPoly(terms)


def frac(x):
    return Fraction(x)


CRITERIA_LINES: dict = {}


def record_criterion(n: int, ok: bool, detail: str):
    CRITERIA_LINES[n] = f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}"


def pytest_terminal_summary(terminalreporter):
    if CRITERIA_LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(CRITERIA_LINES):
            terminalreporter.write_line(CRITERIA_LINES[n])
