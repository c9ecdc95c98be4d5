import itertools

import pytest
from hypothesis import strategies as st

from monosat.core import MonomialIdeal, contains, intersect_all, minimalize
from monosat.io import parse_text

# Worked examples, transcribed from the literature into the text grammar.
REM_24_COMPONENTS = [(2, 1, 0), (1, 2, 0), (3, 2, 2)]

REM_213A_SEEDS = [(2, 0, 0, 0), (0, 2, 2, 0), (1, 1, 1, 1)]
REM_213A_I = (
    "n=4; x1^2, x1*x2*x3^2, x1*x2^2*x3, x1*x2^3, x2^3*x3, x2^4, x2^2*x3^2, x1*x2^2*x4, x1*x2*x3*x4"
)
REM_213A_I2 = (
    "n=4; x1^4, x1^3*x2^2*x4, x1^3*x2*x3*x4, x1^3*x2*x3^2, x1^3*x2^2*x3, x1^3*x2^3, x1^2*x2^4,"
    " x1^2*x2^3*x3, x1^2*x2^2*x3^2, x1*x2^6*x4, x1*x2^7, x2^8, x1*x2^5*x3*x4, x1*x2^6*x3, x2^7*x3,"
    " x1*x2^4*x3^2*x4, x1*x2^3*x3^3*x4, x1*x2^3*x3^4, x1*x2^4*x3^3, x1*x2^5*x3^2, x2^6*x3^2,"
    " x2^5*x3^3, x2^4*x3^4"
)
REM_213B_A = [50, 40, 39, 38, 37, 36, 35, 34, 10, 0]
REM_213B_B = [0, 10, 34, 35, 36, 37, 38, 39, 40, 50]
REM_213B_I2 = (
    "n=2; x1^100, x1^90*x2^10, x1^80*x2^20, x1^60*x2^40, x1^50*x2^50, x1^40*x2^60,"
    " x1^20*x2^80, x1^10*x2^90, x2^100"
)


def ideal(text: str) -> MonomialIdeal:
    return parse_text(text).ideal()


@pytest.fixture
def rem24():
    return intersect_all([MonomialIdeal.pure_powers(e) for e in REM_24_COMPONENTS], 3)


@pytest.fixture
def rem213a():
    return ideal(REM_213A_I)


@pytest.fixture
def rem213a_sq():
    return ideal(REM_213A_I2)


@pytest.fixture
def rem213b():
    return minimalize(zip(REM_213B_A, REM_213B_B), 2)


@pytest.fixture
def rem213b_sq():
    return ideal(REM_213B_I2)


# -- brute force ----------------------------------------------------------

def monomials_up_to(n: int, deg: int):
    """Every monomial in n variables of total degree <= deg."""
    for u in itertools.product(range(deg + 1), repeat=n):
        if sum(u) <= deg:
            yield u


def same_in_box(I: MonomialIdeal, member, deg: int = 12) -> bool:
    """``I`` agrees with the predicate ``member`` on all monomials of degree <= deg."""
    return all(contains(I, u) == member(u) for u in monomials_up_to(I.n, deg))


def divisors(u):
    return itertools.product(*(range(e + 1) for e in u))


# -- strategies -----------------------------------------------------------

@st.composite
def ideals(draw, n_max=3, exp_max=3, gens_max=4, proper=False, nonzero=True):
    n = draw(st.integers(1, n_max))
    mono = st.tuples(*[st.integers(0, exp_max)] * n)
    gens = draw(st.lists(mono, min_size=1 if nonzero else 0, max_size=gens_max))
    if proper:
        gens = [g for g in gens if any(g)] or [(0,) * (n - 1) + (1,)]
    return minimalize(gens, n)


@st.composite
def ideal_pairs(draw, exp_max=3, gens_max=4):
    n = draw(st.integers(1, 3))
    mono = st.tuples(*[st.integers(0, exp_max)] * n)
    a = draw(st.lists(mono, min_size=0, max_size=gens_max))
    b = draw(st.lists(mono, min_size=1, max_size=gens_max))
    return minimalize(a, n), minimalize(b, n)


# -- acceptance reporting -------------------------------------------------

ACCEPTANCE: dict[int, tuple[str, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        status, title = ACCEPTANCE[number]
        terminalreporter.write_line(f"[{status}] criterion {number:2d}: {title}")
