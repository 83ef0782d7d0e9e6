from __future__ import annotations

import cmath
from fractions import Fraction

from hypothesis import settings, strategies as st

from tcat.cyclotomic import CycNumber

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

CONDUCTORS = [1, 2, 3, 4, 5, 6, 8, 12]


def to_complex(x: CycNumber) -> complex:
    """Numerical value, used only as an independent oracle for exact arithmetic."""
    n = x.conductor
    return sum(float(c) * cmath.exp(2j * cmath.pi * k / n) for k, c in enumerate(x.coeffs))


@st.composite
def cyc_numbers(draw, conductors=CONDUCTORS, nonzero: bool = False):
    n = draw(st.sampled_from(conductors))
    coeffs = draw(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=6),
                           min_size=n, max_size=n))
    x = CycNumber(n, [Fraction(c) for c in coeffs])
    if nonzero and x.is_zero():
        x = x + 1
    return x


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS, format_line
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(RESULTS):
        ok, detail = RESULTS[number]
        terminalreporter.write_line(format_line(number, ok, detail))
