import os
import sys
from functools import lru_cache

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from quatnorm import Alphabet, Polynomial, enumerate_bg

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile(
    "default", max_examples=60, deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@lru_cache(maxsize=None)
def bg(n, d):
    return enumerate_bg(n, d)


@pytest.fixture
def bg_cached():
    return bg


def words(n, min_size=0, max_size=4):
    return st.lists(st.sampled_from(Alphabet(n).letters), min_size=min_size,
                    max_size=max_size).map(tuple)


def coeffs():
    return st.fractions(min_value=-9, max_value=9, max_denominator=4).filter(bool)


def polys(n, max_degree=4, max_terms=5):
    return st.lists(st.tuples(words(n, 0, max_degree), coeffs()), max_size=max_terms).map(
        lambda terms: sum((Polynomial.monomial(w, c) for w, c in terms), Polynomial())
    )


@lru_cache(maxsize=None)
def ext(n, d):
    from quatnorm import extended_rules

    return extended_rules(n, d)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[key])
