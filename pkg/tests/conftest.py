"""Shared hypothesis strategies."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import strategies as st

from cartan_commutant.exact_poly import Polynomial, Scalar, VariableRegistry

RING = VariableRegistry(["x", "y", "z", "t"], laurent_allowed=["t"])

small_fraction = st.builds(
    Fraction, st.integers(min_value=-9, max_value=9), st.integers(min_value=1, max_value=6)
)
scalars = st.builds(Scalar, small_fraction, st.one_of(st.just(0), small_fraction))


def monomial_exponents(registry: VariableRegistry, max_exp: int = 2):
    parts = {}
    for nm in registry.names:
        lo = -max_exp if nm in registry.laurent_allowed else 0
        parts[nm] = st.integers(min_value=lo, max_value=max_exp)
    return st.fixed_dictionaries(parts)


def polynomials(registry: VariableRegistry = RING, max_terms: int = 4, max_exp: int = 2):
    term = st.tuples(monomial_exponents(registry, max_exp), scalars)
    return st.lists(term, max_size=max_terms).map(
        lambda ts: Polynomial.from_terms(registry, [(e, c) for e, c in ts])
    )


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: checks taking more than a few seconds")


@pytest.fixture(scope="session")
def ring():
    return RING


# acceptance lines, printed once at the end of the run
ACCEPTANCE: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[k])
