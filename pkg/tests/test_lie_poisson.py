"""Lie-Poisson bracket over sl(3): bracket axioms and the adjoint action."""

from __future__ import annotations

import pytest
from hypothesis import given, settings

from cartan_commutant.exact_poly import Polynomial, Scalar
from cartan_commutant.lie_poisson import (
    StructureConstants,
    adjoint_apply,
    berezin_bracket,
    commutes_with,
    independence_count,
    random_rational_point,
)
from cartan_commutant.generators import GeneratorId
from cartan_commutant.poly_algebra import generator_poly
from cartan_commutant.sl_model import build_sl, sl_basis, sl_registry
from conftest import polynomials

SC3 = build_sl(3)
REG3 = sl_registry(3)
sl3_polys = polynomials(REG3, max_terms=3, max_exp=2)
br = lambda a, b: berezin_bracket(a, b, SC3)  # noqa: E731


def var(name):
    return Polynomial.var(REG3, name)


def p(*idx):
    return generator_poly(3, GeneratorId.cycle(*idx))


# structure constants -----------------------------------------------------------------------


def test_antisymmetric_half_is_filled_in():
    sc = StructureConstants(3, ["a", "b", "c"], {(0, 1): [(2, 1)], (1, 2): [(0, 1)], (2, 0): [(1, 1)]})
    assert sc.structure(1, 0) == {2: Scalar(-1)}


def test_rejects_inconsistent_tables():
    with pytest.raises(ValueError):
        StructureConstants(2, ["a", "b"], {(0, 0): [(1, 1)]})
    with pytest.raises(ValueError):
        StructureConstants(2, ["a", "b"], {(0, 1): [(0, 1)], (1, 0): [(0, 1)]})
    with pytest.raises(IndexError):
        StructureConstants(2, ["a", "b"], {(0, 1): [(5, 1)]})
    with pytest.raises(ValueError):
        StructureConstants(3, ["a", "b"], {})


def test_rejects_jacobi_violation():
    bad = {(0, 1): [(2, 1)], (1, 2): [(2, 1)], (0, 2): [(1, 1)]}
    with pytest.raises(ValueError, match="Jacobi"):
        StructureConstants(3, ["a", "b", "c"], bad)
    StructureConstants(3, ["a", "b", "c"], bad, validate=False)


def test_json_roundtrip():
    again = StructureConstants.from_json(SC3.to_json())
    assert again.table == SC3.table and again.basis_names == SC3.basis_names


# bracket axioms ---------------------------------------------------------------------------


@settings(max_examples=500, deadline=None)
@given(sl3_polys, sl3_polys)
def test_antisymmetry(a, b):
    assert br(a, b) == -br(b, a)
    assert br(a, a).is_zero()


@settings(max_examples=200, deadline=None)
@given(polynomials(REG3, max_terms=2, max_exp=1), polynomials(REG3, max_terms=2, max_exp=1),
       polynomials(REG3, max_terms=2, max_exp=1))
def test_jacobi(a, b, c):
    assert (br(a, br(b, c)) + br(b, br(c, a)) + br(c, br(a, b))).is_zero()


@settings(max_examples=200, deadline=None)
@given(polynomials(REG3, max_terms=2), polynomials(REG3, max_terms=2), polynomials(REG3, max_terms=2))
def test_leibniz(a, b, c):
    assert br(a, b * c) == br(a, b) * c + b * br(a, c)


def test_linear_brackets_reproduce_structure_constants():
    names = sl_basis(3).generators
    for i, a in enumerate(names):
        for j, b in enumerate(names):
            assert br(var(a), var(b)) == SC3.linear_form(REG3, i, j)


def test_quadratic_bracket_gives_cubic_cycles():
    assert br(p(1, 2), p(1, 3)) == p(1, 2, 3) - p(1, 3, 2)


# adjoint action ---------------------------------------------------------------------------


def test_adjoint_weights():
    h1 = sl_basis(3).index("h1")
    assert adjoint_apply(h1, var("e1_2"), SC3) == var("e1_2").scale(2)
    assert adjoint_apply(h1, var("h1"), SC3).is_zero()
    assert adjoint_apply(h1, p(1, 2), SC3).is_zero()


def test_commutes_with_cartan():
    cartan = [0, 1]
    assert commutes_with(p(1, 2, 3), cartan, SC3)
    assert not commutes_with(var("e1_2"), cartan, SC3)
    assert commutes_with(var("h1") * p(1, 2), cartan, SC3)
    with pytest.raises(IndexError):
        commutes_with(var("h1"), [99], SC3)


@pytest.mark.parametrize("n, expected", [(3, 6), (4, 12), (5, 20), (6, 30)])
def test_independent_solution_count(n, expected):
    sc = build_sl(n)
    pt = random_rational_point(sc.basis_names, seed=n)
    assert independence_count(sc, range(n - 1), pt) == expected
