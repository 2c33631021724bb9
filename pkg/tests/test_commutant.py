"""Cycle-monomial basis of the Cartan commutant."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cartan_commutant.commutant import (
    NotInCommutantError,
    cycle_poly,
    designated_independent_set,
    enumerate_basis,
    factor_cycles,
    independence_check,
    is_decomposable,
    lemma_exhaustion,
    linear_dimension,
    lowering_count,
    normal_form,
    nu,
)
from cartan_commutant.exact_poly import Polynomial
from cartan_commutant.generators import CycleMonomial, GeneratorId, NormalFormExpr, canonical_cycle
from cartan_commutant.sl_model import sl_registry, trace_casimir


def cyc(*idx):
    return canonical_cycle(idx)


def mono(*names):
    out: dict[str, int] = {}
    for nm in names:
        out[nm] = out.get(nm, 0) + 1
    return out


@pytest.mark.parametrize("n, d, expected", [(3, 2, 3), (3, 3, 2), (4, 4, 6), (5, 3, 20), (6, 6, 120)])
def test_cycle_counts(n, d, expected):
    assert nu(n, d) == expected


@pytest.mark.parametrize("n, dim", [(2, 2), (3, 7), (4, 23), (5, 88), (6, 414), (7, 2371)])
def test_linear_dimension(n, dim):
    assert linear_dimension(n) == dim


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_enumeration_matches_dimension(n):
    b = enumerate_basis(n)
    assert b.size == linear_dimension(n)
    assert len(set(b.cycles)) == len(b.cycles)
    assert sum(b.breakdown().values()) == b.size


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_every_cycle_commutes_with_cartan(n):
    enumerate_basis(n, verify=True)


def test_small_bases():
    assert [g.name for g in enumerate_basis(2).generators()] == ["h1", "p(1,2)"]
    names = [g.name for g in enumerate_basis(3).generators()]
    assert names == ["h1", "h2", "p(1,2)", "p(1,3)", "p(2,3)", "p(1,2,3)", "p(1,3,2)"]
    assert enumerate_basis(5).breakdown() == {1: 4, 2: 10, 3: 20, 4: 30, 5: 24}


def test_canonical_rotation():
    assert cyc(2, 3, 1) == CycleMonomial((1, 2, 3))
    assert cyc(3, 1, 2) == CycleMonomial((1, 2, 3))
    assert cyc(1, 3, 2) != cyc(1, 2, 3)
    with pytest.raises(ValueError):
        CycleMonomial((2, 1))
    with pytest.raises(ValueError):
        canonical_cycle((1, 1))


def test_factor_cycles_examples():
    assert factor_cycles(mono("e1_2", "e2_1")) == (cyc(1, 2),)
    assert factor_cycles(mono("e1_2", "e2_3", "e3_1")) == (cyc(1, 2, 3),)
    six = mono("e1_2", "e2_1", "e1_3", "e3_1", "e2_3", "e3_2")
    assert factor_cycles(six) == (cyc(1, 2), cyc(1, 3), cyc(2, 3))
    with pytest.raises(NotInCommutantError):
        factor_cycles(mono("e1_2"))


def test_six_cycle_product_has_two_factorizations():
    p = lambda *i: cycle_poly(3, cyc(*i))  # noqa: E731
    assert p(1, 2) * p(1, 3) * p(2, 3) == p(1, 2, 3) * p(1, 3, 2)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.permutations([1, 2, 3, 4, 5]).flatmap(
    lambda perm: st.integers(min_value=2, max_value=5).map(lambda d: tuple(perm[:d]))), min_size=1, max_size=4))
def test_factorization_multiplies_back(cycles):
    n = 5
    prod = Polynomial.const(sl_registry(n), 1)
    for c in cycles:
        prod = prod * cycle_poly(n, canonical_cycle(c))
    ((m, _),) = list(prod.terms())
    back = Polynomial.const(sl_registry(n), 1)
    for c in factor_cycles(m):
        back = back * cycle_poly(n, c)
    assert back == prod


def test_normal_form():
    reg = sl_registry(3)
    h1 = Polynomial.var(reg, "h1")
    p12 = GeneratorId.cycle(1, 2)
    assert normal_form(h1 * h1 * cycle_poly(3, cyc(1, 2)), 3) == NormalFormExpr(
        {((GeneratorId.cartan(1), 2), (p12, 1)): 1}
    )
    diff = cycle_poly(3, cyc(1, 2, 3)) - cycle_poly(3, cyc(1, 3, 2))
    nf = normal_form(diff, 3)
    assert nf == NormalFormExpr.generator(GeneratorId.cycle(1, 2, 3)) - NormalFormExpr.generator(
        GeneratorId.cycle(1, 3, 2)
    )
    expected = (
        NormalFormExpr.generator(p12)
        + NormalFormExpr.generator(GeneratorId.cycle(1, 3))
        + NormalFormExpr.generator(GeneratorId.cycle(2, 3))
    )
    h = NormalFormExpr.generator
    expected = expected + (h(GeneratorId.cartan(1), 2) + h(GeneratorId.cartan(1)) * h(GeneratorId.cartan(2))
                           + h(GeneratorId.cartan(2), 2)).scale(Fraction(1, 3))
    assert normal_form(trace_casimir(3, 2), 3) == expected
    with pytest.raises(NotInCommutantError):
        normal_form(Polynomial.var(reg, "e1_2"), 3)


def test_normal_form_expands_back():
    n = 4
    reg = sl_registry(n)
    P = trace_casimir(n, 4)
    from cartan_commutant.poly_algebra import generator_poly

    assert normal_form(P, n).expand(lambda g: generator_poly(n, g), reg) == P


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_functional_independence(n):
    assert len(designated_independent_set(n)) == n * n - n
    assert independence_check(n)


def test_lemma_exhaustion_rank_two():
    s = lemma_exhaustion(3, 4)
    assert s.monomials == {2: 3, 3: 2, 4: 6}
    assert s.indecomposable == {2: 3, 3: 2, 4: 0}
    assert s.max_indecomposable_degree == 3
    assert s.factor_failures == 0
    assert s.lowering_violations == 0
    # indecomposable with two lowering factors: e13 e32 e21
    assert (("e1_3", 1), ("e2_1", 1), ("e3_2", 1)) in s.strict_counterexamples


def test_lowering_count_bound_fails_at_rank_three():
    m = mono("e1_3", "e3_2", "e2_4", "e4_1")
    assert not is_decomposable(m)
    assert lowering_count(m) == 2
    s = lemma_exhaustion(4, 5)
    assert s.indecomposable == {2: 6, 3: 8, 4: 6, 5: 0}
    assert s.factor_failures == 0
    assert s.lowering_violations == 4
