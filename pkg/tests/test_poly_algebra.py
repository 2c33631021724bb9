"""Polynomial algebra of the commutant: bracket tables, relations, Casimir K."""

from __future__ import annotations

import itertools
from fractions import Fraction

import pytest

from cartan_commutant import poly_algebra as pa
from cartan_commutant import tables
from cartan_commutant.exact_poly import Polynomial
from cartan_commutant.generators import GeneratorId, NormalFormExpr
from cartan_commutant.lie_poisson import berezin_bracket
from cartan_commutant.sl_model import build_sl, sl_registry

P = GeneratorId.cycle
H = GeneratorId.cartan
gen = NormalFormExpr.generator


def test_generator_polynomials():
    reg = sl_registry(3)
    e = lambda a, b: Polynomial.var(reg, f"e{a}_{b}")  # noqa: E731
    assert pa.generator_poly(3, P(1, 2)) == e(1, 2) * e(2, 1)
    f123 = pa.generator_poly(3, GeneratorId.derived_f(1, 2, 3))
    assert f123 == (pa.generator_poly(3, P(1, 3, 2)) - pa.generator_poly(3, P(1, 2, 3))).scale(
        Fraction(1, 2)
    )
    with pytest.raises(ValueError):
        pa.generator_poly(3, H(3))
    with pytest.raises(ValueError):
        pa.generator_poly(3, GeneratorId.derived_f(1, 2))


def test_sl3_brackets():
    assert pa.bracket(3, P(1, 2), P(1, 3)) == gen(P(1, 2, 3)) - gen(P(1, 3, 2))
    expected = (
        gen(H(1)) * gen(P(1, 3)) * gen(P(2, 3))
        + gen(H(2)) * gen(P(1, 2)) * gen(P(1, 3))
        - (gen(H(1)) + gen(H(2))) * gen(P(1, 2)) * gen(P(2, 3))
    )
    assert pa.bracket(3, P(1, 2, 3), P(1, 3, 2)) == expected


@pytest.mark.parametrize("n", [2, 3, 4])
def test_cartan_generators_are_central(n):
    for h in range(1, n):
        for g in pa.p_generators(n):
            assert not pa.bracket(n, H(h), g)


def test_sl2_table_is_abelian():
    t = pa.structure_table(2)
    assert t.nontrivial() == []
    assert pa.algebra_order(t) == 0
    assert "all brackets vanish" in t.to_text()


def test_sl3_cfg_table():
    t = pa.structure_table(3, "cfg")
    c12, c23 = GeneratorId.derived_cij(1, 2), GeneratorId.derived_cij(2, 3)
    assert t.get(c12, c23) == gen(GeneratorId.derived_f(1, 2, 3)).scale(2)
    assert t.get(c23, c12) == -t.get(c12, c23)
    assert pa.algebra_order(t) == 2
    assert pa.algebra_order(pa.structure_table(3, "p")) == 2


def test_sl4_cubic_order_and_sample_relation():
    t = pa.structure_table(4, "cfg")
    assert len(t.entries) == len(t.generators) * (len(t.generators) - 1) // 2
    assert pa.algebra_order(t) == 3
    rep = pa.compare_listing(4, [("{ckl, fijk}", r"\{c_{kl}, f_{ijk}\}=g_{ijlk}-g_{ijkl}")], "r", "cfg", "ijkl")
    assert rep.all_passed


def test_table_is_thread_independent():
    a = pa.structure_table(4, "p", threads=1).to_json()
    b = pa.structure_table(4, "p", threads=2).to_json()
    assert a == b


def test_golden_table_n3():
    rep = pa.compare_listing(3, tables.TABLE3_P, "t", "p")
    assert rep.all_passed and len(rep.checks) == 6
    assert pa.compare_listing(3, tables.FREL, "frel", "cfg").all_passed
    assert pa.compare_listing(3, tables.EQUAFIN, "equafin", "cfg", "ijk").all_passed
    for name, printed, alt in tables.TABLE3_DUPLICATES:
        bad = pa.compare_listing(3, [(name, printed)], "dup", "p")
        assert not bad.all_passed and "lhs:" in bad.checks[0].detail
        assert pa.compare_listing(3, [(name, alt)], "dup", "p").all_passed


def test_cubic_listing_n4():
    rep = pa.compare_listing(4, tables.CUBIC4, "cubic", "cfg", "ijkl")
    failed = {c.name for c in rep.failures()}
    assert failed == {"{fijk, gjkl}", "{fjkl, giljk}", "{gjkl, filjk}", "{gijlk, giljk}", "{fijkl, gijlk}"}
    assert len(rep.checks) - len(failed) == 36
    unparsed = [c for c in rep.failures() if c.residual_terms == -1]
    assert [c.name for c in unparsed] == ["{fijk, gjkl}"]
    repaired = pa.compare_listing(4, list(tables.CUBIC4_REPAIRS.items()), "cubic", "cfg", "ijkl")
    assert repaired.all_passed


@pytest.mark.parametrize("n", [3, 4, 5])
def test_dependence_families(n):
    for fam in ("alde1", "funrel", "addrel"):
        assert pa.verify_identities(n, fam).all_passed
    if n >= 4:
        assert pa.verify_identities(n, "addrels").all_passed


@pytest.mark.parametrize("n", [3, 4, 5])
def test_rela1(n):
    rep = pa.verify_identities(n, "rela1")
    assert all(c.passed for c in rep.by_label("rela1:chain"))
    assert all(c.passed for c in rep.by_label("rela1:power"))
    assert all(c.passed for c in rep.by_label("rela1:product-corrected"))
    # the printed product has one factor too many
    assert not rep.by_label("rela1:product")[0].passed


def test_rank_two_families():
    assert pa.verify_identities(3, "c2c3").all_passed
    assert pa.verify_identities(3, "eq1equ1").all_passed
    with pytest.raises(ValueError):
        pa.verify_identities(4, "c2c3")
    with pytest.raises(ValueError):
        pa.verify_identities(3, "nonsense")


@pytest.mark.parametrize("n", [3, 4, 5])
def test_filtration(n):
    assert pa.filtration_check(n).all_passed


def test_generator_jacobi():
    gens = pa.cfg_generators(3)
    assert pa.jacobi_check(3, itertools.combinations(gens, 3)) == []
    sample = list(itertools.islice(itertools.combinations(pa.p_generators(4), 3), 300))
    assert pa.jacobi_check(4, sample) == []


def test_quadratic_casimir():
    K, rep = pa.casimir_K(3)
    assert rep.all_passed
    assert len(rep.by_label("cas")) == 7
    sc = build_sl(3)
    c12 = pa.generator_poly(3, GeneratorId.derived_cij(1, 2))
    assert berezin_bracket(K, c12, sc).is_zero()
    assert pa.casimir_K(3, (2, 1, 3))[0] == K
    with pytest.raises(ValueError):
        pa.casimir_K(4)


def test_normal_form_json_roundtrip():
    e = pa.bracket(4, P(1, 2, 3), P(1, 3, 4))
    assert NormalFormExpr.from_json(e.to_json()) == e
