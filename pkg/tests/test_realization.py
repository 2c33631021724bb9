"""Sphere realization: canonical bracket, on-shell reduction, identity reports."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings

from cartan_commutant import realization as rz
from cartan_commutant.exact_poly import Polynomial, Scalar
from cartan_commutant.generators import GeneratorId
from cartan_commutant.report import FAIL, IDENTICAL, ON_SHELL
from cartan_commutant.sl_model import sl_registry
from conftest import polynomials

RING3 = rz.canonical_ring(3)
small = polynomials(RING3, max_terms=2, max_exp=1)
medium = polynomials(RING3, max_terms=3, max_exp=2)
cb = lambda a, b: rz.canonical_bracket(a, b, 3)  # noqa: E731


def v(name, n=3):
    return Polynomial.var(rz.canonical_ring(n), name)


def shell_generators(n):
    sphere = sum((v(f"s{k}", n) ** 2 for k in range(1, n + 1)), Polynomial.const(rz.canonical_ring(n), -1))
    tangent = sum((v(f"s{k}", n) * v(f"p{k}", n) for k in range(1, n + 1)), Polynomial.zero(rz.canonical_ring(n)))
    return sphere, tangent


# canonical bracket ---------------------------------------------------------------------------


@settings(max_examples=300, deadline=None)
@given(medium, medium)
def test_canonical_antisymmetry(a, b):
    assert cb(a, b) == -cb(b, a)


@settings(max_examples=200, deadline=None)
@given(small, small, small)
def test_canonical_jacobi(a, b, c):
    assert (cb(a, cb(b, c)) + cb(b, cb(c, a)) + cb(c, cb(a, b))).is_zero()


@settings(max_examples=200, deadline=None)
@given(medium, medium, medium)
def test_canonical_leibniz(a, b, c):
    assert cb(a, b * c) == cb(a, b) * c + b * cb(a, c)


def test_canonical_pairs():
    assert cb(v("s1"), v("p1")) == Polynomial.const(RING3, 1)
    assert cb(v("s1"), v("p2")).is_zero()
    assert cb(v("a1"), v("p1")).is_zero()


# on-shell reduction -------------------------------------------------------------------------


@pytest.mark.parametrize("n", [3, 4, 5])
def test_constraints_reduce_to_zero(n):
    sphere, tangent = shell_generators(n)
    assert rz.reduce_on_shell(sphere, n).is_zero()
    assert rz.reduce_on_shell(tangent, n).is_zero()
    sn = v(f"s{n}", n)
    w = Polynomial.const(rz.canonical_ring(n), 1)
    for k in range(1, n):
        w = w - v(f"s{k}", n) ** 2
    assert rz.reduce_on_shell(sn**3, n) == sn * w


@settings(max_examples=150, deadline=None)
@given(medium, medium, medium)
def test_reduction_kills_the_constraint_ideal(a, b, c):
    sphere, tangent = shell_generators(3)
    assert rz.reduce_on_shell(a * sphere + b * tangent, 3).is_zero()
    r = rz.reduce_on_shell(c, 3)
    assert rz.reduce_on_shell(r, 3) == r
    assert "p3" not in r.variables()


@settings(max_examples=100, deadline=None)
@given(medium, medium)
def test_reduction_is_linear(a, b):
    red = lambda x: rz.reduce_on_shell(x, 3)  # noqa: E731
    assert red(a + b.scale(3)) == red(red(a) + red(b).scale(3))


@settings(max_examples=100, deadline=None)
@given(medium)
def test_representative_is_canonical(a):
    # multiplying by W / s_n^2 (equal to 1 on shell) must not change the output
    w = Polynomial.const(RING3, 1) - v("s1") ** 2 - v("s2") ** 2
    red = lambda x: rz.reduce_on_shell(x, 3)  # noqa: E731
    assert red(a * w * v("s3") ** -2) == red(a)


@settings(max_examples=60, deadline=None)
@given(medium)
def test_reduction_preserves_values_on_shell(a):
    r = rz.reduce_on_shell(a, 3)
    rng = random.Random(5)
    for _ in range(3):
        pt = rz.rational_shell_point(3, rng)
        pt.update({f"a{k}": Fraction(k, 7) for k in range(1, 4)})
        assert r.evaluate(pt) == a.evaluate(pt)


def test_reduction_rejects_foreign_ring():
    with pytest.raises(ValueError):
        rz.reduce_on_shell(Polynomial.var(sl_registry(3), "h1"), 3)


def test_rational_points_lie_on_shell():
    sphere, tangent = shell_generators(4)
    rng = random.Random(0)
    for _ in range(5):
        pt = rz.rational_shell_point(4, rng)
        assert sphere.evaluate(pt) == Scalar(0)
        assert tangent.evaluate(pt) == Scalar(0)


# realization map --------------------------------------------------------------------------------


def test_generator_images():
    rmap = rz.build_realization(3)
    I = Scalar.I
    assert rmap.images["h1"] == (v("a1") - v("a2")).scale(I)
    L = v("s1") * v("p2") - v("s2") * v("p1")
    A = v("a1") * v("s2") * v("s1") ** -1 + v("a2") * v("s1") * v("s2") ** -1
    assert rmap.images["e1_2"] == (L - A.scale(I)).scale(Fraction(-1, 2))
    assert rz.build_realization(4).images["h3"] == (v("a3", 4) - v("a4", 4)).scale(I)
    with pytest.raises(ValueError):
        rz.build_realization(2)


def test_lowering_generator_pair_is_not_preserved():
    # the images of h_l are constants, so {e12, e21} cannot map onto h1
    rmap = rz.build_realization(3)
    lhs = cb(rmap.images["e1_2"], rmap.images["e2_1"])
    assert lhs.variables() - {"a1", "a2"}
    assert rz.reduce_on_shell(lhs - rmap.images["h1"], 3)


@pytest.mark.parametrize("n, pairs, identical", [(3, 36, 9), (4, 120, 36)])
def test_homomorphism_report(n, pairs, identical):
    rep = rz.homomorphism_check(n)
    d = rep.derived
    assert d["sl_pairs"] == pairs
    assert d["sl_pairs_identical"] == identical
    assert d["sl_pairs_on_shell"] == 0
    assert d["commutant_pairs_identical"] == d["commutant_pairs"]
    assert all(c.passed for c in rep.by_label("commutant-hom"))
    hh = next(c for c in rep.checks if c.name == "{h1, h2}")
    assert hh.status == IDENTICAL


def test_commutant_generators_commute_with_realized_cartan():
    # realized Cartan images are constants; brackets of images with them vanish
    for g in [GeneratorId.cycle(1, 2), GeneratorId.cycle(1, 2, 3)]:
        img = rz.realized_generator(3, g)
        assert cb(img, rz.build_realization(3).images["h1"]).is_zero()


# collapse and Racah reports -----------------------------------------------------------------------


def statuses(rep, label):
    return {c.name: c.status for c in rep.by_label(label)}


def test_collapse_n3():
    rep = rz.collapse_report(3)
    g = statuses(rep, "eq:g123red")
    assert sorted(g.values()) == sorted([FAIL, IDENTICAL])
    assert all(c.passed for c in rep.by_label("HS2"))
    assert all(c.passed for c in rep.by_label("c3"))
    general = rep.by_label("c2-H general")
    assert [c.passed for c in general].count(True) == 1


def test_collapse_n4():
    rep = rz.collapse_report(4)
    assert all(c.passed for c in rep.by_label("collapses"))
    assert len(rep.by_label("collapses")) == 72
    c4 = rep.by_label("c4")
    assert [c.passed for c in c4].count(True) == 1
    assert all(c.passed for c in rep.by_label("c3"))


def test_fitted_collapse_n5():
    rep = rz.collapse_report(5)
    assert all(c.passed for c in rep.by_label("collapse-fit"))
    d = rep.derived
    assert d["c^[3]"] == {"(c^[2])^0": "2/25i * S^3", "(c^[2])^1": "3/5i * S"}
    assert d["c^[4]"]["(c^[2])^2"] == "1/2"


def test_fitted_collapse_reproduces_lower_ranks():
    fit = rz.collapse_coefficients(3, 3)
    S = rz.alpha_sum(3)
    c2 = rz.realized_casimir(3, 2)
    target = (S * c2).scale(Scalar(0, Fraction(1, 3))) + (S**3).scale(Scalar(0, Fraction(1, 27)))
    rebuilt = sum((A * c2**m for m, A in fit.items()), Polynomial.zero(rz.canonical_ring(3)))
    assert rz.reduce_on_shell(rebuilt - target, 3).is_zero()


def test_racah_n3():
    rep = rz.racah_check(3)
    for label in ("f123real", "eq:lineq", "eq:f123", "RacahLinRel", "centr", "eq:f123P", "eq:ants", "Ham"):
        assert rep.by_label(label) and all(c.passed for c in rep.by_label(label)), label
    eq = rep.by_label("EQ")
    assert sorted(c.passed for c in eq) == [False, True]


def test_racah_n4():
    rep = rz.racah_check(4)
    for label in ("R(4)", "fijk4r", "eq:linequa", "eq:Ham"):
        assert rep.by_label(label) and all(c.passed for c in rep.by_label(label)), label


def test_omega_first_coefficient():
    om1, _, _ = rz.omega_polys(printed=True)
    S = rz.alpha_sum(3)
    assert om1 == (S * S).scale(Fraction(-1, 144))


def test_linear_dependence_coefficient():
    for n, coeff in ((3, "1/4"), (4, "1/2"), (5, "3/4")):
        assert rz.racah_check(n).derived["linear_dependence"]["sum alpha^2"] == coeff


# float cross-check ---------------------------------------------------------------------------------


def test_sample_points_on_shell():
    for pt in rz.sample_shell_points(4, count=5, seed=3):
        s = [pt[f"s{k}"] for k in range(1, 5)]
        p = [pt[f"p{k}"] for k in range(1, 5)]
        assert abs(sum(x * x for x in s) - 1) < 1e-12
        assert abs(sum(x * y for x, y in zip(s, p))) < 1e-12


def test_float_crosscheck_n3():
    rep = rz.float_crosscheck(rz.realize_report(3))
    assert rep.all_passed
    assert rep.derived["max_abs_residual"] < 1e-9
    assert all(c.status in (IDENTICAL, ON_SHELL) for c in rep.checks)
