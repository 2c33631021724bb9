"""Canonical phase-space realization of sl(n) on the (n-1)-sphere.

Phase space carries coordinates ``s_k``, momenta ``p_k`` and central
parameters ``a_k`` (the ``alpha_k``).  The realization is

    h_k  -> i (a_k - a_{k+1})
    e_ij -> -1/2 ((s_i p_j - s_j p_i) - i (a_i s_j/s_i + a_j s_i/s_j))
    e_ji -> -1/2 ((s_j p_i - s_i p_j) - i (a_i s_j/s_i + a_j s_i/s_j))

and identities are decided modulo the constraints ``sum s_k^2 = 1`` and
``sum s_k p_k = 0`` by :func:`reduce_on_shell`.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Mapping, Sequence

import numpy as np

from .commutant import enumerate_basis
from .exact_poly import Polynomial, Scalar, VariableRegistry
from .generators import GeneratorId
from .latex_expr import LatexSyntaxError, Symbol, evaluate_latex, split_relation
from .lie_poisson import berezin_bracket
from .linalg import solve_sparse
from .poly_algebra import CommutantSymbols, generator_poly, p_generators
from .report import FAIL, IDENTICAL, ON_SHELL, Check, Report
from .sl_model import build_sl, delta, e_name, h_name, sl_basis, sl_registry
from . import tables

__all__ = [
    "canonical_ring",
    "RealizationMap",
    "build_realization",
    "canonical_bracket",
    "reduce_on_shell",
    "hamiltonian",
    "realized_casimir",
    "PhaseSymbols",
    "shell_check",
    "homomorphism_check",
    "collapse_report",
    "collapse_coefficients",
    "racah_check",
    "sample_shell_points",
    "float_crosscheck",
]

I = Scalar.I
HALF = Fraction(1, 2)


def _s(k: int) -> str:
    return f"s{k}"


def _p(k: int) -> str:
    return f"p{k}"


def _a(k: int) -> str:
    return f"a{k}"


@lru_cache(maxsize=None)
def canonical_ring(n: int) -> VariableRegistry:
    """Registry ``s1..sn, p1..pn, a1..an``; every ``s_k`` may carry negative powers."""
    if n < 2:
        raise ValueError("n must be at least 2")
    names = [_s(k) for k in range(1, n + 1)]
    names += [_p(k) for k in range(1, n + 1)]
    names += [_a(k) for k in range(1, n + 1)]
    return VariableRegistry(names, laurent_allowed=[_s(k) for k in range(1, n + 1)])


def _var(n: int, name: str) -> Polynomial:
    return Polynomial.var(canonical_ring(n), name)


def _const(n: int, c) -> Polynomial:
    return Polynomial.const(canonical_ring(n), c)


# brackets and constraints ---------------------------------------------------------


def canonical_bracket(P: Polynomial, Q: Polynomial, n: int | None = None) -> Polynomial:
    """``{P, Q} = sum_k dP/ds_k dQ/dp_k - dP/dp_k dQ/ds_k``; the ``a_k`` are central."""
    reg = P.registry
    if Q.registry != reg:
        raise ValueError("registry mismatch")
    if n is None:
        n = sum(1 for nm in reg.names if nm.startswith("s"))
    pv, qv = P.variables(), Q.variables()
    out = Polynomial.zero(reg)
    for k in range(1, n + 1):
        s, p = _s(k), _p(k)
        if s in pv and p in qv:
            out = out + P.diff(s) * Q.diff(p)
        if p in pv and s in qv:
            out = out - P.diff(p) * Q.diff(s)
    return out


@lru_cache(maxsize=None)
def _pn_image(n: int) -> Polynomial:
    # p_n = -(sum_{k<n} s_k p_k) / s_n
    t = Polynomial.zero(canonical_ring(n))
    for k in range(1, n):
        t = t + _var(n, _s(k)) * _var(n, _p(k))
    return -(t * _var(n, _s(n)) ** -1)


@lru_cache(maxsize=None)
def _w_power(n: int, q: int) -> Polynomial:
    # (1 - sum_{k<n} s_k^2)^q
    if q == 0:
        return _const(n, 1)
    if q == 1:
        w = _const(n, 1)
        for k in range(1, n):
            w = w - _var(n, _s(k)) ** 2
        return w
    return _w_power(n, q - 1) * _w_power(n, 1)


def _divide_by_w(P: Polynomial, n: int) -> Polynomial | None:
    """Exact quotient ``P / (1 - sum_{k<n} s_k^2)``, or None when it does not divide."""
    if not P:
        return P
    shift = _const(n, 1)
    for k in range(1, n):
        lo = P.degree_in(_s(k))[0]
        if lo < 0:
            shift = shift * _var(n, _s(k)) ** (-lo)
    # long division in s_1 by W = -s_1^2 + c
    c = _const(n, 1)
    for k in range(2, n):
        c = c - _var(n, _s(k)) ** 2
    parts = (P * shift).split_by(_s(1))
    quot = Polynomial.zero(P.registry)
    s1 = _var(n, _s(1))
    while parts:
        d = max(parts)
        if d < 2:
            break
        t = parts.pop(d)
        quot = quot - t * s1 ** (d - 2)
        lower = parts.get(d - 2, Polynomial.zero(P.registry)) + t * c
        if lower:
            parts[d - 2] = lower
        else:
            parts.pop(d - 2, None)
    if any(parts.values()):
        return None
    return quot / shift


def reduce_on_shell(P: Polynomial, n: int) -> Polynomial:
    """Canonical representative of ``P`` modulo the sphere constraints.

    ``p_n`` is eliminated, the result is multiplied by ``s_n^(2m)`` to clear
    negative powers of ``s_n``, even powers ``s_n^2`` are replaced by
    ``W = 1 - sum_{k<n} s_k^2``, and the factor ``s_n^(-2m)`` is restored.
    The output is ``s_n^(-2m) (A + s_n B)`` with ``A``, ``B`` free of
    ``s_n`` and ``p_n`` and ``m`` minimal (``W`` does not divide both ``A``
    and ``B`` when ``m > 0``).  Two inputs agree on the constraint surface
    (away from ``s_n = 0``) exactly when their outputs are equal.

    Raises
    ------
    ValueError
        If ``P`` does not live in ``canonical_ring(n)``.
    """
    reg = canonical_ring(n)
    if P.registry != reg:
        raise ValueError("polynomial is not over the canonical ring of this n")
    sn, pn = _s(n), _p(n)
    if pn in P.variables():
        P = P.substitute({pn: _pn_image(n)})
    parts = P.split_by(sn)
    if not parts:
        return P
    m = max(0, -(min(parts) // 2))
    halves = [Polynomial.zero(reg), Polynomial.zero(reg)]
    for e, Q in parts.items():
        q, r = divmod(e + 2 * m, 2)
        halves[r] = halves[r] + Q * _w_power(n, q)
    while m > 0:
        lowered = [_divide_by_w(h, n) for h in halves]
        if any(h is None for h in lowered):
            break
        halves, m = lowered, m - 1
    A, B = halves
    return (A + B * _var(n, sn)) * _var(n, sn) ** (-2 * m)


# the realization -----------------------------------------------------------------


@dataclass(frozen=True)
class RealizationMap:
    """Images of the sl(n) basis variables in :func:`canonical_ring`."""

    n: int
    images: Mapping[str, Polynomial]

    @property
    def registry(self) -> VariableRegistry:
        return canonical_ring(self.n)

    def realize(self, P: Polynomial) -> Polynomial:
        """Apply the realization (a ring map) to an sl(n) polynomial."""
        if P.registry != sl_registry(self.n):
            raise ValueError("polynomial is not over the sl(n) registry")
        return P.substitute(dict(self.images))

    def matrix(self) -> list[list[Polynomial]]:
        """Realized ``Delta_i`` / ``e_ij`` matrix."""
        n = self.n
        return [
            [
                self.realize(delta(n, i)) if i == j else self.images[e_name(i, j)]
                for j in range(1, n + 1)
            ]
            for i in range(1, n + 1)
        ]


@lru_cache(maxsize=None)
def build_realization(n: int) -> RealizationMap:
    """Canonical realization of sl(n) for ``n >= 3``."""
    if n < 3:
        raise ValueError("the sphere realization needs n >= 3")
    img: dict[str, Polynomial] = {}
    s = {k: _var(n, _s(k)) for k in range(1, n + 1)}
    p = {k: _var(n, _p(k)) for k in range(1, n + 1)}
    a = {k: _var(n, _a(k)) for k in range(1, n + 1)}
    for k in range(1, n):
        img[h_name(k)] = (a[k] - a[k + 1]).scale(I)
    for i, j in itertools.combinations(range(1, n + 1), 2):
        L = s[i] * p[j] - s[j] * p[i]
        A = a[i] * s[j] * s[i] ** -1 + a[j] * s[i] * s[j] ** -1
        img[e_name(i, j)] = (L - A.scale(I)).scale(-HALF)
        img[e_name(j, i)] = (-L - A.scale(I)).scale(-HALF)
    missing = set(sl_registry(n).names) - set(img)
    assert not missing, missing
    return RealizationMap(n, img)


@lru_cache(maxsize=None)
def realized_generator(n: int, g: GeneratorId) -> Polynomial:
    return build_realization(n).realize(generator_poly(n, g))


@lru_cache(maxsize=None)
def hamiltonian(n: int) -> Polynomial:
    """``H = 1/2 sum_{i<j} (s_i p_j - s_j p_i)^2 + 1/2 sum_k a_k^2 / s_k^2``."""
    H = Polynomial.zero(canonical_ring(n))
    for i, j in itertools.combinations(range(1, n + 1), 2):
        L = _var(n, _s(i)) * _var(n, _p(j)) - _var(n, _s(j)) * _var(n, _p(i))
        H = H + L * L
    for k in range(1, n + 1):
        H = H + _var(n, _a(k)) ** 2 * _var(n, _s(k)) ** -2
    return H.scale(HALF)


@lru_cache(maxsize=None)
def realized_casimir(n: int, k: int) -> Polynomial:
    """Image of ``c^[k] = Tr(M^k)/k``, computed from the realized matrix."""
    from .sl_model import trace_of_power

    if k < 2:
        raise ValueError("k must be at least 2")
    return trace_of_power(build_realization(n).matrix(), k).scale(Fraction(1, k))


def alpha_sum(n: int) -> Polynomial:
    return sum((_var(n, _a(k)) for k in range(2, n + 1)), _var(n, _a(1)))


def alpha_square_sum(n: int) -> Polynomial:
    return sum((_var(n, _a(k)) ** 2 for k in range(2, n + 1)), _var(n, _a(1)) ** 2)


def cbar_formula(n: int, i: int, j: int) -> Polynomial:
    """``-1/4 ((s_i p_j - s_j p_i)^2 + (s_i^2 + s_j^2)(a_i^2/s_i^2 + a_j^2/s_j^2))``."""
    si, sj, pi, pj = (_var(n, x) for x in (_s(i), _s(j), _p(i), _p(j)))
    ai, aj = _var(n, _a(i)), _var(n, _a(j))
    L = si * pj - sj * pi
    return (L * L + (si**2 + sj**2) * (ai**2 * si**-2 + aj**2 * sj**-2)).scale(Fraction(-1, 4))


# symbol resolution ------------------------------------------------------------------


class PhaseSymbols:
    """Resolve formula symbols to realized phase-space polynomials.

    ``s_k``, ``p_k`` and ``\\alpha_k`` are coordinates; ``H`` is the
    Hamiltonian; ``c``, ``p``, ``f``, ``g`` symbols are realized commutant
    generators (``\\bar c`` via the commutant-side rescaling); ``C``, ``F``
    and ``P`` are the Racah-type quantities.  ``extra`` overrides symbols by
    ``(name, subscript)``.
    """

    def __init__(self, n: int, extra: Mapping[tuple[str, tuple], Polynomial] | None = None):
        self.n = n
        self.registry = canonical_ring(n)
        self.commutant = CommutantSymbols(n)
        self.rmap = build_realization(n)
        self.extra = dict(extra or {})

    def _realize_symbol(self, s: Symbol) -> Polynomial:
        return _realize_symbol_cached(self.n, s)

    def C(self, *sub: int) -> Polynomial:
        n = self.n
        if len(sub) == 1:
            return (_var(n, _a(sub[0])) ** 2).scale(Fraction(-1, 4))
        if len(sub) == 2:
            return self._realize_symbol(Symbol("c", tuple(sub), bar=True))
        if len(sub) == n and sorted(sub) == list(range(1, n + 1)):
            return hamiltonian(n).scale(-HALF)
        raise LatexSyntaxError(f"cannot resolve C_{sub}")

    def P(self, i: int, j: int) -> Polynomial:
        if i == j:
            return self.C(i).scale(2)
        return self.C(i, j) - self.C(i) - self.C(j)

    def __call__(self, s: Symbol) -> Polynomial:
        n, sub = self.n, tuple(s.sub)
        key = (("bar:" if s.bar else "") + s.name + (f"^{s.upper}" if s.upper else ""), sub)
        if key in self.extra:
            return self.extra[key]
        if s.name == "alpha" and len(sub) == 1:
            return _var(n, _a(sub[0]))
        if s.name == "s" and len(sub) == 1:
            return _var(n, _s(sub[0]))
        if s.name == "p" and len(sub) == 1:
            return _var(n, _p(sub[0]))
        if s.name == "H" and not sub:
            return hamiltonian(n)
        if s.name == "C":
            return self.C(*sub)
        if s.name == "P" and len(sub) == 2:
            return self.P(*sub)
        if s.name == "F" and len(sub) == 3:
            return self._realize_symbol(Symbol("f", sub))
        if s.name == "c" and s.upper is not None:
            return realized_casimir(n, s.upper)
        return self._realize_symbol(s)


@lru_cache(maxsize=None)
def _realize_symbol_cached(n: int, s: Symbol) -> Polynomial:
    return build_realization(n).realize(CommutantSymbols(n)(s))


# checks ---------------------------------------------------------------------------


def shell_check(name: str, label: str, lhs: Polynomial, rhs: Polynomial, n: int) -> Check:
    """Compare two phase-space polynomials: identically, then on shell."""
    raw = lhs - rhs
    if not raw:
        return Check(name, label, IDENTICAL, 0, residual=raw)
    red = reduce_on_shell(raw, n)
    if not red:
        return Check(name, label, ON_SHELL, 0, residual=raw)
    text = red.to_text()
    if len(text) > 400:
        text = text[:400] + " ..."
    return Check(name, label, FAIL, len(red), detail=f"on-shell residual: {text}", residual=raw)


def _bracket_fn(n: int) -> Callable[[Polynomial, Polynomial], Polynomial]:
    return lambda a, b: canonical_bracket(a, b, n)


def latex_checks(
    n: int,
    label: str,
    name: str,
    text: str,
    resolve: PhaseSymbols | None = None,
    indices: Mapping[str, int] | None = None,
) -> list[Check]:
    """Evaluate a printed relation ``A = B = ...`` and check each member against the last."""
    resolve = resolve or PhaseSymbols(n)
    tag = name
    if indices:
        tag += " [" + ",".join(f"{k}={v}" for k, v in sorted(indices.items())) + "]"
    try:
        members = [
            evaluate_latex(m, resolve, canonical_ring(n), indices, _bracket_fn(n))
            for m in split_relation(text)
        ]
    except (LatexSyntaxError, ValueError, KeyError) as exc:
        return [Check(tag, label, FAIL, -1, detail=f"could not evaluate: {exc}")]
    if len(members) < 2:
        return [Check(tag, label, FAIL, -1, detail="relation has no equals sign")]
    out = []
    for k, m in enumerate(members[:-1]):
        nm = tag if len(members) == 2 else f"{tag} (member {k + 1})"
        out.append(shell_check(nm, label, m, members[-1], n))
    return out


def _over_assignments(
    n: int, label: str, name: str, text: str, letters: str, distinct: bool = True,
    ordered: bool = False, resolve: PhaseSymbols | None = None,
) -> list[Check]:
    resolve = resolve or PhaseSymbols(n)
    out = []
    it = (
        itertools.combinations(range(1, n + 1), len(letters))
        if ordered
        else itertools.permutations(range(1, n + 1), len(letters))
    )
    for vals in it:
        out.extend(latex_checks(n, label, name, text, resolve, dict(zip(letters, vals))))
    return out


# homomorphism -------------------------------------------------------------------------


def homomorphism_check(n: int, commutant_level: bool | None = None) -> Report:
    """Compare canonical brackets of images with images of Berezin brackets.

    The sl(n) level covers every basis pair ``(x, y)`` with ``x <= y`` in
    basis order.  The commutant level (default for ``n <= 4``) covers every
    pair of p-basis generators.
    """
    if n not in (3, 4, 5):
        raise ValueError("homomorphism_check supports n in {3, 4, 5}")
    if commutant_level is None:
        commutant_level = n <= 4
    rmap = build_realization(n)
    sc = build_sl(n)
    reg = sl_registry(n)
    names = sl_basis(n).generators
    rep = Report(n, "realization homomorphism")
    for a, b in itertools.combinations_with_replacement(range(len(names)), 2):
        x, y = Polynomial.var(reg, names[a]), Polynomial.var(reg, names[b])
        lhs = canonical_bracket(rmap.images[names[a]], rmap.images[names[b]], n)
        rhs = rmap.realize(berezin_bracket(x, y, sc))
        rep.add(shell_check(f"{{{names[a]}, {names[b]}}}", "sl-hom", lhs, rhs, n))
    if commutant_level:
        gens = p_generators(n)
        for g1, g2 in itertools.combinations(gens, 2):
            lhs = canonical_bracket(realized_generator(n, g1), realized_generator(n, g2), n)
            rhs = rmap.realize(berezin_bracket(generator_poly(n, g1), generator_poly(n, g2), sc))
            rep.add(shell_check(f"{{{g1.name}, {g2.name}}}", "commutant-hom", lhs, rhs, n))
    sl_checks = rep.by_label("sl-hom")
    rep.derived["sl_pairs"] = len(sl_checks)
    rep.derived["sl_pairs_distinct"] = len(names) * (len(names) - 1) // 2
    rep.derived["sl_pairs_identical"] = sum(c.status == IDENTICAL for c in sl_checks)
    rep.derived["sl_pairs_on_shell"] = sum(c.status == ON_SHELL for c in sl_checks)
    if commutant_level:
        cc = rep.by_label("commutant-hom")
        rep.derived["commutant_pairs"] = len(cc)
        rep.derived["commutant_pairs_identical"] = sum(c.status == IDENTICAL for c in cc)
        rep.derived["commutant_pairs_on_shell"] = sum(c.status == ON_SHELL for c in cc)
    return rep


# collapse ------------------------------------------------------------------------------


def _alpha_text(n: int) -> str:
    return "(" + "+".join(rf"\alpha_{k}" for k in range(1, n + 1)) + ")"


def _frac_text(q: Fraction) -> str:
    return rf"\frac{{{q.numerator}}}{{{q.denominator}}}"


def _monomials(n: int, degree: int) -> list[tuple[int, ...]]:
    out = []
    for combo in itertools.combinations_with_replacement(range(n), degree):
        e = [0] * n
        for c in combo:
            e[c] += 1
        out.append(tuple(e))
    return out


def rational_shell_point(n: int, rng: random.Random) -> dict[str, Fraction]:
    """Exact rational point on the constraint surface with every ``s_k`` nonzero."""
    while True:
        t = [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(n - 1)]
        r2 = sum(x * x for x in t)
        if any(x == 0 for x in t) or r2 == 1:
            continue
        s = [2 * x / (r2 + 1) for x in t] + [(r2 - 1) / (r2 + 1)]
        q = [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(n)]
        qs = sum(a * b for a, b in zip(q, s))
        p = [a - qs * b for a, b in zip(q, s)]
        pt = {_s(k + 1): s[k] for k in range(n)}
        pt.update({_p(k + 1): p[k] for k in range(n)})
        return pt


def _alpha_terms(n: int, P: Polynomial) -> dict[tuple, Scalar]:
    # coefficients of a polynomial in the a_k alone, keyed by exponent vector
    out = {}
    for mono, c in P.terms():
        e = [0] * n
        for nm, x in mono.exponents:
            if not nm.startswith("a"):
                raise ValueError("expected a polynomial in the parameters only")
            e[int(nm[1:]) - 1] = x
        out[tuple(e)] = c
    return out


def collapse_coefficients(n: int, k: int, points: int = 0, seed: int = 1) -> dict:
    """Fit ``c^[k] = sum_m A_m(alpha) (c^[2])^m`` on shell, exactly.

    ``A_m`` is a homogeneous polynomial of degree ``k - 2m`` in the
    ``alpha``.  Unknown coefficients are determined from exact rational
    points on the constraint surface (with the ``alpha`` kept symbolic).

    Returns
    -------
    dict
        ``{m: Polynomial}`` over :func:`canonical_ring`.
    """
    ring = canonical_ring(n)
    ck, c2 = realized_casimir(n, k), realized_casimir(n, 2)
    unknowns = [(m, mono) for m in range(k // 2 + 1) for mono in _monomials(n, k - 2 * m)]
    rng = random.Random(seed)
    points = points or (k // 2 + 3)
    equations = []
    for _ in range(points):
        pt = rational_shell_point(n, rng)
        target = ck.substitute(pt)
        base = c2.substitute(pt)
        powers = [Polynomial.const(ring, 1)]
        for _ in range(k // 2):
            powers.append(powers[-1] * base)
        rows: dict[tuple, dict] = {}
        for u in unknowns:
            m, mono = u
            t = powers[m]
            for idx, e in enumerate(mono):
                if e:
                    t = t * _var(n, _a(idx + 1)) ** e
            for key, c in _alpha_terms(n, t).items():
                rows.setdefault(key, {})[u] = c
        tkeys = _alpha_terms(n, target)
        for key in sorted(set(rows) | set(tkeys)):
            equations.append((rows.get(key, {}), tkeys.get(key, Scalar(0))))
    sol = solve_sparse(equations)
    out: dict[int, Polynomial] = {}
    for m in range(k // 2 + 1):
        acc = Polynomial.zero(ring)
        for mono in _monomials(n, k - 2 * m):
            c = sol.get((m, mono))
            if c:
                t = Polynomial.const(ring, c)
                for idx, e in enumerate(mono):
                    if e:
                        t = t * _var(n, _a(idx + 1)) ** e
                acc = acc + t
        out[m] = acc
    return out


def _in_alpha_sum(n: int, A: Polynomial, d: int) -> str:
    # "lambda * S^d" when A is a multiple of (sum a_k)^d, else the full text
    if not A:
        return "0"
    if d == 0:
        return str(A.constant_value())
    lam = A.coefficient({_a(1): d})
    if lam and A == (alpha_sum(n) ** d).scale(lam):
        return f"{lam} * S^{d}" if d > 1 else f"{lam} * S"
    return A.to_text()


def collapse_report(n: int) -> Report:
    """Casimir, ``g``/``f`` and ``c_ij`` collapse identities of the realization.

    For ``n = 5`` the coefficients of ``c^[k]`` in powers of ``c^[2]`` are
    fitted and stored in ``derived``, with ``S`` the sum of the ``alpha``.
    """
    if n not in (3, 4, 5):
        raise ValueError("collapse_report supports n in {3, 4, 5}")
    res = PhaseSymbols(n)
    rep = Report(n, "collapse identities")
    S = _alpha_text(n)
    general = Fraction(n - 2, n)
    rep.extend(latex_checks(
        n, "c2-H general", f"2c^[2] + H + ((n-2)/n) S^2 = 0 as printed",
        rf"2c^{{[2]}}+ H+{_frac_text(general)}{S}^2=0", res,
    ))
    rep.extend(latex_checks(
        n, "c2-H general", f"2c^[2] + H + ((n-2)/(2n)) S^2 = 0 (recomputed coefficient)",
        rf"2c^{{[2]}}+ H+{_frac_text(Fraction(n - 2, 2 * n))}{S}^2=0", res,
    ))
    if n == 3:
        for nm, text in tables.REAL3_COLLAPSE:
            rep.extend(latex_checks(3, *nm.rsplit(":", 1), text, res))
        for i, j in itertools.combinations(range(1, 4), 2):
            rep.extend(latex_checks(3, "commut", "c_ij", tables.COMMUT, res, dict(i=i, j=j)))
    elif n == 4:
        for nm, text in tables.REAL4_COLLAPSE:
            rep.extend(latex_checks(4, *nm.rsplit(":", 1), text, res))
        for i, j in itertools.combinations(range(1, 5), 2):
            rep.extend(latex_checks(4, "commuta", "c_ij", tables.COMMUT, res, dict(i=i, j=j)))
        for nm, text in tables.COLLAPSES:
            rep.extend(_over_assignments(4, "collapses", nm, text, "ijkl", resolve=res))
    else:
        for i, j in itertools.combinations(range(1, n + 1), 2):
            rep.extend(latex_checks(n, "commuta", "c_ij", tables.COMMUT, res, dict(i=i, j=j)))
        c2 = realized_casimir(n, 2)
        for k in range(3, n + 1):
            coeffs = collapse_coefficients(n, k)
            rhs = Polynomial.zero(canonical_ring(n))
            for m, A in coeffs.items():
                rhs = rhs + A * c2**m
            rep.add(shell_check(f"c^[{k}] = sum_m A_m(alpha) (c^[2])^m", "collapse-fit",
                                realized_casimir(n, k), rhs, n))
            rep.derived[f"c^[{k}]"] = {
                f"(c^[2])^{m}": _in_alpha_sum(n, A, k - 2 * m) for m, A in coeffs.items()
            }
    return rep


# Racah algebras ---------------------------------------------------------------------------


def omega_polys(printed: bool = True) -> tuple[Polynomial, Polynomial, Polynomial]:
    """``Omega_1..3`` of the n=3 Casimir collapse: as printed, or with recomputed signs."""
    res = PhaseSymbols(3)
    reg = canonical_ring(3)
    om = [evaluate_latex(t, res, reg) for t in tables.OMEGA_PRINTED]
    if printed:
        return tuple(om)
    return om[0], -om[1], -om[2]


def _cask_K() -> Polynomial:
    res = CommutantSymbols(3)
    rhs = split_relation(tables.CASK[0][1])[-1]
    return build_realization(3).realize(evaluate_latex(rhs, res, res.registry))


def racah_check(n: int) -> Report:
    """Racah-algebra relations of the realization (R(3) for n=3, R(4) for n=4).

    For ``n = 5`` only the general linear dependence and the Hamiltonian in
    terms of ``P`` are checked.
    """
    if n not in (3, 4, 5):
        raise ValueError("racah_check supports n in {3, 4, 5}")
    res = PhaseSymbols(n)
    rep = Report(n, "Racah relations")
    for i, j in itertools.combinations(range(1, n + 1), 2):
        rep.add(shell_check(f"rescaled c_{i}{j} equals the phase-space formula", "commutbij",
                            res(Symbol("c", (i, j), bar=True)), cbar_formula(n, i, j), n))
    # linear relation H/2 + sum cbar + ((n-2)/4) sum a^2 = 0
    total = hamiltonian(n).scale(HALF) + alpha_square_sum(n).scale(Fraction(n - 2, 4))
    for i, j in itertools.combinations(range(1, n + 1), 2):
        total = total + res(Symbol("c", (i, j), bar=True))
    rep.add(shell_check("H/2 + sum cbar_ij + ((n-2)/4) sum alpha^2 = 0", "lineq-general",
                        total, Polynomial.zero(canonical_ring(n)), n))
    rep.derived["linear_dependence"] = {"H": "1/2", "cbar_ij": "1", "sum alpha^2": str(Fraction(n - 2, 4))}
    ham = "H=-2(" + "+".join(f"P_{{{i}{j}}}" for i, j in itertools.combinations(range(1, n + 1), 2)) + ")-(" \
        + "+".join(f"P_{{{i}{i}}}" for i in range(1, n + 1)) + ")"
    rep.extend(latex_checks(n, {3: "Ham", 4: "eq:Ham"}.get(n, "eq:HamN"), "H in terms of P", ham, res))
    if n == 3:
        for nm, text in tables.REAL3_RACAH:
            rep.extend(latex_checks(3, *nm.rsplit(":", 1), text, res))
        for nm, text in tables.ANTS:
            rep.extend(_over_assignments(3, "eq:ants", nm, text, "ijk", resolve=res))
        K = _cask_K()
        H = hamiltonian(3)
        for tag, printed in (("as printed", True), ("recomputed signs of Omega_2, Omega_3", False)):
            o1, o2, o3 = omega_polys(printed)
            rep.add(shell_check(f"K = Omega_1 H^2 + Omega_2 H + Omega_3 ({tag})", "EQ",
                                K, o1 * H * H + o2 * H + o3, 3))
    elif n == 4:
        for nm, text in tables.REAL4_RACAH:
            rep.extend(latex_checks(4, *nm.rsplit(":", 1), text, res))
        for i, j, k in itertools.combinations(range(1, 5), 3):
            rep.extend(latex_checks(4, "fijk4r", "f_ijk", tables.FIJK4R, res, dict(i=i, j=j, k=k)))
        for nm, text in tables.R4:
            rep.extend(_over_assignments(4, "R(4)", nm, text, "ijkl", resolve=res))
    return rep


def realize_report(n: int) -> Report:
    """Homomorphism, collapse and Racah reports merged (the ``realize`` verb)."""
    rep = Report(n, "realization")
    rep.merge(homomorphism_check(n))
    rep.merge(collapse_report(n))
    rep.merge(racah_check(n))
    return rep


# float cross-check ---------------------------------------------------------------------------


def sample_shell_points(n: int, count: int = 20, seed: int = 0, min_abs: float = 0.2) -> list[dict]:
    """Points with ``s`` uniform on the sphere (``|s_k| >= min_abs``), ``p`` tangent, ``a`` in [-1, 1]."""
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < count:
        s = rng.normal(size=n)
        s /= np.linalg.norm(s)
        if np.min(np.abs(s)) < min_abs:
            continue
        p = rng.normal(size=n)
        p -= np.dot(p, s) * s
        a = rng.uniform(-1.0, 1.0, size=n)
        pt = {_s(k + 1): s[k] for k in range(n)}
        pt.update({_p(k + 1): p[k] for k in range(n)})
        pt.update({_a(k + 1): a[k] for k in range(n)})
        out.append(pt)
    return out


def float_crosscheck(report: Report, count: int = 20, seed: int = 0, tol: float = 1e-9) -> Report:
    """Evaluate the raw residual of every passing check at sampled shell points."""
    n = report.n
    pts = sample_shell_points(n, count, seed)
    out = Report(n, "float cross-check")
    worst_all = 0.0
    for c in report.checks:
        if not c.passed or c.residual is None:
            continue
        if not c.residual:
            worst = 0.0
        else:
            f = c.residual.numeric()
            worst = max(abs(f(pt)) for pt in pts)
        worst_all = max(worst_all, worst)
        status = c.status if worst < tol else FAIL
        out.add(Check(c.name, c.label, status, 0 if worst < tol else 1,
                      detail=f"max |residual| = {worst:.3e}"))
    out.derived["max_abs_residual"] = float(worst_all)
    return out
