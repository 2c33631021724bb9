"""The polynomial algebra generated by the commutant under the Berezin bracket.

Two generator sets are supported:

``p``
    Cartan generators ``h_l`` and all cycle monomials.
``cfg``
    ``c_i`` (the diagonal entries ``Delta_i``, central), ``c_ij = p_ij`` and,
    for every pair {cycle, reversed cycle} of length >= 3 with
    lexicographically smaller member ``L``,
    ``f_L = (p_rev(L) - p_L)/2`` and ``g_L = (p_rev(L) + p_L)/2``.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from .commutant import cycle_poly, enumerate_basis, normal_form
from .exact_poly import Polynomial, Scalar
from .generators import CycleMonomial, GeneratorId, NormalFormExpr, canonical_cycle
from .latex_expr import Symbol, evaluate_latex, split_relation, LatexSyntaxError
from .lie_poisson import berezin_bracket
from .report import FAIL, IDENTICAL, Check, Report
from .sl_model import build_sl, delta, h_name, sl_registry, trace_casimir

__all__ = [
    "BracketTable",
    "CommutantSymbols",
    "generator_poly",
    "reverse_cycle",
    "cfg_generators",
    "p_generators",
    "to_cfg",
    "bracket",
    "structure_table",
    "algebra_order",
    "filtration_check",
    "jacobi_check",
    "check_relation",
    "verify_identities",
    "casimir_K",
    "FAMILIES",
    "default_threads",
]


def default_threads() -> int:
    """Worker count from ``CARTAN_COMMUTANT_THREADS`` (default 1)."""
    try:
        return max(1, int(os.environ.get("CARTAN_COMMUTANT_THREADS", "1")))
    except ValueError:
        return 1


def reverse_cycle(indices: Sequence[int]) -> tuple[int, ...]:
    """``(i1, i2, ..., id) -> (i1, id, ..., i2)``."""
    idx = tuple(indices)
    return (idx[0],) + tuple(reversed(idx[1:]))


def _check_indices(n: int, idx: Sequence[int]) -> None:
    if any(not 1 <= i <= n for i in idx):
        raise ValueError(f"index out of range for n={n}: {tuple(idx)}")
    if len(set(idx)) != len(idx):
        raise ValueError(f"repeated index {tuple(idx)}")


@lru_cache(maxsize=None)
def generator_poly(n: int, g: GeneratorId) -> Polynomial:
    """Expanded polynomial of a generator in the sl(n) variables."""
    reg = sl_registry(n)
    k = g.kind
    if k == "h":
        if not 1 <= g.indices[0] < n:
            raise ValueError(f"h{g.indices[0]} does not exist for n={n}")
        return Polynomial.var(reg, h_name(g.indices[0]))
    _check_indices(n, g.indices)
    if k == "c":
        return delta(n, g.indices[0])
    if k in ("p", "cc"):
        return cycle_poly(n, canonical_cycle(g.indices))
    if len(g.indices) < 3:
        raise ValueError("f and g need at least three indices")
    fwd = cycle_poly(n, canonical_cycle(g.indices))
    rev = cycle_poly(n, canonical_cycle(reverse_cycle(g.indices)))
    half = Fraction(1, 2)
    return (rev - fwd).scale(half) if k == "f" else (rev + fwd).scale(half)


def p_generators(n: int) -> list[GeneratorId]:
    return enumerate_basis(n).generators()


def cfg_generators(n: int) -> list[GeneratorId]:
    """``c_1..c_n``, ``c_ij``, then ``f_L, g_L`` per reversal class, by length."""
    out = [GeneratorId.derived_c(i) for i in range(1, n + 1)]
    out += [GeneratorId.derived_cij(i, j) for i, j in itertools.combinations(range(1, n + 1), 2)]
    reps = []
    for c in enumerate_basis(n).cycles:
        if c.order < 3:
            continue
        rev = canonical_cycle(reverse_cycle(c.indices)).indices
        if c.indices < rev:
            reps.append(c.indices)
    for L in reps:
        out.append(GeneratorId.derived_f(*L))
        out.append(GeneratorId.derived_g(*L))
    return out


def _cfg_rule(g: GeneratorId) -> NormalFormExpr | None:
    if g.kind == "h":
        l = g.indices[0]
        return NormalFormExpr.generator(GeneratorId.derived_c(l)) - NormalFormExpr.generator(
            GeneratorId.derived_c(l + 1)
        )
    if g.kind != "p":
        return None
    if len(g.indices) == 2:
        return NormalFormExpr.generator(GeneratorId.derived_cij(*g.indices))
    rev = canonical_cycle(reverse_cycle(g.indices)).indices
    lead = min(g.indices, rev)
    f = NormalFormExpr.generator(GeneratorId.derived_f(*lead))
    gg = NormalFormExpr.generator(GeneratorId.derived_g(*lead))
    # p_L = g - f, p_rev(L) = g + f
    return gg - f if g.indices == lead else gg + f


def to_cfg(expr: NormalFormExpr) -> NormalFormExpr:
    """Rewrite a p-basis normal form in the c/f/g generators (linear change of basis)."""
    return expr.substitute(_cfg_rule)


def bracket(n: int, g1: GeneratorId, g2: GeneratorId, basis_kind: str = "p") -> NormalFormExpr:
    """``{g1, g2}`` as a normal form in the requested generators."""
    sc = build_sl(n)
    raw = berezin_bracket(generator_poly(n, g1), generator_poly(n, g2), sc)
    nf = normal_form(raw, n)
    return to_cfg(nf) if basis_kind == "cfg" else nf


def _generators(n: int, basis_kind: str) -> list[GeneratorId]:
    if basis_kind == "p":
        return p_generators(n)
    if basis_kind == "cfg":
        return cfg_generators(n)
    raise ValueError(f"unknown basis kind {basis_kind!r}")


@dataclass
class BracketTable:
    """All brackets between generators of one basis kind.

    ``entries`` holds every unordered pair ``(a, b)`` with ``a`` before ``b``
    in generator order, zero brackets included.
    """

    n: int
    basis_kind: str
    generators: list[GeneratorId]
    entries: dict[tuple[GeneratorId, GeneratorId], NormalFormExpr] = field(default_factory=dict)

    def get(self, a: GeneratorId, b: GeneratorId) -> NormalFormExpr:
        if a == b:
            return NormalFormExpr()
        if (a, b) in self.entries:
            return self.entries[(a, b)]
        return -self.entries[(b, a)]

    def nontrivial(self) -> list[tuple[GeneratorId, GeneratorId, NormalFormExpr]]:
        return [(a, b, e) for (a, b), e in self.entries.items() if e]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "basis": self.basis_kind,
            "pairs_computed": len(self.entries),
            "entries": [
                {"lhs": [a.name, b.name], "rhs": e.to_text(), "terms": e.to_json()}
                for a, b, e in self.nontrivial()
            ],
        }

    def to_text(self) -> str:
        lines = [f"{self.basis_kind}-basis table for n={self.n}: {len(self.generators)} generators"]
        for a, b, e in self.nontrivial():
            lines.append(f"{{{a.name}, {b.name}}} = {e.to_text()}")
        if len(lines) == 1:
            lines.append("(all brackets vanish)")
        return "\n".join(lines)


def _pair_worker(args):
    n, kind, a, b = args
    return (a, b), bracket(n, a, b, kind)


def structure_table(
    n: int,
    basis_kind: str = "p",
    threads: int | None = None,
    progress: Callable[[int, int], None] | None = None,
) -> BracketTable:
    """Compute every bracket between generators.

    Parameters
    ----------
    n : int
    basis_kind : {"p", "cfg"}
    threads : int, optional
        Worker processes; output order never depends on it.
    progress : callable, optional
        Called as ``progress(done, total)``.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    gens = _generators(n, basis_kind)
    pairs = [(n, basis_kind, a, b) for a, b in itertools.combinations(gens, 2)]
    threads = threads or default_threads()
    table = BracketTable(n, basis_kind, gens)
    results: dict = {}
    if threads > 1 and len(pairs) > 8:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            for k, (key, val) in enumerate(pool.map(_pair_worker, pairs, chunksize=8), 1):
                results[key] = val
                if progress:
                    progress(k, len(pairs))
    else:
        for k, p in enumerate(pairs, 1):
            key, val = _pair_worker(p)
            results[key] = val
            if progress:
                progress(k, len(pairs))
    for _, _, a, b in pairs:
        table.entries[(a, b)] = results[(a, b)]
    central = [g for g in gens if g.central]
    for (a, b), e in table.entries.items():
        if (a in central or b in central) and e:
            raise AssertionError(f"central generator fails to commute: {{{a}, {b}}}")
    return table


def algebra_order(table: BracketTable) -> int:
    """Largest number of non-central generator factors in any right-hand side."""
    return max((e.degree() for e in table.entries.values()), default=0)


def filtration_check(n: int) -> Report:
    """Brackets of A_{n-1} generators are unchanged when computed inside sl(n)."""
    rep = Report(n, f"filtration A_{n - 1} in A_{n}")
    small = p_generators(n - 1)
    for a, b in itertools.combinations(small, 2):
        lo = bracket(n - 1, a, b)
        hi = bracket(n, a, b)
        ok = lo == hi
        rep.add(
            Check(
                f"{{{a.name}, {b.name}}}",
                "filtration",
                IDENTICAL if ok else FAIL,
                0 if ok else len((lo - hi).terms),
                "" if ok else f"n-1: {lo.to_text()}\nn:   {hi.to_text()}",
            )
        )
    return rep


def jacobi_check(n: int, triples: Iterable[tuple[GeneratorId, GeneratorId, GeneratorId]]) -> list[tuple]:
    """Return the triples whose Jacobiator is nonzero (raw polynomial level)."""
    sc = build_sl(n)
    br = lambda x, y: berezin_bracket(x, y, sc)  # noqa: E731
    bad = []
    for a, b, c in triples:
        P, Q, R = (generator_poly(n, g) for g in (a, b, c))
        j = br(P, br(Q, R)) + br(Q, br(R, P)) + br(R, br(P, Q))
        if j:
            bad.append((a, b, c))
    return bad


# symbol resolution for printed formulas -----------------------------------------


class CommutantSymbols:
    """Resolve formula symbols to sl(n) polynomials.

    ``h_l``; ``c_i`` (Delta_i); ``c_ij`` (p_ij); ``c^[k]`` (trace Casimir);
    ``\\bar c_i = c_i/2``; ``\\bar c_ij = c_ij + (c_i - c_j)^2/4``;
    ``p_{...}``, ``f_{...}``, ``g_{...}`` for any index order.
    """

    def __init__(self, n: int):
        self.n = n
        self.registry = sl_registry(n)

    def gen(self, kind: str, *idx: int) -> Polynomial:
        return generator_poly(self.n, GeneratorId(kind, tuple(idx)))

    def __call__(self, s: Symbol) -> Polynomial:
        n, sub = self.n, tuple(s.sub)
        if s.upper is not None:
            if s.name != "c":
                raise LatexSyntaxError(f"unknown symbol {s}")
            return trace_casimir(n, s.upper)
        if s.name == "h" and len(sub) == 1:
            return self.gen("h", *sub)
        if s.name == "c":
            if len(sub) == 1:
                base = self.gen("c", *sub)
                return base.scale(Fraction(1, 2)) if s.bar else base
            if len(sub) == 2:
                base = self.gen("p", *sub)
                if s.bar:
                    d = self.gen("c", sub[0]) - self.gen("c", sub[1])
                    base = base + (d * d).scale(Fraction(1, 4))
                return base
        if s.name in ("p", "f", "g") and len(sub) >= 2 and not s.bar:
            return self.gen(s.name, *sub)
        raise LatexSyntaxError(f"cannot resolve symbol {s}")


def check_relation(
    text: str,
    resolve: Callable[[Symbol], Polynomial],
    registry,
    bracket_fn: Callable[[Polynomial, Polynomial], Polynomial],
    indices: dict | None = None,
    reduce: Callable[[Polynomial], Polynomial] | None = None,
) -> tuple[str, int, list[Polynomial], list[Polynomial]]:
    """Evaluate every member of ``A = B = ...`` and compare each with the last.

    Returns ``(status, residual_terms, members, residuals)``; with ``reduce``
    given, nonzero raw residuals that reduce to zero count as on-shell.
    """
    members = [
        evaluate_latex(m, resolve, registry, indices, bracket_fn) for m in split_relation(text)
    ]
    if len(members) < 2:
        raise LatexSyntaxError("relation has no equals sign")
    last = members[-1]
    residuals = [m - last for m in members[:-1]]
    status, worst = IDENTICAL, 0
    for r in residuals:
        if not r:
            continue
        red = reduce(r) if reduce else r
        if red:
            status = FAIL
            worst = max(worst, len(red))
        elif status == IDENTICAL:
            status = "on_shell"
    return status, worst, members, residuals


def _sl_bracket(n: int):
    sc = build_sl(n)
    return lambda a, b: berezin_bracket(a, b, sc)


def _describe(n: int, members: list[Polynomial], basis_kind: str) -> str:
    out = []
    for label, m in zip(("lhs", "rhs"), (members[0], members[-1])):
        try:
            nf = normal_form(m, n)
            out.append(f"{label}: {(to_cfg(nf) if basis_kind == 'cfg' else nf).to_text()}")
        except ValueError:
            out.append(f"{label}: {m.to_text()}")
    return "\n".join(out)


def verify_text(
    n: int,
    label: str,
    name: str,
    text: str,
    indices: dict | None = None,
    basis_kind: str = "cfg",
) -> Check:
    """Check one printed relation in the commutant of sl(n)."""
    res = CommutantSymbols(n)
    try:
        status, worst, members, residuals = check_relation(
            text, res, res.registry, _sl_bracket(n), indices
        )
    except LatexSyntaxError as exc:
        return Check(name, label, FAIL, -1, f"printed text does not parse: {exc}")
    detail = "" if status != FAIL else _describe(n, members, basis_kind)
    resid = next((r for r in residuals if r), None)
    return Check(name, label, status, worst, detail, resid)


# identity families -----------------------------------------------------------


def _perms(n: int, k: int):
    return itertools.permutations(range(1, n + 1), k)


def _poly_check(name: str, label: str, lhs: Polynomial, rhs: Polynomial) -> Check:
    r = lhs - rhs
    return Check(name, label, IDENTICAL if not r else FAIL, len(r), "", r or None)


def _family_alde1(n: int) -> Report:
    rep = Report(n, "alde1")
    P = lambda *i: generator_poly(n, GeneratorId.cycle(*i))  # noqa: E731
    for i, j, k in itertools.combinations(range(1, n + 1), 3):
        rep.add(
            _poly_check(
                f"p({i},{j})p({i},{k})p({j},{k}) = p({i},{j},{k})p({i},{k},{j})",
                "alde1",
                P(i, j) * P(i, k) * P(j, k),
                P(i, j, k) * P(i, k, j),
            )
        )
    return rep


def _prod(polys: Iterable[Polynomial], reg) -> Polynomial:
    out = Polynomial.const(reg, 1)
    for p in polys:
        out = out * p
    return out


def _family_rela1(n: int) -> Report:
    """Transposition chain, full product (as printed and with the wrap pair removed),
    and the power identity over all distinct k-cycles."""
    rep = Report(n, "rela1")
    reg = sl_registry(n)
    P = lambda *i: generator_poly(n, GeneratorId.cycle(*i))  # noqa: E731
    for k in range(3, n + 1):
        for cyc in (c for c in enumerate_basis(n).cycles if c.order == k):
            idx = cyc.indices
            chain = _prod((P(idx[u], idx[u + 1]) for u in range(k - 1)), reg) * P(idx[-1], idx[0])
            rep.add(
                _poly_check(
                    f"chain {cyc}", "rela1:chain", chain, P(*idx) * P(*reverse_cycle(idx))
                )
            )
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    full = _prod((P(i, j) for i, j in pairs), reg)
    nonadj = _prod((P(m, s) for m in range(1, n - 1) for s in range(m + 2, n + 1)), reg)
    printed_tail = tuple([1] + list(range(n - 1, 1, -1)))
    printed = P(*range(1, n + 1)) * P(*printed_tail) * nonadj
    rep.add(_poly_check("full product, as printed", "rela1:product", full, printed))
    corrected_tail = reverse_cycle(tuple(range(1, n + 1)))
    trimmed = _prod(
        (P(m, s) for m in range(1, n - 1) for s in range(m + 2, n + 1) if (m, s) != (1, n)), reg
    )
    rep.add(
        _poly_check(
            "full product, n-cycle pair with p(1,n) removed from the tail",
            "rela1:product-corrected",
            full,
            P(*range(1, n + 1)) * P(*corrected_tail) * trimmed,
        )
    )
    for k in range(3, n + 1):
        phi = 1
        for s in range(2, k):
            phi *= n - s
        lhs = _prod((cycle_poly(n, c) for c in enumerate_basis(n).cycles if c.order == k), reg)
        rep.add(_poly_check(f"power identity k={k}, phi={phi}", "rela1:power", lhs, full**phi))
    return rep


def _family_funrel(n: int) -> Report:
    rep = Report(n, "funrel")
    for i, j, k in itertools.combinations(range(1, n + 1), 3):
        rep.add(
            verify_text(
                n,
                "funrel",
                f"(i,j,k)=({i},{j},{k})",
                r"g_{ijk}^2-f_{ijk}^2-c_{ij}c_{jk}c_{ik} = 0",
                {"i": i, "j": j, "k": k},
            )
        )
    return rep


_ADDREL3 = r"f_{ijk} f_{kji}+g_{ijk} g_{kji}=c_{ij} c_{jk} c_{ki}"
_ADDREL4 = r"f_{ijkl} f_{lkji}+g_{ijkl} g_{lkji}=c_{ij} c_{jk} c_{kl} c_{li}"


def _family_addrel(n: int) -> Report:
    rep = Report(n, "addrel")
    for i, j, k in _perms(n, 3):
        rep.add(verify_text(n, "addrel", f"(i,j,k)=({i},{j},{k})", _ADDREL3, dict(i=i, j=j, k=k)))
    return rep


def _family_addrels(n: int) -> Report:
    rep = Report(n, "addrels")
    for i, j, k in _perms(n, 3):
        rep.add(verify_text(n, "addrels:3", f"(i,j,k)=({i},{j},{k})", _ADDREL3, dict(i=i, j=j, k=k)))
    for i, j, k, l in _perms(n, 4):
        rep.add(
            verify_text(
                n, "addrels:4", f"(i,j,k,l)=({i},{j},{k},{l})", _ADDREL4, dict(i=i, j=j, k=k, l=l)
            )
        )
    return rep


def _family_c2c3(n: int) -> Report:
    from . import tables

    rep = Report(n, "c2c3")
    for name, text in tables.C2C3:
        rep.add(verify_text(n, name, name, text))
    return rep


def _family_eq1equ1(n: int) -> Report:
    from . import tables

    rep = Report(n, "eq1equ1")
    for name, text in tables.EQ1_EQU1 + tables.REL1 + tables.CASK:
        rep.add(verify_text(n, name.split(":")[0], name, text))
    return rep


FAMILIES: dict[str, tuple[Callable[[int], Report], Callable[[int], bool]]] = {
    "alde1": (_family_alde1, lambda n: n >= 3),
    "rela1": (_family_rela1, lambda n: n >= 3),
    "funrel": (_family_funrel, lambda n: n >= 3),
    "addrel": (_family_addrel, lambda n: n >= 3),
    "addrels": (_family_addrels, lambda n: n >= 4),
    "c2c3": (_family_c2c3, lambda n: n == 3),
    "eq1equ1": (_family_eq1equ1, lambda n: n == 3),
}


def verify_identities(n: int, family: str) -> Report:
    """Expand every identity of a family to sl(n) polynomials and test it exactly.

    Raises
    ------
    ValueError
        If the family is unknown or does not apply to ``n``.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown identity family {family!r}")
    fn, ok = FAMILIES[family]
    if not ok(n):
        raise ValueError(f"family {family!r} does not apply to n={n}")
    return fn(n)


# quadratic-algebra Casimir ---------------------------------------------------------

_K_TEXT = (
    r"f_{ijk}f_{jki} +c_{ij}c_{jk}c_{ki}-(c_i c_{jk}+c_j c_{ik}+c_k c_{ij})"
    r"\left(g_{ijk}-\frac{1}{4}(c_i c_{jk}+c_j c_{ik}+c_k c_{ij})\right)"
)


def casimir_K(n: int = 3, indices: tuple[int, int, int] = (1, 2, 3)) -> tuple[Polynomial, Report]:
    """Casimir ``K_ijk`` of the n=3 quadratic algebra with its verification report."""
    if n != 3:
        raise ValueError("the quadratic-algebra Casimir is defined for n=3")
    if sorted(indices) != [1, 2, 3]:
        raise ValueError("indices must be a permutation of (1, 2, 3)")
    res = CommutantSymbols(3)
    reg = res.registry
    i, j, k = indices
    K = lambda a, b, c: evaluate_latex(_K_TEXT, res, reg, dict(i=a, j=b, k=c))  # noqa: E731
    Kp = K(i, j, k)
    rep = Report(3, f"Casimir K_{i}{j}{k}")
    sc = build_sl(3)
    for g in p_generators(3):
        r = berezin_bracket(Kp, generator_poly(3, g), sc)
        rep.add(Check(f"{{K, {g.name}}} = 0", "cas", IDENTICAL if not r else FAIL, len(r)))
    ci = lambda a: res.gen("c", a)  # noqa: E731
    target = (trace_casimir(3, 3) - ci(i) * ci(j) * ci(k)) ** 2
    rep.add(_poly_check("K = (c^[3] - c_i c_j c_k)^2 / 4", "casc", Kp, target.scale(Fraction(1, 4))))
    rep.add(_poly_check("K_ijk = K_jik", "casim", Kp, K(j, i, k)))
    rep.add(_poly_check("K_ijk = K_jki", "casim", Kp, K(j, k, i)))
    return Kp, rep


# printed reference listings ----------------------------------------------------


def compare_listing(
    n: int,
    entries: Sequence[tuple[str, str]],
    label: str,
    basis_kind: str,
    index_letters: str = "",
) -> Report:
    """Check printed relations, over all index assignments when letters are free.

    A relation with free index letters passes only when every assignment of
    distinct values passes; the detail of a failure shows the first failing
    assignment with both sides in normal form.
    """
    rep = Report(n, label)
    for name, text in entries:
        if not index_letters:
            rep.add(verify_text(n, label, name, text, None, basis_kind))
            continue
        results = []
        for vals in _perms(n, len(index_letters)):
            idx = dict(zip(index_letters, vals))
            results.append((vals, verify_text(n, label, name, text, idx, basis_kind)))
        bad = [(v, c) for v, c in results if not c.passed]
        if not bad:
            rep.add(Check(name, label, IDENTICAL, 0, f"{len(results)} assignments"))
        else:
            v, c = bad[0]
            detail = (
                f"{len(results) - len(bad)}/{len(results)} assignments hold; "
                f"first failure at {index_letters}={v}\n{c.detail}"
            )
            rep.add(Check(name, label, FAIL, c.residual_terms, detail, c.residual))
    return rep
