"""The commutant of the Cartan subalgebra in S(sl(n)).

Weight-zero monomials in the root variables ``e_{j,k}`` are read as directed
multigraphs (one edge ``j -> k`` per factor).  Weight zero is the same as
every vertex being balanced, and balanced multigraphs split into directed
cycles, which gives the basis of cycle monomials ``p_{i1..id}``.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

from .exact_poly import Monomial, Polynomial, Scalar
from .generators import CycleMonomial, GeneratorId, NormalFormExpr, canonical_cycle
from .lie_poisson import commutes_with, random_rational_point
from .linalg import exact_rank
from .sl_model import build_sl, e_name, h_name, sl_basis, sl_registry

__all__ = [
    "CommutantBasis",
    "NotInCommutantError",
    "nu",
    "linear_dimension",
    "canonical_cycle",
    "enumerate_basis",
    "cycle_poly",
    "factor_cycles",
    "normal_form",
    "independence_check",
    "jacobian_rank",
    "designated_independent_set",
    "weight_zero_monomials",
    "is_decomposable",
    "lowering_count",
]


class NotInCommutantError(ValueError):
    """Raised when a polynomial has a term of nonzero weight."""


def nu(n: int, d: int) -> int:
    """Number of d-cycles on n points, ``n! / (d (n-d)!)``."""
    if d < 2:
        raise ValueError("cycle length must be at least 2")
    if d > n:
        raise ValueError(f"no {d}-cycles exist on {n} points")
    return math.perm(n, d) // d


def linear_dimension(n: int) -> int:
    """Size of the cycle basis including the Cartan generators."""
    if n < 2:
        raise ValueError("n must be at least 2")
    return (n - 1) + sum(nu(n, d) for d in range(2, n + 1))


@dataclass(frozen=True)
class CommutantBasis:
    """Cartan generators followed by all cycles sorted by (length, indices)."""

    n: int
    cartan: tuple[str, ...]
    cycles: tuple[CycleMonomial, ...]

    @property
    def size(self) -> int:
        return len(self.cartan) + len(self.cycles)

    def generators(self) -> list[GeneratorId]:
        return [GeneratorId.cartan(l) for l in range(1, self.n)] + [
            GeneratorId("p", c.indices) for c in self.cycles
        ]

    def breakdown(self) -> dict[int, int]:
        """Counts per degree; degree 1 holds the Cartan generators."""
        out = {1: len(self.cartan)}
        for c in self.cycles:
            out[c.order] = out.get(c.order, 0) + 1
        return out

    def to_json(self) -> dict:
        gens = [{"kind": "h", "index": l} for l in range(1, self.n)]
        gens += [{"kind": "cycle", "indices": list(c.indices)} for c in self.cycles]
        return {"n": self.n, "generators": gens}


def _all_cycles(n: int) -> list[CycleMonomial]:
    out = []
    for d in range(2, n + 1):
        for subset in itertools.combinations(range(1, n + 1), d):
            first, rest = subset[0], subset[1:]
            for perm in itertools.permutations(rest):
                out.append(CycleMonomial((first,) + perm))
    out.sort(key=CycleMonomial.sort_key)
    return out


@lru_cache(maxsize=None)
def cycle_poly(n: int, cycle: CycleMonomial) -> Polynomial:
    """Expanded ``p_{i1..id}`` in the sl(n) registry."""
    if max(cycle.indices) > n:
        raise ValueError(f"cycle {cycle} does not fit in sl({n})")
    reg = sl_registry(n)
    exps: Counter = Counter(e_name(a, b) for a, b in cycle.edges())
    return Polynomial.from_terms(reg, [(dict(exps), 1)])


def enumerate_basis(n: int, verify: bool = False) -> CommutantBasis:
    """Cycle-monomial basis of the commutant.

    Parameters
    ----------
    n : int
        Rank plus one.
    verify : bool
        Also check every cycle against the Cartan generators with the
        Berezin bracket (slow for n >= 6).
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    cycles = tuple(_all_cycles(n))
    basis = CommutantBasis(n, tuple(h_name(l) for l in range(1, n)), cycles)
    if verify:
        sc = build_sl(n)
        cartan = list(range(n - 1))
        for c in cycles:
            if not commutes_with(cycle_poly(n, c), cartan, sc):
                raise AssertionError(f"{c} does not commute with the Cartan subalgebra")
    return basis


def _edges_of(m: Monomial | Mapping[str, int]) -> Counter:
    exps = m.as_dict() if isinstance(m, Monomial) else dict(m)
    edges: Counter = Counter()
    for name, e in exps.items():
        if not name.startswith("e"):
            raise ValueError(f"{name} is not a root variable")
        if e < 0:
            raise ValueError("negative exponent in a root monomial")
        a, b = (int(t) for t in name[1:].split("_"))
        edges[(a, b)] += e
    return edges


def _balanced(edges: Counter) -> bool:
    flow: Counter = Counter()
    for (a, b), k in edges.items():
        flow[a] += k
        flow[b] -= k
    return not any(flow.values())


def factor_cycles(m: Monomial | Mapping[str, int]) -> tuple[CycleMonomial, ...]:
    """Greedy cycle decomposition of a weight-zero root monomial.

    Walk from the smallest vertex with unused out-edges, always taking the
    edge to the smallest target; whenever the walk revisits a vertex on the
    current path the closed stretch is emitted as a cycle.

    Raises
    ------
    NotInCommutantError
        If the edge multiset is unbalanced (nonzero weight).
    """
    edges = _edges_of(m)
    if not _balanced(edges):
        raise NotInCommutantError("not in commutant: monomial has nonzero weight")
    out_adj: dict[int, Counter] = {}
    for (a, b), k in edges.items():
        out_adj.setdefault(a, Counter())[b] += k
    remaining = sum(edges.values())
    found: list[CycleMonomial] = []
    while remaining:
        start = min(v for v, c in out_adj.items() if any(c.values()))
        path = [start]
        pos = {start: 0}
        cur = start
        while True:
            targets = out_adj[cur]
            nxt = min(t for t, k in targets.items() if k)
            targets[nxt] -= 1
            remaining -= 1
            if nxt in pos:
                cut = pos[nxt]
                found.append(canonical_cycle(path[cut:]))
                for v in path[cut + 1 :]:
                    del pos[v]
                del path[cut + 1 :]
                cur = nxt
                if len(path) == 1:
                    break
            else:
                pos[nxt] = len(path)
                path.append(nxt)
                cur = nxt
    found.sort(key=CycleMonomial.sort_key)
    return tuple(found)


def normal_form(P: Polynomial, n: int) -> NormalFormExpr:
    """Rewrite a commutant element as h-powers times cycle-generator powers."""
    reg = sl_registry(n)
    if P.registry != reg:
        raise ValueError("polynomial is not over the sl(n) registry")
    out: dict = {}
    for mono, c in P.terms():
        word: Counter = Counter()
        roots = {}
        for name, e in mono.exponents:
            if name.startswith("h"):
                word[GeneratorId.cartan(int(name[1:]))] += e
            else:
                roots[name] = e
        if roots:
            for cyc in factor_cycles(roots):
                word[GeneratorId("p", cyc.indices)] += 1
        key = tuple(sorted(word.items(), key=lambda t: t[0].sort_key()))
        out[key] = out.get(key, Scalar(0)) + c
    return NormalFormExpr(out)


def designated_independent_set(n: int) -> list[Polynomial]:
    """Cartan generators, all ``p_{i,j}`` and all ``p_{1,j,k}`` with ``1<j<k``."""
    reg = sl_registry(n)
    polys = [Polynomial.var(reg, h_name(l)) for l in range(1, n)]
    polys += [cycle_poly(n, CycleMonomial((i, j))) for i, j in itertools.combinations(range(1, n + 1), 2)]
    polys += [cycle_poly(n, CycleMonomial((1, j, k))) for j, k in itertools.combinations(range(2, n + 1), 2)]
    return polys


def jacobian_rank(polys: Iterable[Polynomial], n: int, seed: int = 0) -> int:
    """Rank of the Jacobian w.r.t. all sl(n) variables at a random rational point."""
    names = sl_basis(n).generators
    point = random_rational_point(names, seed)
    rows = [[p.diff(v).evaluate(point) for v in names] for p in polys]
    return exact_rank(rows)


def independence_check(n: int, seed: int = 0, attempts: int = 3) -> bool:
    """True iff the designated ``n^2 - n`` elements have full Jacobian rank."""
    polys = designated_independent_set(n)
    target = n * n - n
    if len(polys) != target:
        raise AssertionError("designated set has the wrong size")
    best = max(jacobian_rank(polys, n, seed + a) for a in range(attempts))
    return best == target


# exhaustive lemma checks -------------------------------------------------------


def weight_zero_monomials(n: int, degree: int) -> list[dict[str, int]]:
    """All weight-zero monomials of a given degree in the root variables."""
    roots = [(a, b) for a in range(1, n + 1) for b in range(1, n + 1) if a != b]
    out = []
    for combo in itertools.combinations_with_replacement(roots, degree):
        edges = Counter(combo)
        if _balanced(edges):
            out.append({e_name(a, b): k for (a, b), k in edges.items()})
    return out


def is_decomposable(m: Mapping[str, int]) -> bool:
    """Brute force: does a proper nonempty sub-multiset have weight zero?"""
    edges = _edges_of(m)
    items = list(edges.items())
    total = sum(edges.values())
    for counts in itertools.product(*(range(k + 1) for _, k in items)):
        size = sum(counts)
        if size == 0 or size == total:
            continue
        sub = Counter({e: c for (e, _), c in zip(items, counts) if c})
        if _balanced(sub):
            return True
    return False


def lowering_count(m: Mapping[str, int]) -> int:
    """Number of factors ``e_{i,j}`` with ``i > j`` (with multiplicity)."""
    return sum(k for (a, b), k in _edges_of(m).items() if a > b)


@dataclass(frozen=True)
class LemmaSummary:
    """Outcome of :func:`lemma_exhaustion`.

    Attributes
    ----------
    monomials : dict
        Weight-zero root monomials per degree.
    indecomposable : dict
        Indecomposable ones per degree.
    factor_failures : int
        Monomials whose cycle factorization does not multiply back.
    lowering_violations : int
        Indecomposable monomials of degree d with a lowering count outside {1, d-1}.
    strict_counterexamples : tuple
        Indecomposable monomials with two or more lowering factors.
    """

    n: int
    max_degree: int
    monomials: dict
    indecomposable: dict
    factor_failures: int
    lowering_violations: int
    strict_counterexamples: tuple

    @property
    def max_indecomposable_degree(self) -> int:
        return max((d for d, k in self.indecomposable.items() if k), default=0)


def lemma_exhaustion(n: int, max_degree: int) -> LemmaSummary:
    """Check both decomposability lemmas over every weight-zero monomial.

    For each degree up to ``max_degree``: the greedy cycle factors must
    multiply back to the monomial and be cycles of length at most ``n``;
    indecomposable monomials must have degree at most ``n`` and a lowering
    count in ``{1, d - 1}``.
    """
    monos, indec = {}, {}
    failures = violations = 0
    strict = []
    for d in range(2, max_degree + 1):
        ms = weight_zero_monomials(n, d)
        monos[d] = len(ms)
        count = 0
        for m in ms:
            factors = factor_cycles(m)
            edges: Counter = Counter()
            for c in factors:
                edges.update(c.edges())
            if edges != _edges_of(m) or any(c.order > n for c in factors):
                failures += 1
            if not is_decomposable(m):
                count += 1
                low = lowering_count(m)
                if low not in (1, d - 1):
                    violations += 1
                if low >= 2:
                    strict.append(tuple(sorted(m.items())))
                if len(factors) != 1:
                    failures += 1
        indec[d] = count
    return LemmaSummary(n, max_degree, monos, indec, failures, violations, tuple(strict))
