"""Lie-Poisson (Berezin) brackets induced by structure constants.

For a Lie algebra with basis ``x_1..x_N`` and ``[x_i, x_j] = C_ij^k x_k`` the
bracket on polynomials is

    {P, Q} = sum_{i,j,k} C_ij^k x_k dP/dx_i dQ/dx_j.
"""

from __future__ import annotations

import itertools
import json
import random
from fractions import Fraction
from typing import Mapping, Sequence

from .exact_poly import Polynomial, Scalar, VariableRegistry, as_scalar
from .linalg import exact_rank

__all__ = [
    "StructureConstants",
    "berezin_bracket",
    "adjoint_apply",
    "commutes_with",
    "independence_count",
    "random_rational_point",
]

_EXHAUSTIVE_JACOBI_DIM = 36


class StructureConstants:
    """Sparse structure constants ``C_ij^k`` in a named basis.

    Parameters
    ----------
    dim : int
        Dimension of the algebra.
    basis_names : sequence of str
        Variable names of the basis, in order.
    table : mapping
        ``(i, j) -> [(k, C_ij^k), ...]`` for ``i < j``; the ``j > i`` half
        is filled in by antisymmetry.  Entries given for both orders are
        checked for antisymmetry.
    validate : bool
        Check antisymmetry and the Jacobi identity on construction.
    """

    def __init__(self, dim, basis_names, table, validate: bool = True):
        names = tuple(basis_names)
        if dim != len(names) or dim <= 0:
            raise ValueError("dim must equal the number of basis names")
        full: dict[tuple[int, int], dict[int, Scalar]] = {}
        for (i, j), entries in table.items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise IndexError(f"basis index out of range in ({i}, {j})")
            row: dict[int, Scalar] = {}
            for k, c in entries:
                if not 0 <= k < dim:
                    raise IndexError(f"basis index {k} out of range")
                c = as_scalar(c)
                row[k] = row.get(k, Scalar(0)) + c
            row = {k: c for k, c in row.items() if c}
            if i == j and row:
                raise ValueError(f"C_ii^k must vanish (i={i})")
            if (i, j) in full and full[(i, j)] != row:
                raise ValueError(f"antisymmetry violated at ({i}, {j})")
            if row:
                full[(i, j)] = row
                neg = {k: -c for k, c in row.items()}
                if (j, i) in full and full[(j, i)] != neg:
                    raise ValueError(f"antisymmetry violated at ({j}, {i})")
                full[(j, i)] = neg
        frozen = {key: tuple(sorted(v.items())) for key, v in full.items()}
        self.dim = dim
        self.basis_names = names
        self.table = frozen
        self._lin: dict = {}
        if validate:
            self.check_jacobi()

    # validation --------------------------------------------------------------
    def __repr__(self):
        return f"StructureConstants(dim={self.dim}, names={list(self.basis_names)!r})"

    def structure(self, i: int, j: int) -> dict[int, Scalar]:
        return dict(self.table.get((i, j), ()))

    def _bracket_vec(self, u: Mapping[int, Scalar], v: Mapping[int, Scalar]) -> dict[int, Scalar]:
        out: dict[int, Scalar] = {}
        for i, a in u.items():
            for j, b in v.items():
                for k, c in self.table.get((i, j), ()):
                    out[k] = out.get(k, Scalar(0)) + a * b * c
        return {k: c for k, c in out.items() if c}

    def jacobiator(self, i: int, j: int, k: int) -> dict[int, Scalar]:
        """Components of ``[x_i,[x_j,x_k]] + cyclic``."""
        e = lambda a: {a: Scalar(1)}  # noqa: E731
        total: dict[int, Scalar] = {}
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            for m, v in self._bracket_vec(e(a), self._bracket_vec(e(b), e(c))).items():
                total[m] = total.get(m, Scalar(0)) + v
        return {m: v for m, v in total.items() if v}

    def check_jacobi(self, samples: int = 2000, seed: int = 0) -> None:
        """Raise ValueError on a Jacobi violation (exhaustive for small dim)."""
        if self.dim <= _EXHAUSTIVE_JACOBI_DIM:
            triples = itertools.combinations(range(self.dim), 3)
        else:
            rng = random.Random(seed)
            triples = (tuple(rng.sample(range(self.dim), 3)) for _ in range(samples))
        for t in triples:
            if self.jacobiator(*t):
                raise ValueError(f"Jacobi identity fails on basis triple {t}")

    # polynomial views ----------------------------------------------------------
    def linear_form(self, registry: VariableRegistry, i: int, j: int) -> Polynomial:
        """The polynomial ``sum_k C_ij^k x_k`` in ``registry`` (cached)."""
        key = (registry, i, j)
        cached = self._lin.get(key)
        if cached is None:
            cached = Polynomial.zero(registry)
            for k, c in self.table.get((i, j), ()):
                cached = cached + Polynomial.var(registry, self.basis_names[k]).scale(c)
            self._lin[key] = cached
        return cached

    def registry(self, extra: Sequence[str] = ()) -> VariableRegistry:
        return VariableRegistry(tuple(self.basis_names) + tuple(extra))

    # JSON -----------------------------------------------------------------------
    @classmethod
    def from_json(cls, doc: str | Mapping) -> "StructureConstants":
        """Load ``{dim, names, entries: [[i, j, k, "num/den"], ...]}``."""
        if isinstance(doc, str):
            doc = json.loads(doc)
        table: dict[tuple[int, int], list] = {}
        for i, j, k, c in doc["entries"]:
            table.setdefault((int(i), int(j)), []).append((int(k), Scalar.parse(str(c))))
        return cls(int(doc["dim"]), doc["names"], table)

    def to_json(self) -> dict:
        entries = []
        for (i, j), row in sorted(self.table.items()):
            if i < j:
                for k, c in row:
                    entries.append([i, j, k, str(c)])
        return {"dim": self.dim, "names": list(self.basis_names), "entries": entries}


def _check_registry(sc: StructureConstants, *polys: Polynomial) -> VariableRegistry:
    reg = polys[0].registry
    for p in polys[1:]:
        if p.registry != reg:
            raise ValueError("registry mismatch")
    missing = [nm for nm in sc.basis_names if nm not in reg.index]
    if missing:
        raise ValueError(f"registry lacks basis variables {missing[:3]}")
    return reg


def berezin_bracket(P: Polynomial, Q: Polynomial, sc: StructureConstants) -> Polynomial:
    """Lie-Poisson bracket ``{P, Q}``; non-basis variables are central."""
    reg = _check_registry(sc, P, Q)
    pv = P.variables()
    qv = Q.variables()
    names = sc.basis_names
    dQ = {j: Q.diff(names[j]) for j in range(sc.dim) if names[j] in qv}
    out = Polynomial.zero(reg)
    for i in range(sc.dim):
        if names[i] not in pv:
            continue
        inner = Polynomial.zero(reg)
        for j, dq in dQ.items():
            if (i, j) in sc.table:
                inner = inner + sc.linear_form(reg, i, j) * dq
        if inner:
            out = out + P.diff(names[i]) * inner
    return out


def adjoint_apply(i: int, P: Polynomial, sc: StructureConstants) -> Polynomial:
    """Adjoint operator ``X_i(P) = C_ij^k x_k dP/dx_j``, i.e. ``{x_i, P}``."""
    if not 0 <= i < sc.dim:
        raise IndexError(f"basis index {i} out of range")
    reg = _check_registry(sc, P)
    names = sc.basis_names
    out = Polynomial.zero(reg)
    pv = P.variables()
    for j in range(sc.dim):
        if (i, j) in sc.table and names[j] in pv:
            out = out + sc.linear_form(reg, i, j) * P.diff(names[j])
    return out


def commutes_with(P: Polynomial, subalgebra: Sequence[int], sc: StructureConstants) -> bool:
    """True iff ``{x_i, P} = 0`` for every listed basis index."""
    for i in subalgebra:
        if not 0 <= i < sc.dim:
            raise IndexError(f"basis index {i} out of range")
    return all(adjoint_apply(i, P, sc).is_zero() for i in subalgebra)


def random_rational_point(names: Sequence[str], seed: int, spread: int = 97) -> dict[str, Scalar]:
    """Fixed-seed point with rational coordinates ``a/b``, ``|a| <= spread``."""
    rng = random.Random(seed)
    return {
        nm: Scalar(Fraction(rng.randint(-spread, spread), rng.randint(1, spread))) for nm in names
    }


def independence_count(
    sc: StructureConstants, subalgebra: Sequence[int], point: Mapping[str, Scalar]
) -> int:
    """``dim - rank A`` with ``A_ij = C_ij^k x_k`` evaluated at ``point``.

    This is the number of functionally independent solutions of the linear
    PDE system ``X_i F = 0`` for the listed generators.
    """
    rows = []
    for i in subalgebra:
        if not 0 <= i < sc.dim:
            raise IndexError(f"basis index {i} out of range")
        row = []
        for j in range(sc.dim):
            v = Scalar(0)
            for k, c in sc.table.get((i, j), ()):
                v = v + c * as_scalar(point[sc.basis_names[k]])
            row.append(v)
        rows.append(row)
    return sc.dim - exact_rank(rows)
