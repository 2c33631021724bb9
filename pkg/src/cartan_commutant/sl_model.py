"""The Lie algebra sl(n): basis, structure constants, weights and Casimirs.

Basis order: ``h1..h{n-1}``, then ``e{i}_{i+s}`` for ``s = 1..n-1`` and
ascending ``i``, then the transposed ``e{i+s}_{i}`` in the same order.
``h_i = E_ii - E_{i+1,i+1}`` and the diagonal ``E_ii`` is eliminated through
``E_ii = Delta_i``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from .exact_poly import Polynomial, Scalar, VariableRegistry, as_scalar
from .lie_poisson import StructureConstants

__all__ = [
    "SlBasis",
    "WeightVector",
    "HamiltonianSpec",
    "sl_basis",
    "build_sl",
    "sl_registry",
    "weight_of",
    "cartan_matrix",
    "simple_weight_matrix",
    "delta",
    "casimir_matrix",
    "trace_casimir",
    "algebraic_hamiltonian",
    "h_name",
    "e_name",
]


def h_name(i: int) -> str:
    return f"h{i}"


def e_name(i: int, j: int) -> str:
    return f"e{i}_{j}"


@dataclass(frozen=True)
class SlBasis:
    """Ordered generator names of sl(n)."""

    n: int
    generators: tuple[str, ...]

    @property
    def cartan(self) -> tuple[str, ...]:
        return self.generators[: self.n - 1]

    def index(self, name: str) -> int:
        return self.generators.index(name)


@lru_cache(maxsize=None)
def sl_basis(n: int) -> SlBasis:
    if n < 2:
        raise ValueError("sl(n) requires n >= 2")
    names = [h_name(i) for i in range(1, n)]
    upper = [e_name(i, i + s) for i in range(1, n) for s in range(1, n - i + 1)]
    lower = [e_name(i + s, i) for i in range(1, n) for s in range(1, n - i + 1)]
    return SlBasis(n, tuple(names + upper + lower))


@lru_cache(maxsize=None)
def sl_registry(n: int) -> VariableRegistry:
    """Registry holding exactly the sl(n) basis variables."""
    return VariableRegistry(sl_basis(n).generators)


def _matrix_of(n: int, name: str) -> dict[tuple[int, int], int]:
    if name.startswith("h"):
        i = int(name[1:])
        return {(i, i): 1, (i + 1, i + 1): -1}
    i, j = (int(t) for t in name[1:].split("_"))
    return {(i, j): 1}


def _decompose(n: int, mat: Mapping[tuple[int, int], int]) -> dict[str, int]:
    """Express a traceless matrix in the basis (diagonal via partial sums)."""
    out: dict[str, int] = {}
    for (a, b), v in mat.items():
        if a != b and v:
            out[e_name(a, b)] = out.get(e_name(a, b), 0) + v
    run = 0
    for i in range(1, n):
        run += mat.get((i, i), 0)
        if run:
            out[h_name(i)] = run
    if sum(mat.get((i, i), 0) for i in range(1, n + 1)) != 0:
        raise ValueError("matrix is not traceless")
    return out


@lru_cache(maxsize=None)
def build_sl(n: int) -> StructureConstants:
    """Structure constants of sl(n) from ``[E_ij, E_kl] = d_jk E_il - d_li E_kj``."""
    basis = sl_basis(n)
    names = basis.generators
    mats = [_matrix_of(n, nm) for nm in names]
    idx = {nm: k for k, nm in enumerate(names)}
    table = {}
    for a in range(len(names)):
        for b in range(a + 1, len(names)):
            comm: dict[tuple[int, int], int] = {}
            for (i, j), x in mats[a].items():
                for (k, l), y in mats[b].items():
                    if j == k:
                        comm[(i, l)] = comm.get((i, l), 0) + x * y
                    if l == i:
                        comm[(k, j)] = comm.get((k, j), 0) - x * y
            dec = _decompose(n, comm)
            if dec:
                table[(a, b)] = [(idx[nm], c) for nm, c in sorted(dec.items(), key=lambda t: idx[t[0]])]
    return StructureConstants(len(names), names, table)


@dataclass(frozen=True)
class WeightVector:
    """Eigenvalues of ``e_{j,k}`` under ``h_1..h_{n-1}``."""

    entries: tuple[int, ...]

    def __add__(self, other: "WeightVector") -> "WeightVector":
        return WeightVector(tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "WeightVector":
        return WeightVector(tuple(-a for a in self.entries))

    def is_zero(self) -> bool:
        return not any(self.entries)


def weight_of(n: int, j: int, k: int) -> WeightVector:
    """Weight vector of ``e_{j,k}`` read off the adjoint action."""
    if j == k:
        raise ValueError("weights are defined for j != k")
    if not (1 <= j <= n and 1 <= k <= n):
        raise ValueError("index out of range")
    sc = build_sl(n)
    b = sl_basis(n)
    target = b.index(e_name(j, k))
    entries = []
    for i in range(n - 1):
        row = sc.structure(i, target)
        if set(row) - {target}:
            raise AssertionError("e_{j,k} is not an eigenvector")
        c = row.get(target, Scalar(0))
        entries.append(int(c.re))
    return WeightVector(tuple(entries))


def simple_weight_matrix(n: int) -> list[list[int]]:
    """Rows are the weights of ``e_{j,j+1}``."""
    return [list(weight_of(n, j, j + 1).entries) for j in range(1, n)]


def cartan_matrix(n: int) -> list[list[int]]:
    """Cartan matrix of type A_{n-1}."""
    m = n - 1
    return [[2 if a == b else (-1 if abs(a - b) == 1 else 0) for b in range(m)] for a in range(m)]


def delta(n: int, k: int) -> Polynomial:
    """``Delta_k = sum_{s>=k} ((n-s)/n) h_s - sum_{s<k} (s/n) h_s`` (the image of E_kk)."""
    reg = sl_registry(n)
    out = Polynomial.zero(reg)
    for s in range(1, n):
        c = Fraction(n - s, n) if s >= k else -Fraction(s, n)
        out = out + Polynomial.var(reg, h_name(s)).scale(c)
    return out


def casimir_matrix(n: int) -> list[list[Polynomial]]:
    """Matrix with ``Delta_i`` on the diagonal and ``e_{ij}`` off it."""
    reg = sl_registry(n)
    return [
        [delta(n, i) if i == j else Polynomial.var(reg, e_name(i, j)) for j in range(1, n + 1)]
        for i in range(1, n + 1)
    ]


def _matmul(a, b):
    size = len(a)
    zero = a[0][0] * 0
    out = []
    for i in range(size):
        row = []
        for j in range(size):
            acc = zero
            for k in range(size):
                acc = acc + a[i][k] * b[k][j]
            row.append(acc)
        out.append(row)
    return out


def trace_of_power(m, k: int):
    """``Tr(m**k)`` for a square matrix of polynomials."""
    if k == 1:
        return sum((m[i][i] for i in range(1, len(m))), m[0][0])
    lo = m
    for _ in range(k // 2 - 1):
        lo = _matmul(lo, m)
    hi = _matmul(lo, m) if k % 2 else lo
    size = len(m)
    acc = lo[0][0] * 0
    for i in range(size):
        for j in range(size):
            acc = acc + lo[i][j] * hi[j][i]
    return acc


@lru_cache(maxsize=None)
def trace_casimir(n: int, k: int) -> Polynomial:
    """Casimir ``c^[k] = (1/k) Tr(M^k)``.

    The ``1/k`` normalisation gives ``c^[2] = h1^2/4 + p_{1,2}`` for sl(2)
    and the standard sl(3) invariants of degrees 2 and 3.
    """
    if not 2 <= k <= n:
        raise ValueError("need 2 <= k <= n")
    return trace_of_power(casimir_matrix(n), k).scale(Fraction(1, k))


@dataclass(frozen=True)
class HamiltonianSpec:
    """Coefficients of ``sum a_ij h_i h_j + sum b_k h_k + sum g_l c^[l]``."""

    alpha: Mapping[tuple[int, int], Scalar] = field(default_factory=dict)
    beta: Mapping[int, Scalar] = field(default_factory=dict)
    gamma: Mapping[int, Scalar] = field(default_factory=dict)

    def validate(self, n: int) -> None:
        for i, j in self.alpha:
            if not (1 <= i < n and 1 <= j < n):
                raise ValueError(f"alpha index ({i}, {j}) is not a Cartan pair")
        for k in self.beta:
            if not 1 <= k < n:
                raise ValueError(f"beta index {k} is not a Cartan index")
        for l in self.gamma:
            if not 2 <= l <= n:
                raise ValueError(f"gamma index {l} is not a Casimir order")


def algebraic_hamiltonian(n: int, spec: HamiltonianSpec) -> Polynomial:
    """Polynomial in the Cartan generators and Casimirs; central in the commutant."""
    spec.validate(n)
    reg = sl_registry(n)
    h = lambda i: Polynomial.var(reg, h_name(i))  # noqa: E731
    out = Polynomial.zero(reg)
    for (i, j), c in spec.alpha.items():
        out = out + (h(i) * h(j)).scale(as_scalar(c))
    for k, c in spec.beta.items():
        out = out + h(k).scale(as_scalar(c))
    for l, c in spec.gamma.items():
        out = out + trace_casimir(n, l).scale(as_scalar(c))
    return out
