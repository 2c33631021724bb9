"""Exact rank and sparse linear solves over Q and Q(i)."""

from __future__ import annotations

from typing import Hashable, Mapping, Sequence

import gmpy2

from .exact_poly import Scalar, as_scalar

__all__ = ["exact_rank", "solve_sparse"]


def _bareiss_rank(rows: list[list[int]]) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank, prev = 0, 1
    for col in range(ncols):
        piv = next((r for r in range(rank, nrows) if m[r][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank][col]
        for r in range(rank + 1, nrows):
            f = m[r][col]
            row, prow = m[r], m[rank]
            m[r] = [(p * row[c] - f * prow[c]) // prev for c in range(ncols)]
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


def exact_rank(matrix: Sequence[Sequence]) -> int:
    """Rank of a matrix of exact scalars.

    Real matrices are scaled to integers row by row and reduced
    fraction-free; matrices with imaginary entries use plain elimination
    over Q(i).
    """
    rows = [[as_scalar(x) for x in r] for r in matrix]
    if all(x.im == 0 for r in rows for x in r):
        ints = []
        for r in rows:
            den = 1
            for x in r:
                den = gmpy2.lcm(den, x.re.denominator)
            ints.append([int(x.re * den) for x in r])
        return _bareiss_rank(ints)
    sparse = [{c: x for c, x in enumerate(r) if x} for r in rows]
    return len(_echelon(sparse))


def _echelon(rows: list[dict]) -> list[tuple[Hashable, dict]]:
    """Reduce sparse rows to echelon form; returns ``(pivot, row)`` pairs."""
    pivots: dict[Hashable, dict] = {}
    order: list = []
    for row in rows:
        row = dict(row)
        changed = True
        while row and changed:
            changed = False
            for col in [c for c in row if c in pivots]:
                if col not in row:
                    continue
                f = row[col]
                for c, v in pivots[col].items():
                    nv = row.get(c, Scalar(0)) - f * v
                    if nv:
                        row[c] = nv
                    else:
                        row.pop(c, None)
                changed = True
        if not row:
            continue
        col = min(row, key=_sort_key)
        inv = Scalar(1) / row[col]
        row = {c: v * inv for c, v in row.items()}
        # keep existing pivot rows reduced against the new pivot
        for pc, prow in pivots.items():
            if col in prow:
                f = prow[col]
                for c, v in row.items():
                    nv = prow.get(c, Scalar(0)) - f * v
                    if nv:
                        prow[c] = nv
                    else:
                        prow.pop(c, None)
        pivots[col] = row
        order.append(col)
    return [(c, pivots[c]) for c in order]


def _sort_key(c):
    return (0, c) if isinstance(c, int) else (1, str(c))


_RHS = "__rhs__"


def solve_sparse(
    equations: Sequence[tuple[Mapping[Hashable, Scalar], Scalar]],
) -> dict[Hashable, Scalar]:
    """Solve a sparse linear system exactly.

    Parameters
    ----------
    equations : sequence of (coefficients, rhs)
        Each equation reads ``sum(coefficients[u] * u) = rhs``.

    Returns
    -------
    dict
        A solution with free unknowns set to zero.

    Raises
    ------
    ValueError
        If the system is inconsistent.
    """
    rows = []
    for coeffs, rhs in equations:
        row = {u: as_scalar(v) for u, v in coeffs.items() if as_scalar(v)}
        r = as_scalar(rhs)
        if r:
            row[_RHS] = r
        if row:
            rows.append(row)
    ech = _echelon([{(0, k) if k != _RHS else (1, k): v for k, v in r.items()} for r in rows])
    sol: dict[Hashable, Scalar] = {}
    for piv, row in ech:
        if piv[0] == 1:
            raise ValueError("inconsistent linear system")
        sol[piv[1]] = row.get((1, _RHS), Scalar(0))
    return sol
