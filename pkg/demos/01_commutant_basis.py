"""The Cartan commutant of sl(n) as a space of cycle monomials.

Run with ``python3 demos/01_commutant_basis.py``.
"""

# %% [markdown]
# Elements of S(sl(n)) that Poisson-commute with the Cartan subalgebra are
# spanned, as an algebra, by the Cartan generators and by products of root
# vectors along a directed cycle, p(i1,...,id) = e_{i1,i2} ... e_{id,i1}.

# %%
from cartan_commutant.commutant import (
    cycle_poly,
    enumerate_basis,
    factor_cycles,
    independence_check,
    lemma_exhaustion,
    linear_dimension,
)
from cartan_commutant.generators import canonical_cycle

for n in range(2, 8):
    print(f"n={n}: {linear_dimension(n)} generators")

# %% [markdown]
# The per-degree breakdown counts d-cycles on n points.

# %%
print(enumerate_basis(5).breakdown())
print([g.name for g in enumerate_basis(3).generators()])

# %% [markdown]
# Any weight-zero product of root vectors splits into cycles.  The product
# of all six root vectors of sl(3) factors as three transpositions, and the
# same polynomial is also the product of the two 3-cycles.

# %%
six = {"e1_2": 1, "e2_1": 1, "e1_3": 1, "e3_1": 1, "e2_3": 1, "e3_2": 1}
print([str(c) for c in factor_cycles(six)])
p = lambda *i: cycle_poly(3, canonical_cycle(i))  # noqa: E731
print(p(1, 2) * p(1, 3) * p(2, 3) == p(1, 2, 3) * p(1, 3, 2))

# %% [markdown]
# Exhaustive check at small rank: no indecomposable monomial beyond degree
# n, and the count of lowering factors of an indecomposable monomial.

# %%
for n, deg in ((3, 4), (4, 5)):
    s = lemma_exhaustion(n, deg)
    print(f"n={n}: indecomposable by degree {s.indecomposable}, "
          f"lowering count outside {{1, d-1}}: {s.lowering_violations}")

# %% [markdown]
# The Cartan generators, the p(i,j) and the p(1,j,k) are functionally
# independent: n^2 - n of them, matching the rank deficit of the PDE system.

# %%
print({n: independence_check(n) for n in (2, 3, 4, 5)})
