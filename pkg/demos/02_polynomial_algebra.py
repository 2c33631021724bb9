"""Brackets between commutant generators close polynomially.

Run with ``python3 demos/02_polynomial_algebra.py``.
"""

# %%
from cartan_commutant import poly_algebra as pa
from cartan_commutant.generators import GeneratorId

P = GeneratorId.cycle

# %% [markdown]
# For sl(3) the brackets are quadratic in the generators.

# %%
table = pa.structure_table(3, "p")
print(table.to_text())
print("order:", pa.algebra_order(table))

# %% [markdown]
# In the c/f/g basis (c_i diagonal entries, c_ij = p_ij, f and g the skew
# and symmetric combinations of a 3-cycle and its reverse) the table is
# more compact.

# %%
print(pa.structure_table(3, "cfg").to_text())

# %% [markdown]
# For sl(4) the algebra is cubic.

# %%
t4 = pa.structure_table(4, "cfg")
print(len(t4.nontrivial()), "nonzero brackets, order", pa.algebra_order(t4))
print(pa.bracket(4, P(1, 2), P(2, 3, 4)).to_text())

# %% [markdown]
# Polynomial relations among the generators, checked by full expansion.

# %%
for fam in ("alde1", "funrel", "addrel"):
    rep = pa.verify_identities(4, fam)
    print(fam, f"{len(rep.checks) - len(rep.failures())}/{len(rep.checks)}")
rela = pa.verify_identities(4, "rela1")
for c in rela.checks:
    print(f"  [{c.status}] {c.name}")

# %% [markdown]
# The quadratic algebra at n=3 has a cubic-squared Casimir K built from
# the generators; it commutes with all of them.

# %%
K, rep = pa.casimir_K(3)
print(rep.to_text())
