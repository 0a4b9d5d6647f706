# %% [markdown]
# # Genus from positive braids
#
# In the basis `c = a + b`, `b`, a class `p[c] + q[b]` with `p, q >= 0` is
# a positive braid closure on `p + q` strands.

# %%
from fiberknots import braid_counts, euler_characteristic, fibered_genus, ktw_class, ktw_genus, to_cb_basis

c = ktw_class(3, 2)
p, q = to_cb_basis(c)
counts = braid_counts(p, q)
print(c, "->", (p, q), counts)
print("Euler characteristic", euler_characteristic(p, q), "genus", fibered_genus(c))

# %%
print(" r\\s " + "".join(f"{s:>6}" for s in range(2, 7)))
for r in range(3, 9):
    row = [ktw_genus(r, s) for s in range(2, 7)]
    assert row == [fibered_genus(ktw_class(r, s)) for s in range(2, 7)]
    print(f"{r:>4} " + "".join(f"{g:>6}" for g in row))
