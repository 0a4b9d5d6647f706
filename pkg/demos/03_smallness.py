# %% [markdown]
# # Certifying smallness
#
# Witnesses `(I, J)` are pairs of index sets with no consecutive indices
# satisfying a sum equation.  None means no closed essential surface.

# %%
from fiberknots import enumerate_witnesses, family_smallness_scan

for cf in ([3, -2, 5], [3, -2, 3], [4, -2, 3]):
    print(cf, [(w.I, w.J, w.condition) for w in enumerate_witnesses(cf)])

# %% [markdown]
# Scanning n for fixed r, s: the only failures with n >= 2 are n = r - 1 and n = r.

# %%
for r in (3, 5, 8):
    scan = family_smallness_scan(r, 2, 2, 15)
    print(r, "not small at", [n for n, e in scan.items() if not e.small])
