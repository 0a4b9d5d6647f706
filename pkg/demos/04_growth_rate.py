# %% [markdown]
# # Growth rate of the tunnel number
#
# Given bridge index b0 and torus bridge index b1 (external inputs), an
# m-small knot with genus 2 exterior has growth rate
# `min{1 - 1/b1, 1 - 2/b0}`.

# %%
from fractions import Fraction

from fiberknots import BridgeIndices, epsilon_target, growth_rate_bound

for b0, b1 in [(2, 1), (4, 2), (9, 4), (100, 50)]:
    rate = growth_rate_bound(BridgeIndices(b0, b1))
    print((b0, b1), rate.value, "(max variant", rate.max_variant, ")")

# %% [markdown]
# How large must b1 be to push the growth rate past 1 - eps?

# %%
for eps in (Fraction(1, 2), Fraction(1, 10), Fraction(1, 100)):
    b1 = epsilon_target(eps)
    print(eps, b1, growth_rate_bound(BridgeIndices(2 * b1, b1)).value)

# %% [markdown]
# The Seifert matrix obstruction: a first basis curve of surface slope 0
# forces an even leading Alexander coefficient, but the trefoil's is 1.

# %%
from fiberknots import alexander_from_seifert
from fiberknots.bounds import TREFOIL_SEIFERT, lemma_seifert_matrix

print(alexander_from_seifert(TREFOIL_SEIFERT))
print([alexander_from_seifert(lemma_seifert_matrix(j, 1, 0)) for j in range(-2, 3)])
