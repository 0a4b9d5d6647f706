# %% [markdown]
# # Continued fractions and curves on the trefoil fiber
#
# A curve on the once-punctured torus fiber is named by a continued
# fraction `[b1, ..., bk] = 1/(b1 - 1/(b2 - ...))`.  Its value `m/n` gives
# the homology class `m[a] + n[b]`.

# %%
from fiberknots import (A, FamilyParams, apply_twist_word, curve_from_cf, evaluate, expand,
                        family_word, intersection, k0_class, knot_class, ktw_class,
                        ProjectiveRational)

r, s = 3, 2
print("[r,-s]   =", evaluate([r, -s]))       # 2/7
print("[r,-s,0] =", evaluate([r, -s, 0]))    # 1/3, a zero coefficient is fine
print("[r,-s,5] =", evaluate([r, -s, 5]))    # 11/38

# %% [markdown]
# Expansion is the canonical greedy one, so it need not reproduce the name
# you started from; it always evaluates back to the same value.

# %%
q = ProjectiveRational(2, 7)
print(list(expand(q)), evaluate(expand(q)) == q)

# %% [markdown]
# ## The family K^n = [r, -s, n]
#
# Each K^n is K^0 twisted n times along K^tw = [r, -s].  The twist word
# `tau_b^-r tau_a^s tau_b^-n` applied to `a` lands on the same class.

# %%
for n in range(0, 6):
    p = FamilyParams(r, s, n)
    kn = knot_class(p)
    assert kn == curve_from_cf([r, -s, n]) == apply_twist_word(family_word(p), A)
    print(n, kn, "i(Ktw, Kn) =", intersection(ktw_class(r, s), kn),
          "i(K0, Kn) =", intersection(k0_class(r), kn))
