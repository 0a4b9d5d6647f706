# %% [markdown]
# # Surgery descriptions for external tools
#
# The exported text is stable byte for byte and can be fed to a
# hyperbolic-geometry package to check hyperbolicity of large r, s, n.

# %%
from fiberknots import FamilyParams, c7_description, export, l7_description

p = FamilyParams(3, 2, 5)
print(export(l7_description(p)))
print(export(c7_description(p)))
print(export(c7_description(p, figure_variant=True)))
