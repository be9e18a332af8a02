# %% [markdown]
# # Cluster complexes: cyclic census and reflection counts
#
# Facets of the cluster complex are maximal sets of pairwise compatible almost
# positive roots.  R = tau_- tau_+ acts on them; its fixed points are compared
# with the q-Catalan product at roots of unity.

# %%
from __future__ import annotations

from sievelab import posets, roots

for label in ("A3", "B3", "D4", "F4", "E6"):
    cc = roots.cluster_complex(label)
    census = roots.cyclic_census(cc)
    facets = sum(1 for _ in roots.enumerate_facets(cc))
    print(f"{label}: {facets} facets, census ok={census.ok()}, order of R={census.order_of_R}")

# %% [markdown]
# The two involutions fix facet sets whose sizes are compared with the signed
# count of order ideals in the root poset.

# %%
for label in ("A4", "F4", "E6", "E7", "E8"):
    cc = roots.cluster_complex(label)
    pair = (roots.fixed_facets(cc, "+"), roots.fixed_facets(cc, "-"))
    signed = posets.signed_ideal_sum(posets.root_poset(label))
    print(f"{label}: tau fixed {pair}, signed ideal sum {signed}")

# %% [markdown]
# The full census for D4 as CSV.

# %%
print(roots.cyclic_census(roots.cluster_complex("D4")).to_csv())
