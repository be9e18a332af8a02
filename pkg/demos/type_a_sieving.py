# %% [markdown]
# # Fixed k-angulations against the rational q,t-Catalan polynomial
#
# For odd s and m, the dihedral group of the (sm+2)-gon acts on its
# (s+2)-angulations.  Each element's fixed-point count is compared with the
# exact value of Cat_{sm+1,m}(q, t) at that element's eigenvalues.

# %%
from __future__ import annotations

from sievelab import dissect, dyck, harness
from sievelab.polyqt import as_integer, eval_at_roots

s, m = 1, 7
n, k = s * m + 2, s + 2
poly = dyck.rational_qt_catalan(s * m + 1, m)
print(f"{n}-gon, {k}-angulations: {sum(1 for _ in dissect.enumerate_kangulations(n, k))}")
print("Cat_{8,7}(1,1) =", poly.evaluate(1, 1))

# %% [markdown]
# One row per conjugacy class.  Rotations match; the reflection value has the
# opposite sign for this (s, m).

# %%
for key, members in sorted(dissect.conjugacy_classes(n).items()):
    g = members[0]
    d, a, b = g.eigenvalue_exponents()
    value = as_integer(eval_at_roots(poly, d, a, b))
    print(f"{str(g):>4}  fixed={dissect.fixed_count(n, k, g):>4}  polynomial={value:>4}")

# %% [markdown]
# Multiplying by (qt)^N with N = sm(m-1)/2 leaves the rotation values alone
# (qt evaluates to 1 there) and contributes (-1)^N at a reflection.

# %%
normalized = dyck.dihedral_catalan(s, m)
print("normalized at a reflection:", as_integer(eval_at_roots(normalized, 2, 0, 1)))
rows = harness.verify_type_a(s, m, normalize=True)
print(sum(r.ok for r in rows), "of", len(rows), "rows pass")

# %% [markdown]
# The sign at a reflection is the signed count of (sm+1, m)-Dyck paths by area
# parity, which the shape recursion computes without listing paths.

# %%
for mm in (1, 3, 5, 7):
    print(mm, dyck.signed_dyck_count(mm + 1, mm), dyck.d_value(1, 0, mm))
