"""
Walking down the dominance order
================================

Moving one unit of degree from a larger term to a smaller one (a unit
transformation) pushes every principal difference up or leaves it alone.
A Muirhead chain connects any sequence to one it dominates.
"""

from egdiff import (
    apply_unit_transformation,
    canonical_unit_transformations,
    delta_update,
    dominates,
    eg_difference,
    modified_durfee,
    muirhead_chain,
    principal_differences,
)

d = (3, 1, 1, 1)
for u in canonical_unit_transformations(d):
    e = apply_unit_transformation(d, u)
    print(f"{d} --(r={u.r}, t={u.t}, j_r={u.j_r}, j_t={u.j_t})--> {tuple(e)}")
    for k in range(1, min(modified_durfee(d), modified_durfee(e)) + 1):
        print(f"  Δ_{k}: {eg_difference(d, k)} -> predicted {delta_update(d, u, k)},"
              f" actual {eg_difference(e, k)}")

# When m grows by one, the new last difference is the old one plus two.
d = (3, 2, 1, 1, 1)
u = canonical_unit_transformations(d)[0]
e = apply_unit_transformation(d, u)
print(f"\n{d} -> {tuple(e)}: m {modified_durfee(d)} -> {modified_durfee(e)},"
      f" Δ {tuple(principal_differences(d))} -> {tuple(principal_differences(e))}")

# A chain from a star down to a perfect matching plus an isolated vertex.
top, bottom = (4, 0, 0, 0, 0), (1, 1, 1, 1, 0)
print("\n", top, "dominates", bottom, ":", dominates(top, bottom))
for step in muirhead_chain(top, bottom):
    print("  ", tuple(step), "Δ =", tuple(principal_differences(step)))
