"""
Complements share their extreme differences
===========================================

Replacing every degree d_i by n - 1 - d_i gives the degree sequence of the
complementary graph.  Its difference matrix is the antitranspose of the
original one, and the last and largest principal differences carry over.
"""

from egdiff import (
    antitranspose,
    complement_sequence,
    difference_matrix,
    format_matrix,
    last_difference,
    max_difference,
    principal_differences,
    shared_differences,
    sigma_all,
)

d = (6, 5, 3, 3, 3, 1, 1, 1, 1)
dbar = complement_sequence(d)
print("d     =", d, " Δ =", tuple(principal_differences(d)))
print("d-bar =", tuple(dbar), " Δ =", tuple(principal_differences(dbar)))

same = (antitranspose(difference_matrix(d)) == difference_matrix(dbar).entries).all()
print("\nM(d-bar) is the antitranspose of M(d):", bool(same))
print(format_matrix(difference_matrix(dbar).entries))

print("\nlast differences:", last_difference(d), last_difference(dbar))
print("largest differences:", max_difference(d), max_difference(dbar))

# The tail of the row-prefix sums of M(d) reads the complement's
# differences backwards.
print("\nrow-prefix sums of M(d):", sigma_all(d).tolist())

# Which values of Δ(d) are guaranteed to reappear in Δ(d-bar)?  Each entry
# names the position k, the value and the reason it qualifies.
for k, value, why in shared_differences(d):
    print(f"  k={k}: Δ_k={value} (condition {why})")

# The guarantee for the middle condition has an exception: when the first k
# vertices dominate the graph, a zero difference there has no partner among
# the complement's principal differences.
odd = (5, 5, 4, 4, 4, 4)
print("\n", odd, "Δ =", tuple(principal_differences(odd)),
      " complement Δ =", tuple(principal_differences(complement_sequence(odd))))
print("  qualifying:", shared_differences(odd))
