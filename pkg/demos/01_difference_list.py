"""
Difference lists and the corrected Ferrers diagram
==================================================

The k-th Erdős–Gallai inequality compares the degree carried by the k
largest vertices with what a clique on them plus edges to the rest could
absorb.  The slack in that inequality is the difference Δ_k(d).
"""

from egdiff import (
    difference_matrix,
    eg_differences,
    ferrers,
    format_matrix,
    is_graphical_full,
    modified_durfee,
    principal_differences,
    sigma_all,
)

d = (6, 5, 3, 3, 3, 1, 1, 1, 1)

# Only the first m(d) differences matter for graphicality.  Past m(d)
# the differences keep growing, so they can never be the first to go negative.
m = modified_durfee(d)
print("d            =", d)
print("m(d)         =", m)
print("all Δ_k      =", eg_differences(d).tolist())
print("principal Δ  =", tuple(principal_differences(d)))
print("graphical    =", is_graphical_full(d))

# The corrected Ferrers diagram puts row i's d_i ones around a starred
# diagonal.  Its transpose minus itself is the difference matrix M(d).
print("\nF(d):")
print(format_matrix(ferrers(d).entries))
print("\nM(d) = F(d)^T - F(d):")
print(format_matrix(difference_matrix(d).entries))

# Adding up the first k rows of M(d) recovers Δ_k(d) for k <= m(d).
print("\nrow-prefix sums of M(d):", sigma_all(d).tolist())

# A non-graphical list shows up as a negative difference.
bad = (3, 3, 1, 1)
print("\n", bad, "->", tuple(principal_differences(bad)), "graphical:", is_graphical_full(bad))
