"""
Split and threshold graphs from the difference list
===================================================

The last principal difference is twice the splittance, the number of edge
edits needed to reach a split graph.  All differences zero means threshold;
all at most one means weakly threshold.
"""

from egdiff import (
    decomposed_sequences,
    enumerate_labeled_realizations,
    forcible_pairs,
    is_split,
    is_threshold,
    is_weakly_threshold,
    principal_differences,
    split_off_partition,
    splittance,
    splittance_bruteforce,
)

for d in [(2, 2, 1, 1), (3, 1, 1, 1), (2, 2, 2, 2, 2), (1, 1, 1, 1), (6, 5, 3, 3, 3, 1, 1, 1, 1)]:
    print(
        f"{str(d):28} Δ={tuple(principal_differences(d))!s:14} "
        f"split={is_split(d)!s:5} threshold={is_threshold(d)!s:5} "
        f"weak={is_weakly_threshold(d)!s:5} splittance={splittance(d)}"
    )

# Splittance is a degree-sequence invariant: every labeled realization needs
# the same number of edits.
d = (2, 2, 2, 2, 2)
edits = {splittance_bruteforce(g) for g in enumerate_labeled_realizations(d)}
print("\nbrute-force splittance over every realization of", d, ":", edits)

# A zero difference splits the vertices into a clique Q, an independent
# set S and a remainder R joined to all of Q and none of S.
d = (4, 3, 3, 3, 1)
p = split_off_partition(d, 3)
q, r, s = p.sorted_parts()
first, second = decomposed_sequences(d, p)
print(f"\n{d}: Q={q} R={r} S={s}")
print("  G[Q ∪ S] degrees", tuple(first), "and G[R] degrees", tuple(second))
print("  Δ(d) =", tuple(principal_differences(d)),
      "=", tuple(principal_differences(first)), "+", tuple(principal_differences(second)))

# The same structure shows up as pairs that behave identically in every
# labeled realization.
for f in forcible_pairs((4, 4, 3, 3, 3, 1)):
    print(f"  forced: {f.i}-{f.j} {f.kind}{' (trivial)' if f.trivial else ''}")
