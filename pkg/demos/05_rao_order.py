"""
Induced subgraphs and Rao's order
=================================

e sits below d when some realization of e is an induced subgraph of some
realization of d.  Passing to an induced subgraph can only lower the last
and the largest principal differences.
"""

from egdiff import last_difference, max_difference, principal_differences, rao_leq

pairs = [
    ((2, 2, 2, 1, 1), (4, 3, 3, 2, 2, 2)),
    ((3, 3, 3, 3), (2, 2, 2, 2, 2)),
    ((1, 1), (2, 2, 2, 2, 2)),
    ((2, 2, 2), (3, 3, 2, 2, 2)),
]
for e, d in pairs:
    below = rao_leq(e, d)
    print(f"{e} below {d}: {below}")
    print(f"   Δ(e)={tuple(principal_differences(e))}  Δ(d)={tuple(principal_differences(d))}")
    if below:
        assert last_difference(e) <= last_difference(d)
        assert max_difference(e) <= max_difference(d)
