import random

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from egdiff import (
    DegreeSequence,
    NotGraphicalError,
    PreconditionError,
    SizeLimitError,
    UnitTransformation,
    apply_unit_transformation,
    canonical_unit_transformations,
    delta_update,
    dominates,
    eg_difference,
    is_canonical,
    is_graphical_full,
    is_split,
    is_threshold,
    is_weakly_threshold,
    last_difference,
    max_difference,
    modified_durfee,
    muirhead_chain,
    rao_leq,
    unit_transformation,
)

from oracles import rao_downsets, realizable, sorted_lists

lists = st.lists(st.integers(0, 12), min_size=1, max_size=14)


def random_graphical(rng, n_max=40):
    """A graphical sequence read off a random graph with a random edge density."""
    n = rng.randint(1, n_max)
    p = rng.random()
    deg = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                deg[u] += 1
                deg[v] += 1
    return DegreeSequence(deg)


def is_one_unit_step(a, b):
    """``b`` arises from ``a`` by moving one unit rightward from a gap of at least 2."""
    n = max(len(a), len(b))
    x, y = a.padded(n).as_array(), b.padded(n).as_array()
    for r in range(n):
        for t in range(r + 1, n):
            if x[r] >= x[t] + 2:
                z = x.copy()
                z[r] -= 1
                z[t] += 1
                if sorted(z.tolist(), reverse=True) == y.tolist():
                    return True
    return False


class TestDominates:
    @pytest.mark.parametrize(
        "d, e, expected",
        [
            ((3, 1, 1, 1), (2, 2, 1, 1), True),
            ((2, 2, 1, 1), (2, 2, 1, 1), True),
            ((2, 2, 1, 1), (3, 1, 1, 1), False),
            ((4,), (1, 1, 1, 1), True),
            ((), (), True),
        ],
    )
    def test_examples(self, d, e, expected):
        assert dominates(d, e) is expected

    def test_unequal_sums(self):
        with pytest.raises(PreconditionError):
            dominates((2, 2), (1, 1))

    @given(lists)
    def test_reflexive(self, values):
        assert dominates(values, values)


class TestUnitTransformation:
    def test_apply_examples(self):
        assert tuple(apply_unit_transformation((3, 1, 1, 1), (1, 2))) == (2, 2, 1, 1)
        assert tuple(apply_unit_transformation((2, 2), (1, 3))) == (2, 1, 1)

    def test_invalid_pair(self):
        with pytest.raises(PreconditionError):
            apply_unit_transformation((2, 2, 1, 1), (1, 2))
        with pytest.raises(PreconditionError):
            unit_transformation((3, 1), (2), 1)
        with pytest.raises(PreconditionError):
            unit_transformation((3, 1), 1, 4)

    def test_mismatched_columns_rejected(self):
        with pytest.raises(PreconditionError):
            apply_unit_transformation((3, 1, 1, 1), UnitTransformation(1, 2, 9, 9))

    def test_columns(self):
        u = unit_transformation((3, 1, 1, 1), 1, 2)
        assert (u.r, u.t, u.j_r, u.j_t) == (1, 2, 4, 3)

    def test_canonical_examples(self):
        assert canonical_unit_transformations((3, 1, 1, 1)) == [UnitTransformation(1, 2, 4, 3)]
        assert canonical_unit_transformations((0, 0, 0)) == []
        assert canonical_unit_transformations((1, 1, 1)) == []
        for k in range(2, 6):
            moves = canonical_unit_transformations((k,) * 4)
            assert [(u.r, u.t) for u in moves] == [(4, 5)]

    @given(lists)
    def test_canonical_list_matches_definition(self, values):
        d = DegreeSequence(values)
        n = len(d)
        found = set()
        for r in range(1, n + 1):
            for t in range(r + 1, n + 2):
                if d.term(r) >= d.term(t) + 2:
                    u = unit_transformation(d, r, t)
                    if is_canonical(d, u):
                        found.add((r, t))
        assert {(u.r, u.t) for u in canonical_unit_transformations(d)} == found

    @given(lists)
    def test_column_order(self, values):
        d = DegreeSequence(values)
        for u in canonical_unit_transformations(d):
            assert u.j_t < u.j_r

    @given(st.lists(st.integers(0, 5), min_size=1, max_size=6))
    def test_canonical_moves_are_covers(self, values):
        # nothing of the same length and sum lies strictly between d and e
        d = DegreeSequence(values)
        for u in canonical_unit_transformations(d):
            e = apply_unit_transformation(d, u)
            dd = d.padded(len(e))
            for c in sorted_lists(len(e), max_value=dd[0]):
                c = DegreeSequence(c)
                if c.total != d.total or c in (dd, e):
                    continue
                assert not (dominates(dd, c) and dominates(c, e)), (d, u, c)

    def test_non_canonical_moves_are_not_covers(self):
        d = DegreeSequence((4, 2, 0))
        u = unit_transformation(d, 1, 3)
        assert not is_canonical(d, u)
        e = apply_unit_transformation(d, u)
        assert tuple(e) == (3, 2, 1)
        middle = DegreeSequence((3, 3, 0))
        assert dominates(d, middle) and dominates(middle, e)


class TestDeltaUpdate:
    def test_examples(self):
        d = (3, 1, 1, 1)
        u = UnitTransformation(1, 2, 4, 3)
        assert delta_update(d, u, 1) == 1
        assert delta_update(d, u, 2) == 0

    def test_rejects_non_canonical(self):
        d = (4, 2, 0)
        with pytest.raises(PreconditionError):
            delta_update(d, unit_transformation(d, 1, 3), 1)

    def test_rejects_k_outside_cases(self):
        d = DegreeSequence((3, 1, 1, 1))
        u = canonical_unit_transformations(d)[0]
        with pytest.raises(PreconditionError):
            delta_update(d, u, 4)

    def test_second_case_instance(self):
        d = DegreeSequence((3, 2, 1, 1, 1))
        u = unit_transformation(d, 1, 3)
        assert is_canonical(d, u)
        e = apply_unit_transformation(d, u)
        assert tuple(e) == (2, 2, 2, 1, 1)
        assert modified_durfee(d) == 2 and modified_durfee(e) == 3
        assert delta_update(d, u, 3) == eg_difference(d, 2) + 2 == eg_difference(e, 3)

    def test_random_triples(self):
        rng = random.Random(17)
        cases = {"first": 0, "second": 0}
        for _ in range(10_000):
            d = DegreeSequence([rng.randint(0, 15) for _ in range(rng.randint(1, 16))])
            moves = canonical_unit_transformations(d)
            if not moves:
                continue
            u = rng.choice(moves)
            e = apply_unit_transformation(d, u)
            md, me = modified_durfee(d.padded(len(e))), modified_durfee(e)
            ks = list(range(0, min(md, me) + 1))
            if me > md:
                ks.append(me)
            k = rng.choice(ks)
            cases["second" if k == me > md else "first"] += 1
            assert delta_update(d, u, k) == eg_difference(e, k), (d, u, k)
        assert cases["first"] > 1000 and cases["second"] > 20


class TestMuirheadChain:
    def test_single_step(self):
        chain = muirhead_chain((3, 1, 1, 1), (2, 2, 1, 1))
        assert [tuple(x) for x in chain] == [(3, 1, 1, 1), (2, 2, 1, 1)]

    def test_trivial(self):
        assert [tuple(x) for x in muirhead_chain((2, 2, 1, 1), (2, 2, 1, 1))] == [(2, 2, 1, 1)]

    def test_star_to_matching(self):
        chain = muirhead_chain((4, 0, 0, 0, 0), (1, 1, 1, 1, 0))
        assert [tuple(x) for x in chain] == [
            (4, 0, 0, 0, 0),
            (3, 1, 0, 0, 0),
            (2, 2, 0, 0, 0),
            (2, 1, 1, 0, 0),
            (1, 1, 1, 1, 0),
        ]

    def test_incomparable(self):
        with pytest.raises(PreconditionError):
            muirhead_chain((2, 2, 1, 1), (3, 1, 1, 1))
        with pytest.raises(PreconditionError):
            muirhead_chain((2, 2), (1, 1))

    def test_padding(self):
        chain = muirhead_chain((2,), (1, 1))
        assert [tuple(x) for x in chain] == [(2, 0), (1, 1)]

    @given(lists, st.randoms(use_true_random=False))
    def test_chain_validity(self, values, rnd):
        d = DegreeSequence(values)
        # walk down a random number of canonical steps to get a comparable e
        e = d
        for _ in range(rnd.randint(0, 12)):
            moves = [u for u in canonical_unit_transformations(e) if u.t <= len(d)]
            if not moves:
                break
            e = apply_unit_transformation(e, rnd.choice(moves))
        chain = muirhead_chain(d, e)
        assert chain[0] == d and chain[-1] == e
        for a, b in zip(chain, chain[1:]):
            assert dominates(a, b) and a != b
            assert is_one_unit_step(a, b)


class TestMonotonicity:
    def test_random_chains(self):
        rng = random.Random(23)
        steps = 0
        while steps < 3000:
            d = random_graphical(rng, 25)
            cur = d
            for _ in range(rng.randint(1, 30)):
                moves = [u for u in canonical_unit_transformations(cur) if u.t <= len(d)]
                if not moves:
                    break
                nxt = apply_unit_transformation(cur, rng.choice(moves))
                steps += 1
                assert is_graphical_full(nxt)
                m = min(modified_durfee(cur), modified_durfee(nxt))
                for k in range(1, m + 1):
                    assert eg_difference(cur, k) <= eg_difference(nxt, k)
                assert last_difference(cur) <= last_difference(nxt)
                assert max_difference(cur) <= max_difference(nxt)
                # classes are closed upward in dominance
                if is_split(nxt):
                    assert is_split(cur)
                if is_threshold(nxt):
                    assert is_threshold(cur)
                if is_weakly_threshold(nxt):
                    assert is_weakly_threshold(cur)
                cur = nxt
            # and across the whole walk, not only adjacent steps
            if cur != d:
                assert dominates(d, cur)
                for k in range(1, min(modified_durfee(d), modified_durfee(cur)) + 1):
                    assert eg_difference(d, k) <= eg_difference(cur, k)
                assert max_difference(d) <= max_difference(cur)

    def test_downward_closure_exhaustive_small(self):
        for n in range(1, 7):
            pool = [DegreeSequence(c) for c in sorted_lists(n, max_value=n)]
            by_sum = {}
            for c in pool:
                by_sum.setdefault(c.total, []).append(c)
            for group in by_sum.values():
                for d in group:
                    if not realizable(d):
                        continue
                    for e in group:
                        if dominates(d, e):
                            assert realizable(e), (d, e)


class TestRao:
    def test_examples(self):
        assert rao_leq((2, 2, 2, 1, 1), (4, 3, 3, 2, 2, 2))
        assert rao_leq((2, 2, 1, 1), (2, 2, 1, 1))
        assert not rao_leq((3, 3, 3, 3), (2, 2, 2, 2, 2))

    def test_size_and_sum_shortcuts(self):
        assert not rao_leq((1, 1, 1, 1), (1, 1))
        assert not rao_leq((2, 2, 2), (1, 1, 1, 1))

    def test_errors(self):
        with pytest.raises(NotGraphicalError):
            rao_leq((1, 1, 1), (2, 2, 2))
        with pytest.raises(SizeLimitError):
            rao_leq((1, 1), (1,) * 10)
        assert rao_leq((1, 1), (1,) * 10, vertex_limit=10)

    def test_matches_atlas_upto5(self):
        down = rao_downsets()
        seqs = [d for d in down if len(d) <= 5]
        for d in seqs:
            for e in seqs:
                assert rao_leq(e, d) == (e in down[d]), (e, d)

    def test_matches_atlas_sample_n7(self):
        down = rao_downsets()
        rng = random.Random(29)
        big = sorted(d for d in down if len(d) >= 6)
        every = sorted(down)
        for _ in range(150):
            d = rng.choice(big)
            e = rng.choice(sorted(down[d])) if rng.random() < 0.5 else rng.choice(every)
            assert rao_leq(e, d) == (e in down[d]), (e, d)

    def test_monotone_over_atlas_pairs(self):
        down = rao_downsets()
        pairs = 0
        for d, below in down.items():
            for e in below:
                pairs += 1
                assert last_difference(e) <= last_difference(d), (e, d)
                assert max_difference(e) <= max_difference(d), (e, d)
        assert pairs > 10_000
