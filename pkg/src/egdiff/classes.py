"""Split, threshold and weakly threshold recognition from the difference list.

Also exposes the degree-level Q/R/S split-off: when ``Δ_k(d) = 0`` the
vertex set of every realization splits into a clique ``Q`` (the ``k``
highest-degree positions), an independent set ``S`` and a remainder ``R``
joined to all of ``Q`` and to none of ``S``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import (
    DegreeSequence,
    PreconditionError,
    eg_difference,
    principal_differences,
    require_graphical,
)

__all__ = [
    "SplitPartition",
    "splittance",
    "is_split",
    "is_threshold",
    "is_weakly_threshold",
    "has_isolated_vertex",
    "split_off_partition",
    "decomposed_sequences",
]


def splittance(d: Sequence[int]) -> int:
    """Half the last principal difference: the edit distance to a split graph."""
    d = require_graphical(d)
    diffs = principal_differences(d)
    last = diffs[-1] if diffs else 0
    if last % 2:
        raise RuntimeError(f"odd last difference {last} for graphical {tuple(d)}")
    return last // 2


def is_split(d: Sequence[int]) -> bool:
    return splittance(d) == 0


def is_threshold(d: Sequence[int]) -> bool:
    d = require_graphical(d)
    return all(x == 0 for x in principal_differences(d))


def is_weakly_threshold(d: Sequence[int]) -> bool:
    d = require_graphical(d)
    return all(x <= 1 for x in principal_differences(d))


def has_isolated_vertex(d: Sequence[int]) -> bool:
    """True when a realization has an isolated vertex (and at least two vertices).

    That is the other way a Q/R/S partition arises: ``S`` is one isolated
    vertex, ``Q`` is empty and ``R`` is everything else.
    """
    d = require_graphical(d)
    return len(d) >= 2 and d[-1] == 0


@dataclass(frozen=True)
class SplitPartition:
    """Q/R/S positions (1-based, into the sorted sequence) for one ``k``."""

    k: int
    q: frozenset[int]
    r: frozenset[int]
    s: frozenset[int]

    def sorted_parts(self) -> tuple[list[int], list[int], list[int]]:
        return sorted(self.q), sorted(self.r), sorted(self.s)


def split_off_partition(d: Sequence[int], k: int) -> SplitPartition:
    """Partition positions of ``d`` given ``Δ_k(d) = 0``.

    ``Q`` is positions ``1..k`` and ``S``/``R`` split the remaining
    positions by ``d_i < k`` / ``d_i >= k``.

    Raises:
        NotGraphicalError: ``d`` is not graphical.
        PreconditionError: ``k`` out of range or ``Δ_k(d) != 0``.
    """
    d = require_graphical(d)
    n = len(d)
    if not 1 <= k <= n:
        raise PreconditionError(f"k={k} outside 1..{n}")
    if eg_difference(d, k) != 0:
        raise PreconditionError(f"Δ_{k}{tuple(d)} = {eg_difference(d, k)} != 0")
    q = frozenset(range(1, k + 1))
    s = frozenset(i for i in range(k + 1, n + 1) if d[i - 1] < k)
    r = frozenset(range(k + 1, n + 1)) - s
    return SplitPartition(k=k, q=q, r=r, s=s)


def decomposed_sequences(
    d: Sequence[int], p: SplitPartition
) -> tuple[DegreeSequence, DegreeSequence]:
    """Degree sequences of ``G[Q ∪ S]`` and ``G[R]``, identical in every realization.

    Raises:
        PreconditionError: if ``p`` is not the split-off partition of ``d``.
    """
    d = require_graphical(d)
    try:
        expected = split_off_partition(d, p.k)
    except PreconditionError as exc:
        raise PreconditionError(f"partition inconsistent with {tuple(d)}: {exc}")
    if expected != p:
        raise PreconditionError(f"partition inconsistent with {tuple(d)}")
    size_r = len(p.r)
    qs = [d[i - 1] - size_r for i in p.q] + [d[i - 1] for i in p.s]
    rr = [d[i - 1] - p.k for i in p.r]
    return DegreeSequence(qs), DegreeSequence(rr)
