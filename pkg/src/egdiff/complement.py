"""Complementary degree sequences and the differences they share."""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .core import (
    DegreeSequence,
    PreconditionError,
    _as_sequence,
    modified_durfee,
    principal_differences,
    require_graphical,
)
from .matrix import difference_matrix

__all__ = [
    "complement_sequence",
    "shared_differences",
    "complement_index",
]


def complement_sequence(d: Sequence[int]) -> DegreeSequence:
    """Degree sequence of the complement: ``(n-1-d_n, ..., n-1-d_1)``.

    Raises:
        PreconditionError: if some ``d_i > n - 1``.
    """
    d = _as_sequence(d)
    n = len(d)
    if n and d[0] > n - 1:
        raise PreconditionError(f"degree {d[0]} exceeds n-1={n - 1}")
    return DegreeSequence(n - 1 - di for di in reversed(d))


def _condition(diffs: Sequence[int], k: int) -> str | None:
    m = len(diffs)
    at = lambda j: diffs[j - 1]  # noqa: E731  1-based view
    if k == m:
        return "i"
    if k == 1 and m >= 2 and at(1) > at(2):
        return "ii"
    if 2 <= k <= m - 1:
        rising = at(k - 1) < at(k) < at(k + 1)
        falling = at(k - 1) > at(k) > at(k + 1)
        if not rising and not falling:
            return "iii"
    return None


def shared_differences(d: Sequence[int]) -> list[tuple[int, int, str]]:
    """Indices ``k`` whose difference is guaranteed to reappear in ``Δ(d̄)``.

    A principal index ``k`` qualifies when ``k = m(d)``; or ``k = 1`` with
    ``Δ_1 > Δ_2``; or ``1 < k < m(d)`` and ``Δ_{k-1}, Δ_k, Δ_{k+1}`` is
    neither strictly increasing nor strictly decreasing.

    Returns:
        ``(k, Δ_k(d), condition)`` triples in increasing ``k``; ``condition``
        is one of ``"i"``, ``"ii"``, ``"iii"`` (first match wins).

    Raises:
        NotGraphicalError: if ``d`` is not graphical.
    """
    d = require_graphical(d)
    diffs = principal_differences(d)
    out = []
    for k in range(1, len(diffs) + 1):
        cond = _condition(diffs, k)
        if cond is not None:
            out.append((k, diffs[k - 1], cond))
    return out


def complement_index(d: Sequence[int], k: int) -> int | None:
    """Index ``n + 1 - j`` of ``Δ(d̄)`` that repeats ``Δ_k(d)``, if the row test applies.

    ``j`` is the leftmost column holding a nonzero entry among the first
    ``k`` rows of ``M(d)``.  Returns ``None`` when row ``k + 1`` shares a
    nonzero column with row ``k`` or the first ``k`` rows are all zero.
    """
    d = _as_sequence(d)
    m = modified_durfee(d)
    if not 1 <= k <= m:
        raise PreconditionError(f"k={k} outside 1..{m}")
    a = difference_matrix(d).entries
    n = len(d)
    if k < n and np.any((a[k - 1] != 0) & (a[k] != 0)):
        return None
    cols = np.flatnonzero(np.any(a[:k] != 0, axis=0))
    if cols.size == 0:
        return None
    return n - int(cols[0])

