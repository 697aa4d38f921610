"""Dominance (majorization) order, unit transformations and Rao's order.

Positions ``r``, ``t``, ``j_r``, ``j_t`` are 1-based, matching the usual
``d_1 >= d_2 >= ...`` indexing.  Position ``n + 1`` stands for one
imagined trailing zero, which a unit transformation may raise to 1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .core import (
    DegreeSequence,
    PreconditionError,
    SizeLimitError,
    _as_sequence,
    eg_difference,
    modified_durfee,
    require_graphical,
)
from .realize import iter_labeled_realizations

__all__ = [
    "UnitTransformation",
    "RAO_LIMIT",
    "dominates",
    "unit_transformation",
    "is_canonical",
    "apply_unit_transformation",
    "canonical_unit_transformations",
    "delta_update",
    "muirhead_chain",
    "rao_leq",
]

RAO_LIMIT = 9


@dataclass(frozen=True)
class UnitTransformation:
    """Move one unit of degree from position ``r`` to a later position ``t``.

    ``j_r`` and ``j_t`` are the Ferrers-diagram columns where row ``r``
    loses its last 1 and row ``t`` gains a new one.
    """

    r: int
    t: int
    j_r: int
    j_t: int


def _pad_pair(d: DegreeSequence, e: DegreeSequence) -> tuple[np.ndarray, np.ndarray]:
    n = max(len(d), len(e))
    return d.padded(n).as_array(), e.padded(n).as_array()


def dominates(d: Sequence[int], e: Sequence[int]) -> bool:
    """True iff every prefix sum of ``d`` is at least the matching prefix of ``e``.

    The shorter sequence is zero-padded first.

    Raises:
        PreconditionError: if the sums differ.
    """
    d, e = _as_sequence(d), _as_sequence(e)
    if d.total != e.total:
        raise PreconditionError(f"sums differ: {d.total} vs {e.total}")
    a, b = _pad_pair(d, e)
    return bool(np.all(np.cumsum(a) >= np.cumsum(b)))


def _columns(d: DegreeSequence, r: int, t: int) -> tuple[int, int]:
    dr, dt = d.term(r), d.term(t)
    j_r = dr + 1 if dr >= r else dr
    j_t = dt + 2 if dt >= t - 1 else dt + 1
    return j_r, j_t


def unit_transformation(d: Sequence[int], r: int, t: int) -> UnitTransformation:
    """Build the transformation ``(r, t)`` on ``d`` with its diagram columns.

    Raises:
        PreconditionError: unless ``1 <= r < t <= n + 1`` and ``d_r >= d_t + 2``.
    """
    d = _as_sequence(d)
    n = len(d)
    if not 1 <= r < t <= n + 1:
        raise PreconditionError(f"need 1 <= r < t <= {n + 1}, got r={r}, t={t}")
    if d.term(r) < d.term(t) + 2:
        raise PreconditionError(
            f"d_{r}={d.term(r)} is not at least d_{t}+2={d.term(t) + 2}"
        )
    return UnitTransformation(r, t, *_columns(d, r, t))


def is_canonical(d: Sequence[int], u: UnitTransformation) -> bool:
    """Whether ``u`` cannot be split into two or more unit transformations.

    ``t`` must be the first position after ``r`` with ``d_t <= d_r - 2`` and
    ``r`` the last position before ``t`` with ``d_r >= d_t + 2``.
    """
    d = _as_sequence(d)
    r, t = u.r, u.t
    dr, dt = d.term(r), d.term(t)
    if not (1 <= r < t <= len(d) + 1) or dr < dt + 2:
        return False
    if any(d.term(x) <= dr - 2 for x in range(r + 1, t)):
        return False
    if any(d.term(x) >= dt + 2 for x in range(r + 1, t)):
        return False
    return (u.j_r, u.j_t) == _columns(d, r, t)


def _coerce(d: DegreeSequence, u) -> UnitTransformation:
    if isinstance(u, UnitTransformation):
        if (u.j_r, u.j_t) != _columns(d, u.r, u.t):
            raise PreconditionError(f"column indices of {u} do not match {tuple(d)}")
        return unit_transformation(d, u.r, u.t)
    r, t = u
    return unit_transformation(d, r, t)


def apply_unit_transformation(d: Sequence[int], u) -> DegreeSequence:
    """Apply ``u`` (a :class:`UnitTransformation` or an ``(r, t)`` pair) and resort.

    When ``t = n + 1`` the sequence first gains one trailing zero.
    """
    d = _as_sequence(d)
    u = _coerce(d, u)
    terms = list(d.padded(max(len(d), u.t)))
    terms[u.r - 1] -= 1
    terms[u.t - 1] += 1
    return DegreeSequence(terms)


def canonical_unit_transformations(d: Sequence[int]) -> list[UnitTransformation]:
    """Every canonical unit transformation of ``d``, ordered by ``r``."""
    d = _as_sequence(d)
    n = len(d)
    out = []
    for r in range(1, n + 1):
        dr = d.term(r)
        if dr < 2:
            break
        t = next(x for x in range(r + 1, n + 2) if d.term(x) <= dr - 2)
        if t == r + 1 or d.term(r + 1) < d.term(t) + 2:
            out.append(UnitTransformation(r, t, *_columns(d, r, t)))
    return out


def delta_update(d: Sequence[int], u: UnitTransformation, k: int) -> int:
    """Predict ``Δ_k(e)`` for ``e`` the result of the canonical move ``u`` on ``d``.

    For ``k <= min(m(d), m(e))`` the change is the number of entries of
    ``{r, j_t}`` that are ``<= k`` minus the number of entries of
    ``{t, j_r}`` that are ``<= k`` (multiplicities counted).  When
    ``m(e) = m(d) + 1`` the new last difference is ``Δ_{m(d)}(d) + 2``.

    Raises:
        PreconditionError: ``u`` is not canonical for ``d``, or ``k`` falls
            outside both cases.
    """
    d = _as_sequence(d)
    u = _coerce(d, u)
    if not is_canonical(d, u):
        raise PreconditionError(f"{u} is not a canonical unit transformation of {tuple(d)}")
    e = apply_unit_transformation(d, u)
    dd = d.padded(len(e))
    m_d, m_e = modified_durfee(dd), modified_durfee(e)
    if 0 <= k <= min(m_d, m_e):
        gain = (u.r <= k) + (u.j_t <= k)
        loss = (u.t <= k) + (u.j_r <= k)
        return eg_difference(dd, k) + gain - loss
    if k == m_e > m_d:
        return eg_difference(dd, m_d) + 2
    raise PreconditionError(
        f"k={k} outside the update cases (m(d)={m_d}, m(e)={m_e})"
    )


def muirhead_chain(d: Sequence[int], e: Sequence[int]) -> list[DegreeSequence]:
    """A chain of canonical unit transformations leading from ``d`` down to ``e``.

    Both ends are zero-padded to a common length.  Each step applies the
    canonical transformation with the smallest ``r`` whose result still
    dominates ``e``; canonical moves are exactly the covering steps of the
    dominance order, so such a move exists until ``e`` is reached.

    Raises:
        PreconditionError: sums differ or ``d`` does not dominate ``e``.
    """
    d, e = _as_sequence(d), _as_sequence(e)
    if not dominates(d, e):
        raise PreconditionError(f"{tuple(d)} does not dominate {tuple(e)}")
    n = max(len(d), len(e))
    cur, target = d.padded(n), e.padded(n)
    chain = [cur]
    while cur != target:
        for u in canonical_unit_transformations(cur):
            if u.t > n:
                continue
            nxt = apply_unit_transformation(cur, u)
            if dominates(nxt, target):
                break
        else:
            raise RuntimeError(f"no covering step from {tuple(cur)} toward {tuple(target)}")
        cur = nxt
        chain.append(cur)
    return chain


def rao_leq(e: Sequence[int], d: Sequence[int], vertex_limit: int = RAO_LIMIT) -> bool:
    """Whether some realization of ``d`` has an induced subgraph realizing ``e``.

    Searches every labeled realization of ``d`` and every vertex subset of
    size ``len(e)``; desk scale only.

    Raises:
        NotGraphicalError: either sequence is not graphical.
        SizeLimitError: ``len(d) > vertex_limit``.
    """
    e, d = require_graphical(e), require_graphical(d)
    if len(d) > vertex_limit:
        raise SizeLimitError(f"Rao search is capped at n={vertex_limit}; got n={len(d)}")
    if len(e) > len(d) or e.total > d.total:
        return False
    if e == d:
        return True
    target = list(e)
    subsets = [
        (sum(1 << v for v in combo), combo)
        for combo in itertools.combinations(range(len(d)), len(e))
    ]
    for g in iter_labeled_realizations(d, limit=vertex_limit):
        masks = g.masks
        for smask, combo in subsets:
            degs = sorted(((masks[v] & smask).bit_count() for v in combo), reverse=True)
            if degs == target:
                return True
    return False
