"""Degree sequences and their Erdős–Gallai differences.

A degree sequence is stored sorted nonincreasing.  For ``0 <= k <= n`` the
``k``-th Erdős–Gallai difference is the slack of the ``k``-th Erdős–Gallai
inequality::

    delta_k(d) = k(k-1) + sum_{i>k} min(k, d_i) - sum_{i<=k} d_i

The *principal* differences are ``delta_1 .. delta_m`` where ``m`` is the
modified Durfee number ``max{i : d_i >= i-1}``.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "DegreeSequence",
    "DifferenceList",
    "EGDiffError",
    "InvalidDegreeError",
    "NotGraphicalError",
    "PreconditionError",
    "SizeLimitError",
    "new_degree_sequence",
    "modified_durfee",
    "eg_difference",
    "eg_differences",
    "principal_differences",
    "max_difference",
    "last_difference",
    "is_graphical_full",
    "is_graphical_li",
    "require_graphical",
]

# Hard ceiling on sequence length; keeps k(k-1) and degree sums inside int64.
MAX_LENGTH = 2**31


class EGDiffError(ValueError):
    """Base class for errors raised by this package."""


class InvalidDegreeError(EGDiffError):
    """A degree list contains a negative or non-integer entry."""


class PreconditionError(EGDiffError):
    """An operation was called outside its documented domain."""


class NotGraphicalError(PreconditionError):
    """An operation that assumes a graphical sequence got a non-graphical one."""


class SizeLimitError(EGDiffError):
    """A desk-scale (brute force) operation was asked to exceed its size cap."""


class DegreeSequence(tuple):
    """Immutable degree list, always sorted nonincreasing.

    Trailing zeros are kept: ``(2, 2, 1, 1, 0)`` and ``(2, 2, 1, 1)`` are
    different sequences.

    >>> DegreeSequence([1, 3, 1, 1])
    DegreeSequence(3, 1, 1, 1)
    """

    __slots__ = ()

    def __new__(cls, values: Iterable[int] = ()) -> "DegreeSequence":
        terms = []
        for v in values:
            if isinstance(v, bool) or int(v) != v:
                raise InvalidDegreeError(f"degree {v!r} is not an integer")
            v = int(v)
            if v < 0:
                raise InvalidDegreeError(f"negative degree {v}")
            terms.append(v)
        if len(terms) > MAX_LENGTH:
            raise InvalidDegreeError(f"sequence longer than {MAX_LENGTH}")
        terms.sort(reverse=True)
        return super().__new__(cls, terms)

    def __repr__(self) -> str:
        return f"DegreeSequence({', '.join(map(str, self))})"

    @property
    def n(self) -> int:
        return len(self)

    @property
    def total(self) -> int:
        return sum(self)

    def term(self, i: int) -> int:
        """1-based access ``d_i``; positions past the end read as 0."""
        if i < 1:
            raise IndexError(i)
        return self[i - 1] if i <= len(self) else 0

    def padded(self, length: int) -> "DegreeSequence":
        """Append zeros up to ``length`` terms (never truncates)."""
        if length <= len(self):
            return self
        return DegreeSequence(tuple(self) + (0,) * (length - len(self)))

    def as_array(self) -> np.ndarray:
        return np.asarray(self, dtype=np.int64)


class DifferenceList(tuple):
    """The principal differences ``(delta_1, ..., delta_m)`` of a sequence."""

    __slots__ = ()

    def __repr__(self) -> str:
        return f"DifferenceList({', '.join(map(str, self))})"

    @property
    def last(self) -> int | None:
        return self[-1] if self else None

    @property
    def maximum(self) -> int | None:
        return max(self) if self else None


def new_degree_sequence(values: Iterable[int]) -> DegreeSequence:
    return DegreeSequence(values)


def _as_sequence(d: Sequence[int]) -> DegreeSequence:
    return d if isinstance(d, DegreeSequence) else DegreeSequence(d)


def modified_durfee(d: Sequence[int]) -> int:
    """Return ``m(d) = max{i : d_i >= i - 1}`` (0 for the empty sequence).

    The defining set is a prefix of ``1..n`` because ``d`` is nonincreasing
    while ``i - 1`` increases.
    """
    d = _as_sequence(d)
    m = 0
    for i, di in enumerate(d, start=1):
        if di < i - 1:
            break
        m = i
    return m


def eg_difference(d: Sequence[int], k: int) -> int:
    """Evaluate the ``k``-th Erdős–Gallai difference straight from its formula.

    Args:
        d: degree list (sorted on the way in).
        k: index with ``0 <= k <= n``; ``k`` may exceed ``m(d)``.

    Raises:
        PreconditionError: if ``k`` is out of range.
    """
    d = _as_sequence(d)
    if not 0 <= k <= len(d):
        raise PreconditionError(f"k={k} outside 0..{len(d)}")
    head = sum(d[:k])
    tail = sum(min(k, di) for di in d[k:])
    return k * (k - 1) + tail - head


def eg_differences(d: Sequence[int]) -> np.ndarray:
    """All differences ``delta_0 .. delta_n`` as an int64 array, in O(n + max d).

    Uses that the terms ``>= k`` of a nonincreasing list form a prefix of
    length ``c_k``, so ``sum_{i>k} min(k, d_i)`` splits into ``k`` times the
    number of indices in ``(k, c_k]`` plus the suffix sum past ``max(k, c_k)``.
    """
    a = _as_sequence(d).as_array()
    n = a.size
    ks = np.arange(n + 1, dtype=np.int64)
    # prefix[j] = d_1 + ... + d_j
    prefix = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(a, out=prefix[1:])
    # c[k] = #{i : d_i >= k}
    c = np.searchsorted(-a, -ks, side="right").astype(np.int64)
    cut = np.maximum(ks, c)
    tail = ks * np.maximum(c - ks, 0) + (prefix[n] - prefix[cut])
    return ks * (ks - 1) + tail - prefix


def principal_differences(d: Sequence[int]) -> DifferenceList:
    d = _as_sequence(d)
    m = modified_durfee(d)
    return DifferenceList(int(x) for x in eg_differences(d)[1 : m + 1])


def max_difference(d: Sequence[int]) -> int:
    """Largest principal difference ``delta*(d)``; undefined for ``()``."""
    diffs = principal_differences(d)
    if not diffs:
        raise PreconditionError("max_difference of the empty sequence")
    return max(diffs)


def last_difference(d: Sequence[int]) -> int:
    """``delta_{m(d)}(d)``, the final principal difference (0 for ``()``)."""
    diffs = principal_differences(d)
    return diffs[-1] if diffs else 0


def is_graphical_full(d: Sequence[int]) -> bool:
    """Erdős–Gallai test: even sum and every ``delta_k >= 0`` for ``1 <= k <= n``."""
    d = _as_sequence(d)
    if d.total % 2:
        return False
    return bool(np.all(eg_differences(d)[1:] >= 0))


def is_graphical_li(d: Sequence[int]) -> bool:
    """Same verdict as :func:`is_graphical_full`, checking only ``k <= m(d)``."""
    d = _as_sequence(d)
    if d.total % 2:
        return False
    m = modified_durfee(d)
    return bool(np.all(eg_differences(d)[1 : m + 1] >= 0))


def require_graphical(d: Sequence[int]) -> DegreeSequence:
    d = _as_sequence(d)
    if not is_graphical_full(d):
        raise NotGraphicalError(f"{tuple(d)} is not graphical")
    return d
