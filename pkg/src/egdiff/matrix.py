"""Corrected Ferrers diagrams and Erdős–Gallai difference matrices.

Diagonal positions are "stars": they print as ``*`` but take the numeric
value 0 in every computation.  Matrices are dense int64 arrays.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .core import DegreeSequence, PreconditionError, _as_sequence

__all__ = [
    "StarMatrix",
    "ferrers",
    "difference_matrix",
    "antitranspose",
    "sigma",
    "sigma_all",
    "check_islands",
    "format_matrix",
]

STAR = "*"


@dataclass(frozen=True, eq=False)
class StarMatrix:
    """Square integer matrix whose diagonal is flagged as stars (value 0).

    ``kind`` is ``"F"`` for a Ferrers diagram and ``"M"`` for a difference
    matrix; it only affects presentation.
    """

    entries: np.ndarray
    kind: str = "M"
    sequence: DegreeSequence = field(default_factory=DegreeSequence)

    def __post_init__(self) -> None:
        a = np.array(self.entries, dtype=np.int64)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError(f"expected a square matrix, got shape {a.shape}")
        np.fill_diagonal(a, 0)
        a.setflags(write=False)
        object.__setattr__(self, "entries", a)

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    def __array__(self, dtype=None, copy=None):
        return self.entries if dtype is None else self.entries.astype(dtype)

    def __eq__(self, other: object) -> bool:
        other_entries = other.entries if isinstance(other, StarMatrix) else other
        try:
            return bool(np.array_equal(self.entries, np.asarray(other_entries)))
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self) -> int:
        return hash((self.entries.shape, self.entries.tobytes()))

    def tolist(self) -> list[list[int]]:
        return self.entries.tolist()

    def __str__(self) -> str:
        return format_matrix(self.entries)


def _check_fits(d: DegreeSequence) -> None:
    n = len(d)
    if n and d[0] > n - 1:
        raise PreconditionError(
            f"degree {d[0]} cannot fit in a row of a {n}x{n} diagram"
        )


def ferrers(d: Sequence[int]) -> StarMatrix:
    """Corrected Ferrers diagram: row ``i`` has ones in its first ``d_i``
    off-diagonal columns.

    Raises:
        PreconditionError: if some ``d_i > n - 1``.
    """
    d = _as_sequence(d)
    _check_fits(d)
    n = len(d)
    f = np.zeros((n, n), dtype=np.int64)
    for i, di in enumerate(d):
        # off-diagonal column order skips column i
        cols = np.arange(di)
        cols[cols >= i] += 1
        f[i, cols] = 1
    return StarMatrix(f, kind="F", sequence=d)


def difference_matrix(d: Sequence[int]) -> StarMatrix:
    """``M(d) = F(d)^T - F(d)``, skew-symmetric with entries in {-1, 0, 1}."""
    f = ferrers(d)
    return StarMatrix(f.entries.T - f.entries, kind="M", sequence=f.sequence)


def antitranspose(m) -> np.ndarray:
    """Transpose about the antidiagonal (works for rectangular input).

    >>> antitranspose([[1, 2, 3], [4, 5, 6]]).tolist()
    [[6, 3], [5, 2], [4, 1]]
    """
    a = np.asarray(m)
    return np.ascontiguousarray(a[::-1, ::-1].T)


def sigma_all(d: Sequence[int]) -> np.ndarray:
    """``sigma(d, i)`` for ``i = 0..n``: sums of the first ``i`` rows of ``M(d)``."""
    rows = difference_matrix(d).entries.sum(axis=1)
    out = np.zeros(rows.size + 1, dtype=np.int64)
    np.cumsum(rows, out=out[1:])
    return out


def sigma(d: Sequence[int], i: int) -> int:
    d = _as_sequence(d)
    if not 0 <= i <= len(d):
        raise PreconditionError(f"i={i} outside 0..{len(d)}")
    return int(sigma_all(d)[i])


def _lines_ok(a: np.ndarray) -> bool:
    for line in a:
        nz = np.flatnonzero(line)
        if nz.size >= 2 and np.any(line[nz[0] : nz[-1] + 1] != line[nz[0]]):
            return False
    return True


def check_islands(m) -> bool:
    """Check the two "island" properties of a difference matrix.

    1. Two nonzero entries in one row or column are equal, and so is every
       entry between them.
    2. No 2x2 submatrix (rows ``i1 < i2``, columns ``j1 < j2``) has the
       shape ``[[a, b], [0, c]]`` with ``a`` and ``c`` nonzero.

    Stars count as zeros.
    """
    a = np.array(m, dtype=np.int64)
    np.fill_diagonal(a, 0)
    if not (_lines_ok(a) and _lines_ok(a.T)):
        return False
    nonzero = a != 0
    n_cols = a.shape[1]
    for i2 in range(1, a.shape[0]):
        nz2 = np.flatnonzero(nonzero[i2])
        if nz2.size == 0:
            continue
        last_c = nz2[-1]
        # candidate "a" entries: nonzero above, sitting over a zero in row i2
        cand = nonzero[:i2] & ~nonzero[i2]
        has = cand.any(axis=1)
        if not has.any():
            continue
        first_a = np.where(has, cand.argmax(axis=1), n_cols)
        if np.any(first_a < last_c):
            return False
    return True


def format_matrix(m, star: str = STAR) -> str:
    """Render a square matrix with ``star`` on the diagonal, columns right-aligned."""
    a = np.asarray(m)
    n = a.shape[0]
    cells = [
        [star if i == j else str(int(a[i, j])) for j in range(a.shape[1])]
        for i in range(n)
    ]
    width = max((len(c) for row in cells for c in row), default=1)
    return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)
