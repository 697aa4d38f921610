"""Small-graph machinery used as a brute-force oracle.

Vertices of a :class:`Graph` are ``0..n-1``.  A *labeled realization* of a
degree sequence ``d`` is a simple graph in which vertex ``v`` has degree
``d[v]`` exactly, i.e. degrees are pinned to sorted positions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Sequence

import numpy as np

from .core import (
    DegreeSequence,
    PreconditionError,
    SizeLimitError,
    _as_sequence,
    is_graphical_full,
    require_graphical,
)

__all__ = [
    "Graph",
    "ForcedPair",
    "ENUMERATION_LIMIT",
    "SPLITTANCE_LIMIT",
    "havel_hakimi",
    "iter_labeled_realizations",
    "enumerate_labeled_realizations",
    "splittance_bruteforce",
    "forcible_pairs",
]

ENUMERATION_LIMIT = 9
SPLITTANCE_LIMIT = 12


@dataclass(frozen=True)
class Graph:
    """Simple labeled graph on vertices ``0..n-1``."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()) -> None:
        norm = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside 0..{n - 1}")
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "edges", frozenset(norm))

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Neighbourhood of each vertex as a bitmask."""
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return tuple(adj)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def degrees(self) -> list[int]:
        return [m.bit_count() for m in self.masks]

    def degree_sequence(self) -> DegreeSequence:
        return DegreeSequence(self.degrees())

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def complement(self) -> "Graph":
        return Graph(
            self.n,
            (e for e in itertools.combinations(range(self.n), 2) if e not in self.edges),
        )

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph, relabeled ``0..len(vertices)-1`` in the given order."""
        vs = list(vertices)
        pos = {v: i for i, v in enumerate(vs)}
        return Graph(
            len(vs),
            ((pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos),
        )

    def adjacency(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v in self.edges:
            a[u, v] = a[v, u] = 1
        return a

    def to_edge_list(self) -> str:
        """Text form: first line ``n``, then one sorted ``u v`` line per edge (1-based)."""
        lines = [str(self.n)]
        lines += [f"{u + 1} {v + 1}" for u, v in self.sorted_edges()]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_edge_list(cls, text: str) -> "Graph":
        rows = [ln.split() for ln in text.splitlines() if ln.strip()]
        if not rows or len(rows[0]) != 1:
            raise ValueError("edge list must start with a vertex count line")
        n = int(rows[0][0])
        edges = []
        for lineno, row in enumerate(rows[1:], start=2):
            if len(row) != 2:
                raise ValueError(f"line {lineno}: expected 'u v', got {' '.join(row)!r}")
            edges.append((int(row[0]) - 1, int(row[1]) - 1))
        return cls(n, edges)


@dataclass(frozen=True)
class ForcedPair:
    """Positions ``i < j`` (1-based) related the same way in every labeled realization.

    ``trivial`` marks pairs explained by an isolated (degree 0) or dominating
    (degree ``n-1``) vertex.
    """

    i: int
    j: int
    kind: str  # "adjacent" | "nonadjacent"
    trivial: bool = False


def _check_limit(n: int, limit: int | None, default: int, what: str) -> None:
    cap = default if limit is None else limit
    if n > cap:
        raise SizeLimitError(f"{what} is capped at n={cap}; got n={n}")


def havel_hakimi(d: Sequence[int]) -> Graph:
    """Deterministic Havel–Hakimi realization with vertex ``v`` of degree ``d[v]``.

    Each round takes the vertex of largest residual degree (lowest index on
    ties) and joins it to the vertices of next-largest residual degree.
    """
    d = require_graphical(d)
    rem = list(d)
    edges = []
    alive = set(range(len(d)))
    while alive:
        v = min(alive, key=lambda x: (-rem[x], x))
        alive.discard(v)
        need = rem[v]
        if need == 0:
            continue
        targets = sorted(alive, key=lambda x: (-rem[x], x))[:need]
        if len(targets) < need or rem[targets[-1]] == 0:
            raise RuntimeError(f"Havel-Hakimi stalled on graphical {tuple(d)}")
        for u in targets:
            rem[u] -= 1
            edges.append((v, u))
        rem[v] = 0
    return Graph(len(d), edges)


def iter_labeled_realizations(d: Sequence[int], limit: int | None = None) -> Iterator[Graph]:
    """Yield every labeled realization of ``d`` by backtracking.

    Vertices are filled in order; vertex ``u`` picks its later neighbours as
    a combination, and a branch survives only if the residual degrees of the
    later vertices are themselves graphical, so no branch dead-ends.
    """
    d = _as_sequence(d)
    _check_limit(len(d), limit, ENUMERATION_LIMIT, "realization enumeration")
    if not is_graphical_full(d):
        return
    n = len(d)
    rem = list(d)
    chosen: list[tuple[int, int]] = []

    def rec(u: int) -> Iterator[Graph]:
        if u == n:
            yield Graph(n, chosen)
            return
        cands = [v for v in range(u + 1, n) if rem[v] > 0]
        for combo in itertools.combinations(cands, rem[u]):
            for v in combo:
                rem[v] -= 1
                chosen.append((u, v))
            if is_graphical_full(rem[u + 1 :]):
                saved, rem[u] = rem[u], 0
                yield from rec(u + 1)
                rem[u] = saved
            for v in combo:
                rem[v] += 1
                chosen.pop()

    yield from rec(0)


def enumerate_labeled_realizations(d: Sequence[int], limit: int | None = None) -> list[Graph]:
    """All labeled realizations of ``d``, sorted by edge list.

    Raises:
        NotGraphicalError: ``d`` is not graphical.
        SizeLimitError: ``len(d)`` exceeds ``limit`` (default 9).
    """
    d = _as_sequence(d)
    _check_limit(len(d), limit, ENUMERATION_LIMIT, "realization enumeration")
    require_graphical(d)
    return sorted(iter_labeled_realizations(d, limit), key=Graph.sorted_edges)


@lru_cache(maxsize=None)
def _subset_indicator(n: int) -> np.ndarray:
    masks = np.arange(1 << n, dtype=np.int64)
    return ((masks[:, None] >> np.arange(n)) & 1).astype(np.int64)


def splittance_bruteforce(g: Graph, limit: int | None = None) -> int:
    """Minimum edge edits turning ``g`` into a split graph, by trying every clique side.

    For a candidate clique ``A`` and independent set ``B = V \\ A`` the cost
    is the number of non-edges inside ``A`` plus the number of edges inside
    ``B``.
    """
    _check_limit(g.n, limit, SPLITTANCE_LIMIT, "brute-force splittance")
    if g.n == 0:
        return 0
    x = _subset_indicator(g.n)
    adj = g.adjacency()
    inside = ((x @ adj) * x).sum(axis=1) // 2
    size = x.sum(axis=1)
    edges_a = inside
    edges_b = inside[::-1]  # complement subset sits at the mirrored index
    cost = size * (size - 1) // 2 - edges_a + edges_b
    return int(cost.min())


def forcible_pairs(d: Sequence[int], limit: int | None = None) -> list[ForcedPair]:
    """Pairs forced adjacent or forced nonadjacent across all labeled realizations."""
    graphs = enumerate_labeled_realizations(d, limit)
    d = _as_sequence(d)
    n = len(d)
    if not graphs:
        raise PreconditionError(f"{tuple(d)} has no realization")
    count: dict[tuple[int, int], int] = {}
    for g in graphs:
        for e in g.edges:
            count[e] = count.get(e, 0) + 1
    out = []
    for u, v in itertools.combinations(range(n), 2):
        c = count.get((u, v), 0)
        if c == len(graphs):
            kind = "adjacent"
        elif c == 0:
            kind = "nonadjacent"
        else:
            continue
        trivial = any(d[x] in (0, n - 1) for x in (u, v))
        out.append(ForcedPair(u + 1, v + 1, kind, trivial))
    return out
