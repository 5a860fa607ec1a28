"""Immutable undirected simple graphs stored in CSR form.

The complement graph is never materialized anywhere in this package.
Everything the solver needs from it follows from n, the per-node degrees,
and sum identities, so memory and runtime scale with the number of edges
of the input graph only.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np
from scipy import sparse


class InvalidEdge(ValueError):
    """Self-loop or endpoint outside [0, n)."""


@dataclass(frozen=True)
class NodeSet:
    """Strictly increasing tuple of node indices."""

    members: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.members and self.members[0] < 0:
            raise ValueError("node indices must be non-negative")
        for a, b in zip(self.members, self.members[1:]):
            if b <= a:
                raise ValueError("node indices must be strictly increasing")

    @classmethod
    def of(cls, nodes: Iterable[int]) -> "NodeSet":
        """Build from any iterable; sorts and deduplicates."""
        return cls(tuple(sorted({int(v) for v in nodes})))

    @property
    def size(self) -> int:
        return len(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __contains__(self, v: object) -> bool:
        i = bisect_left(self.members, v)
        return i < len(self.members) and self.members[i] == v


class Graph:
    """Undirected simple graph on nodes 0..n-1 with sorted CSR adjacency.

    Instances are immutable after construction and safe to share across
    threads. The scipy adjacency matrix is built lazily on first use; the
    unsynchronized cache is a benign race under the GIL since concurrent
    builders produce equal objects.
    """

    __slots__ = ("n", "m", "indptr", "indices", "degrees", "max_degree", "_csr")

    def __init__(self, n: int, indptr: np.ndarray, indices: np.ndarray):
        self.n = int(n)
        self.indptr = indptr
        self.indices = indices
        self.m = int(indices.size // 2)
        self.degrees = np.diff(indptr.astype(np.int64))
        self.max_degree = int(self.degrees.max()) if self.n else 0
        for arr in (self.indptr, self.indices, self.degrees):
            arr.setflags(write=False)
        self._csr = None

    @classmethod
    def from_edge_list(cls, n: int, edges) -> "Graph":
        """Build from (u, v) pairs; duplicates and mirrored pairs collapse.

        Accepts any iterable of pairs or an (m, 2) integer array.
        """
        if n < 0:
            raise ValueError("node count must be non-negative")
        if isinstance(edges, np.ndarray):
            e = edges.astype(np.int64, copy=False).reshape(-1, 2)
        else:
            e = np.asarray(list(edges), dtype=np.int64).reshape(-1, 2)
        if e.size:
            if e.min() < 0 or e.max() >= n:
                raise InvalidEdge("edge endpoint outside [0, n)")
            if (e[:, 0] == e[:, 1]).any():
                raise InvalidEdge("self-loops are not allowed")
            lo = np.minimum(e[:, 0], e[:, 1])
            hi = np.maximum(e[:, 0], e[:, 1])
            e = np.unique(np.stack([lo, hi], axis=1), axis=0)
        src = np.concatenate([e[:, 0], e[:, 1]])
        dst = np.concatenate([e[:, 1], e[:, 0]])
        order = np.lexsort((dst, src))
        # int32 indices keep the scipy matvec path copy-free; 2^31 directed
        # entries is far beyond this package's scale
        if src.size >= 2**31:
            raise InvalidEdge("graph too large for 32-bit adjacency indices")
        indices = dst[order].astype(np.int32)
        counts = np.bincount(src, minlength=n)
        indptr = np.zeros(n + 1, dtype=np.int32)
        np.cumsum(counts, out=indptr[1:])
        return cls(n, indptr, indices)

    def neighbors(self, v: int) -> np.ndarray:
        """Sorted neighbor indices of v (read-only view)."""
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    def degree(self, v: int) -> int:
        return int(self.degrees[v])

    def complement_degree(self, v: int) -> int:
        """Degree of v in the complement graph: n - 1 - d(v)."""
        if not 0 <= v < self.n:
            raise IndexError(f"node {v} outside [0, {self.n})")
        return self.n - 1 - int(self.degrees[v])

    def has_edge(self, u: int, v: int) -> bool:
        row = self.neighbors(u)
        i = int(np.searchsorted(row, v))
        return i < row.size and int(row[i]) == v

    def is_independent(self, s: NodeSet) -> bool:
        """True iff no edge joins two members of s."""
        mask = np.zeros(self.n, dtype=bool)
        members = list(s)
        mask[members] = True
        return not any(mask[self.neighbors(v)].any() for v in members)

    def is_maximal_independent(self, s: NodeSet) -> bool:
        """True iff s is independent and every outside node has a neighbor in s."""
        if not self.is_independent(s):
            return False
        covered = np.zeros(self.n, dtype=bool)
        covered[list(s)] = True
        for v in s:
            covered[self.neighbors(v)] = True
        return bool(covered.all())

    def edge_array(self) -> np.ndarray:
        """(m, 2) array of edges with u < v, lexicographically sorted."""
        src = np.repeat(np.arange(self.n, dtype=np.int64), np.diff(self.indptr))
        keep = src < self.indices
        return np.stack([src[keep], self.indices[keep].astype(np.int64)], axis=1)

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, v in self.edge_array():
            yield int(u), int(v)

    def adjacency_csr(self) -> sparse.csr_matrix:
        """Adjacency matrix as float64 scipy CSR, cached after first use."""
        if self._csr is None:
            data = np.ones(self.indices.size, dtype=np.float64)
            csr = sparse.csr_matrix(
                (data, self.indices, self.indptr), shape=(self.n, self.n)
            )
            csr.has_sorted_indices = True
            self._csr = csr
        return self._csr

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and np.array_equal(self.indptr, other.indptr)
            and np.array_equal(self.indices, other.indices)
        )

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"
