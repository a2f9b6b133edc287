"""Coresets: the coreflexive vertex sets of a digraph.

A nontrivial coreset is a minimal nonempty ``U`` with ``beta(alpha(U)) == U``;
the set of all sinks is the trivial coreset.  Together (with the empty class
kept by convention) they partition the vertex set, and so do their successor
sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

import numpy as np

from coreflex import kernels
from coreflex.digraph import Digraph, alpha
from coreflex.errors import DomainError

__all__ = [
    "CoresetPartition",
    "CorePart",
    "CoreDecomposition",
    "BlockedAdjacency",
    "coreset_closure",
    "coreset_partition",
    "successor_partition",
    "core_decomposition",
    "matrix_coreset_check",
    "blocked_adjacency",
]


@dataclass(frozen=True)
class CoresetPartition:
    """Coreset classes of ``host`` ordered by their first vertex.

    The conventional empty class is not stored; ``trivial_index`` points at
    the sink class, or is None when the host has no sinks.
    """

    host: Digraph
    classes: tuple[frozenset[str], ...]
    trivial_index: int | None

    def __len__(self):
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes)

    def __getitem__(self, i):
        return self.classes[i]

    @property
    def trivial(self) -> frozenset[str]:
        if self.trivial_index is None:
            return frozenset()
        return self.classes[self.trivial_index]

    @property
    def nontrivial(self) -> tuple[frozenset[str], ...]:
        return tuple(c for i, c in enumerate(self.classes) if i != self.trivial_index)

    def index_of(self, v: str) -> int:
        """Position of the class containing ``v``."""
        for i, c in enumerate(self.classes):
            if v in c:
                return i
        raise DomainError(f"unknown vertex {v!r}")

    def class_of(self, v: str) -> frozenset[str]:
        return self.classes[self.index_of(v)]

    def with_empty(self) -> list[frozenset[str]]:
        """Classes with the empty class prepended, as ``U_0, U_1, ..., U_m``."""
        return [frozenset(), *self.classes]


def coreset_closure(d: Digraph, seed: Iterable[str]) -> frozenset[str]:
    """Smallest set containing ``seed`` that is fixed by ``beta o alpha``.

    Started from a single vertex this is the coreset containing it.
    """
    m = d.mask(seed)
    if m == 0:
        raise DomainError("closure seed must be nonempty")
    rows = d.rows
    sinks = [v for v in d.members(m) if rows[d.index(v)] == 0]
    if sinks:
        raise DomainError(f"closure seed contains sink {d.ordered(sinks)[0]!r}")
    return d.members(kernels.closure(rows, d.cols, m))


def coreset_partition(d: Digraph) -> CoresetPartition:
    n = len(d)
    labels, trivial = kernels.coreset_labels(d.rows, d.cols, n)
    masks = [0] * (max(labels) + 1 if labels else 0)
    for v, lab in enumerate(labels):
        masks[lab] |= 1 << v
    return CoresetPartition(
        host=d,
        classes=tuple(d.members(m) for m in masks),
        trivial_index=trivial if trivial >= 0 else None,
    )


def successor_partition(d: Digraph, partition: CoresetPartition | None = None) -> list[frozenset[str]]:
    """Successor sets aligned with ``U_0 = {}, U_1, ..., U_m``.

    Entry 0 is the source set; the trivial class contributes an empty entry.
    """
    partition = partition or coreset_partition(d)
    return [alpha(d, u) for u in partition.with_empty()]


@dataclass(frozen=True)
class CorePart:
    coreset: frozenset[str]
    succ: frozenset[str]
    edges: frozenset[tuple[str, str]]

    def as_digraph(self, host: Digraph) -> Digraph:
        """The core subgraph on ``coreset | succ``, vertices in host order."""
        vs = self.coreset | self.succ
        return Digraph(
            [v for v in host.vertices if v in vs],
            sorted(self.edges, key=lambda e: (host.index(e[0]), host.index(e[1]))),
        )


@dataclass(frozen=True)
class CoreDecomposition:
    """Core subgraphs; ``parts[0]`` belongs to the empty class and has no edges."""

    host: Digraph
    parts: tuple[CorePart, ...]

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def digraphs(self) -> list[Digraph]:
        return [p.as_digraph(self.host) for p in self.parts]


def core_decomposition(d: Digraph, partition: CoresetPartition | None = None) -> CoreDecomposition:
    partition = partition or coreset_partition(d)
    parts = []
    for u, w in zip(partition.with_empty(), successor_partition(d, partition)):
        edges = frozenset((x, y) for x in u for y in d.adj[x] if y in w)
        parts.append(CorePart(u, w, edges))
    return CoreDecomposition(d, tuple(parts))


def _common_successor_connected(rows: list[int], members: list[int]) -> bool:
    """Whether ``members`` form one component under "share a successor"."""
    if not members:
        return False
    reached = {members[0]}
    frontier_succ = rows[members[0]]
    grew = True
    while grew:
        grew = False
        for v in members:
            if v not in reached and rows[v] & frontier_succ:
                reached.add(v)
                frontier_succ |= rows[v]
                grew = True
    return len(reached) == len(members)


def matrix_coreset_check(d: Digraph, u: Iterable[str]) -> bool:
    """Decide from adjacency rows alone whether ``u`` is a nontrivial coreset.

    The rows of ``u`` must be nonzero, orthogonal to every row outside ``u``,
    and no proper nonempty subset may share those properties; the last part
    holds exactly when ``u`` is connected under the common-successor relation.
    """
    m = d.mask(u)
    if m == 0:
        raise DomainError("candidate set must be nonempty")
    rows = d.rows
    inside = [i for i in range(len(rows)) if (m >> i) & 1]
    if any(rows[i] == 0 for i in inside):
        return False
    hit = 0
    for i in inside:
        hit |= rows[i]
    if any(rows[j] & hit for j in range(len(rows)) if not (m >> j) & 1):
        return False
    return _common_successor_connected(rows, inside)


class BlockedAdjacency(NamedTuple):
    """Adjacency matrix with rows grouped by coreset and columns by successor set.

    ``row_blocks[i]`` and ``col_blocks[i]`` give the sizes of the blocks for
    ``U_i`` and ``alpha(U_i)``, starting with the empty class.
    """

    row_order: tuple[str, ...]
    col_order: tuple[str, ...]
    matrix: np.ndarray
    row_blocks: tuple[int, ...]
    col_blocks: tuple[int, ...]


def blocked_adjacency(d: Digraph) -> BlockedAdjacency:
    partition = coreset_partition(d)
    row_sets = partition.with_empty()
    col_sets = successor_partition(d, partition)
    row_order = tuple(v for s in row_sets for v in d.ordered(s))
    col_order = tuple(v for s in col_sets for v in d.ordered(s))
    a = d.adjacency_matrix()
    ri = [d.index(v) for v in row_order]
    ci = [d.index(v) for v in col_order]
    matrix = a[np.ix_(ri, ci)] if a.size else np.zeros((len(ri), len(ci)), dtype=np.uint8)
    return BlockedAdjacency(
        row_order,
        col_order,
        matrix,
        tuple(len(s) for s in row_sets),
        tuple(len(s) for s in col_sets),
    )
