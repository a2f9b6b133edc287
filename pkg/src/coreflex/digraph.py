"""Digraph values and the basic operators on them.

Vertex labels are opaque strings.  Every digraph carries a fixed vertex
order (insertion order) and all iteration follows it, so results are
reproducible.  Internally adjacency is also kept as bitmask rows indexed by
that order; see :mod:`coreflex.kernels`.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

import numpy as np

from coreflex import kernels
from coreflex.errors import DomainError

__all__ = [
    "Digraph",
    "MultiDigraph",
    "Count",
    "SaturatingCountMatrix",
    "alpha",
    "beta",
    "reverse",
    "line_digraph",
    "iterated_line_digraph",
    "power_digraph",
    "walk_counts",
    "intersection_digraph",
]


class Digraph:
    """A simple directed graph: loops allowed, no multiple edges.

    Instances are immutable.  Two digraphs compare equal when they have the
    same vertex order and the same edges.
    """

    def __init__(self, vertices: Iterable[str] = (), edges: Iterable[tuple[str, str]] = ()):
        order: dict[str, int] = {}
        for v in vertices:
            order.setdefault(v, len(order))
        rows = [0] * len(order)
        for u, v in edges:
            try:
                rows[order[u]] |= 1 << order[v]
            except KeyError as exc:
                raise DomainError(f"edge ({u}, {v}) uses unknown vertex {exc.args[0]!r}") from None
        self._vertices = tuple(order)
        self._index = order
        self._rows = rows

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[str, str]], vertices: Iterable[str] = ()) -> Digraph:
        """Build a digraph whose vertex order is declared vertices, then first appearance in ``edges``."""
        edges = list(edges)
        order = list(vertices)
        for u, v in edges:
            order.append(u)
            order.append(v)
        return cls(order, edges)

    @classmethod
    def from_adjacency(cls, adj: Mapping[str, Iterable[str]]) -> Digraph:
        return cls(adj, ((u, v) for u, succ in adj.items() for v in succ))

    @classmethod
    def _from_rows(cls, vertices: Sequence[str], rows: list[int]) -> Digraph:
        g = cls.__new__(cls)
        g._vertices = tuple(vertices)
        g._index = {v: i for i, v in enumerate(g._vertices)}
        g._rows = list(rows)
        return g

    @property
    def vertices(self) -> tuple[str, ...]:
        return self._vertices

    @property
    def rows(self) -> list[int]:
        """Adjacency bitmask rows (a copy)."""
        return list(self._rows)

    @cached_property
    def cols(self) -> list[int]:
        return kernels.transpose(self._rows, len(self._rows))

    @cached_property
    def adj(self) -> dict[str, frozenset[str]]:
        return {v: self.members(self._rows[i]) for i, v in enumerate(self._vertices)}

    @cached_property
    def pred(self) -> dict[str, frozenset[str]]:
        cols = self.cols
        return {v: self.members(cols[i]) for i, v in enumerate(self._vertices)}

    def __len__(self) -> int:
        return len(self._vertices)

    def __contains__(self, v: object) -> bool:
        return v in self._index

    def __iter__(self):
        return iter(self._vertices)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self._vertices == other._vertices and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self._vertices, tuple(self._rows)))

    def __repr__(self) -> str:
        return f"Digraph(vertices={list(self._vertices)!r}, edges={self.edges()!r})"

    def index(self, v: str) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise DomainError(f"unknown vertex {v!r}") from None

    def mask(self, vertices: Iterable[str]) -> int:
        m = 0
        for v in vertices:
            m |= 1 << self.index(v)
        return m

    def members(self, mask: int) -> frozenset[str]:
        out = []
        while mask:
            low = mask & -mask
            out.append(self._vertices[low.bit_length() - 1])
            mask ^= low
        return frozenset(out)

    def ordered(self, vertices: Iterable[str]) -> list[str]:
        """Sort ``vertices`` by this digraph's vertex order."""
        return sorted(vertices, key=self.index)

    def edges(self) -> list[tuple[str, str]]:
        vs = self._vertices
        return [(vs[i], vs[j]) for i, r in enumerate(self._rows) for j in _bit_indices(r)]

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self._rows)

    def has_edge(self, u: str, v: str) -> bool:
        return bool((self._rows[self.index(u)] >> self.index(v)) & 1)

    def successors(self, v: str) -> frozenset[str]:
        self.index(v)
        return self.adj[v]

    def predecessors(self, v: str) -> frozenset[str]:
        self.index(v)
        return self.pred[v]

    def out_degree(self, v: str) -> int:
        return self._rows[self.index(v)].bit_count()

    def in_degree(self, v: str) -> int:
        return self.cols[self.index(v)].bit_count()

    def sources(self) -> frozenset[str]:
        return frozenset(v for v, c in zip(self._vertices, self.cols) if c == 0)

    def sinks(self) -> frozenset[str]:
        return frozenset(v for v, r in zip(self._vertices, self._rows) if r == 0)

    def subgraph(self, vertices: Iterable[str], edges: Iterable[tuple[str, str]]) -> Digraph:
        """Subdigraph on ``vertices`` (kept in host order) with the given edges."""
        keep = set(vertices)
        for u, v in edges:
            if not self.has_edge(u, v):
                raise DomainError(f"({u}, {v}) is not an edge of the host")
        return Digraph([v for v in self._vertices if v in keep], edges)

    def adjacency_matrix(self) -> np.ndarray:
        n = len(self._vertices)
        a = np.zeros((n, n), dtype=np.uint8)
        for i, j in ((i, j) for i, r in enumerate(self._rows) for j in _bit_indices(r)):
            a[i, j] = 1
        return a


def _bit_indices(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True)
class MultiDigraph:
    """A directed graph with parallel edges allowed.

    ``edges`` holds ``(edge_id, tail, head)`` triples; edge ids are unique.
    """

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str, str], ...]
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        vertices = tuple(dict.fromkeys(self.vertices))
        edges = tuple(tuple(e) for e in self.edges)
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", edges)
        known = set(vertices)
        ids = set()
        for eid, tail, head in edges:
            if tail not in known or head not in known:
                raise DomainError(f"edge {eid!r} uses a vertex outside the vertex set")
            if eid in ids:
                raise DomainError(f"duplicate edge id {eid!r}")
            ids.add(eid)
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(vertices)})

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[str, str]], vertices: Iterable[str] = ()) -> MultiDigraph:
        """Build from (tail, head) pairs, naming edges ``tail>head#k`` by occurrence."""
        pairs = list(pairs)
        order = list(vertices)
        seen: Counter = Counter()
        edges = []
        for tail, head in pairs:
            order += [tail, head]
            edges.append((f"{tail}>{head}#{seen[tail, head]}", tail, head))
            seen[tail, head] += 1
        return cls(tuple(order), tuple(edges))

    @classmethod
    def from_digraph(cls, d: Digraph) -> MultiDigraph:
        return cls.from_pairs(d.edges(), d.vertices)

    def pairs(self) -> list[tuple[str, str]]:
        return [(t, h) for _, t, h in self.edges]

    def multiplicities(self) -> Counter:
        return Counter(self.pairs())

    def in_degree(self, v: str) -> int:
        return sum(1 for _, _, h in self.edges if h == v)

    def out_degree(self, v: str) -> int:
        return sum(1 for _, t, _ in self.edges if t == v)

    def sources(self) -> frozenset[str]:
        heads = {h for _, _, h in self.edges}
        return frozenset(v for v in self.vertices if v not in heads)

    def sinks(self) -> frozenset[str]:
        tails = {t for _, t, _ in self.edges}
        return frozenset(v for v in self.vertices if v not in tails)


def alpha(d: Digraph, s: Iterable[str]) -> frozenset[str]:
    """Successor set of ``s``; the empty set maps to the sources of ``d``."""
    m = d.mask(s)
    if m == 0:
        return d.sources()
    return d.members(kernels.image(d.rows, m))


def beta(d: Digraph, s: Iterable[str]) -> frozenset[str]:
    """Predecessor set of ``s``; the empty set maps to the sinks of ``d``."""
    m = d.mask(s)
    if m == 0:
        return d.sinks()
    return d.members(kernels.image(d.cols, m))


def reverse(d: Digraph) -> Digraph:
    return Digraph._from_rows(d.vertices, d.cols)


def line_digraph(d: MultiDigraph | Digraph) -> Digraph:
    """The line digraph: one vertex per edge, ``e -> f`` iff head(e) == tail(f).

    A simple :class:`Digraph` is first converted with
    :meth:`MultiDigraph.from_digraph`.
    """
    if isinstance(d, Digraph):
        d = MultiDigraph.from_digraph(d)
    ids = [eid for eid, _, _ in d.edges]
    by_tail: dict[str, int] = {}
    for k, (_, tail, _) in enumerate(d.edges):
        by_tail[tail] = by_tail.get(tail, 0) | (1 << k)
    rows = [by_tail.get(head, 0) for _, _, head in d.edges]
    return Digraph._from_rows(ids, rows)


def iterated_line_digraph(d: MultiDigraph | Digraph, n: int) -> Digraph:
    if n < 1:
        raise DomainError("line digraph iteration order must be >= 1")
    out = line_digraph(d)
    for _ in range(n - 1):
        out = line_digraph(out)
    return out


def _check_order(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise DomainError(f"walk length must be a positive integer, got {n!r}")


def power_digraph(d: Digraph, n: int) -> Digraph:
    """Digraph with an edge ``uv`` iff ``d`` has a walk of length ``n`` from u to v."""
    _check_order(n)
    if n == 1:
        return d
    return Digraph._from_rows(d.vertices, kernels.bool_power(d.rows, n))


class Count(enum.IntEnum):
    """Walk counts saturated at two."""

    ZERO = 0
    ONE = 1
    MANY = 2

    def __add__(self, other):
        return Count(min(int(self) + int(other), 2))

    def __mul__(self, other):
        if self == 0 or other == 0:
            return Count.ZERO
        return Count(min(int(self) * int(other), 2))

    __radd__ = __add__
    __rmul__ = __mul__


@dataclass(frozen=True)
class SaturatingCountMatrix:
    """Square matrix over ``{ZERO, ONE, MANY}`` indexed by a vertex order."""

    vertices: tuple[str, ...]
    entries: tuple[tuple[Count, ...], ...]

    @property
    def order(self) -> int:
        return len(self.vertices)

    @classmethod
    def from_masks(cls, vertices, ge1, ge2):
        n = len(vertices)
        entries = tuple(
            tuple(Count(((ge1[i] >> j) & 1) + ((ge2[i] >> j) & 1)) for j in range(n))
            for i in range(n)
        )
        return cls(tuple(vertices), entries)

    def __getitem__(self, key: tuple[str, str]) -> Count:
        u, v = key
        idx = {x: i for i, x in enumerate(self.vertices)}
        return self.entries[idx[u]][idx[v]]

    def __matmul__(self, other: SaturatingCountMatrix) -> SaturatingCountMatrix:
        n = self.order
        entries = tuple(
            tuple(sum((self.entries[i][k] * other.entries[k][j] for k in range(n)), Count.ZERO)
                  for j in range(n))
            for i in range(n)
        )
        return SaturatingCountMatrix(self.vertices, entries)


def walk_counts(d: Digraph, n: int) -> SaturatingCountMatrix:
    """Number of length-``n`` walks between every ordered pair, saturated at MANY."""
    _check_order(n)
    ge1, ge2 = kernels.sat_power(d.rows, n)
    return SaturatingCountMatrix.from_masks(d.vertices, ge1, ge2)


def intersection_digraph(pairs: Iterable[tuple[str, Iterable, Iterable]]) -> Digraph:
    """Intersection digraph of labelled (source set, sink set) pairs.

    There is an edge ``u -> v`` iff the source set of ``u`` meets the sink set
    of ``v``.
    """
    labels: list[str] = []
    seen: set[str] = set()
    sources: list[frozenset] = []
    holders: dict[object, int] = {}
    for k, (label, src, snk) in enumerate(pairs):
        if label in seen:
            raise DomainError(f"duplicate label {label!r}")
        seen.add(label)
        labels.append(label)
        sources.append(frozenset(src))
        for x in snk:
            holders[x] = holders.get(x, 0) | (1 << k)
    rows = []
    for src in sources:
        acc = 0
        for x in src:
            acc |= holders.get(x, 0)
        rows.append(acc)
    return Digraph._from_rows(labels, rows)
