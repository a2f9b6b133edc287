"""Line digraph and nth-order line digraph recognition.

A digraph is a line digraph exactly when all vertices of each coreset have
the same successor set.  That test is the decision procedure used here; the
partition identity, the per-edge predecessor condition and the row/column
criterion are available as cross-checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from coreflex import kernels
from coreflex.coresets import CoresetPartition, coreset_partition, successor_partition
from coreflex.digraph import Count, Digraph, MultiDigraph, alpha, beta, power_digraph, walk_counts
from coreflex.errors import DomainError, NotALineDigraph

__all__ = [
    "Counterexample",
    "LineRecognitionResult",
    "UniquenessFailure",
    "OrderCheck",
    "NthOrderReport",
    "is_line_digraph",
    "geller_harary_partitions",
    "root_digraph",
    "richards_check",
    "nth_order_coresets",
    "i_uniqueness",
    "is_nth_order_line_digraph",
    "lift_coreset",
]


class Counterexample(NamedTuple):
    """Two vertices of one coreset with different successor sets."""

    coreset: frozenset[str]
    u: str
    x: str
    succ_u: frozenset[str]
    succ_x: frozenset[str]

    def __str__(self):
        return (
            f"coreset {sorted(self.coreset)} contains {self.u} and {self.x} with "
            f"successors {sorted(self.succ_u)} != {sorted(self.succ_x)}"
        )


@dataclass(frozen=True)
class LineRecognitionResult:
    is_line: bool
    partitions: tuple[list[frozenset[str]], list[frozenset[str]]] | None = None
    root: MultiDigraph | None = None
    counterexample: Counterexample | None = None

    def __bool__(self):
        return self.is_line


def _find_counterexample(d: Digraph, partition: CoresetPartition) -> Counterexample | None:
    for cls in partition.nontrivial:
        members = d.ordered(cls)
        first = members[0]
        succ = d.adj[first]
        for x in members[1:]:
            if d.adj[x] != succ:
                return Counterexample(cls, first, x, succ, d.adj[x])
    return None


def _check_predecessor_condition(d: Digraph, partition: CoresetPartition) -> None:
    for u, v in d.edges():
        if beta(d, [v]) != partition.class_of(u):
            raise AssertionError(f"edge {u}->{v}: predecessors of {v} differ from the coreset of {u}")


def _build_root(d: Digraph, partition: CoresetPartition) -> MultiDigraph:
    heads = partition.with_empty()
    tails = successor_partition(d, partition)
    names = [f"w{i}" for i in range(len(heads))]
    head_of = {v: j for j, s in enumerate(heads) for v in s}
    tail_of = {v: i for i, s in enumerate(tails) for v in s}
    edges = tuple((v, names[tail_of[v]], names[head_of[v]]) for v in d.vertices)
    return MultiDigraph(tuple(names), edges)


def is_line_digraph(d: Digraph) -> LineRecognitionResult:
    """Recognize a line digraph and, when it is one, reconstruct a root.

    The root's edges are named after the vertices of ``d``, so the line
    digraph of the root is ``d`` itself, label for label.
    """
    partition = coreset_partition(d)
    bad = _find_counterexample(d, partition)
    if bad is not None:
        return LineRecognitionResult(False, counterexample=bad)
    _check_predecessor_condition(d, partition)
    parts = (partition.with_empty(), successor_partition(d, partition))
    return LineRecognitionResult(True, partitions=parts, root=_build_root(d, partition))


def geller_harary_partitions(d: Digraph) -> tuple[list[frozenset[str]], list[frozenset[str]]]:
    """Aligned partitions ``A, B`` with the edge set equal to the union of ``A[i] x B[i]``."""
    result = is_line_digraph(d)
    if not result.is_line:
        raise NotALineDigraph(result.counterexample)
    return result.partitions


def root_digraph(d: Digraph) -> MultiDigraph:
    """A multidigraph whose line digraph is ``d``.

    Vertex ``w0`` stands for the empty class and ``wi`` for the i-th coreset;
    each vertex ``v`` of ``d`` becomes an edge named ``v``.
    """
    result = is_line_digraph(d)
    if not result.is_line:
        raise NotALineDigraph(result.counterexample)
    return result.root


def richards_check(d: Digraph) -> bool:
    """True iff any two adjacency rows, and any two columns, are identical or orthogonal."""
    return kernels.identical_or_disjoint(d.rows) and kernels.identical_or_disjoint(d.cols)


def _require_no_sources_or_sinks(d: Digraph) -> None:
    for v, r, c in zip(d.vertices, d.rows, d.cols):
        if r == 0:
            raise DomainError(f"vertex {v!r} is a sink; only source- and sink-free digraphs are supported")
        if c == 0:
            raise DomainError(f"vertex {v!r} is a source; only source- and sink-free digraphs are supported")


def nth_order_coresets(d: Digraph, n: int) -> CoresetPartition:
    """Coresets of the walk-power digraph ``D^n`` (host of the result is ``D^n``)."""
    _require_no_sources_or_sinks(d)
    return coreset_partition(power_digraph(d, n))


class UniquenessFailure(NamedTuple):
    coreset: frozenset[str]
    u: str
    w: str
    count: Count


class UniquenessResult(NamedTuple):
    passed: bool
    failure: UniquenessFailure | None


def i_uniqueness(d: Digraph, i: int) -> UniquenessResult:
    """Check that each ith-order coreset has exactly one i-walk to each ith-order successor."""
    return _uniqueness(d, nth_order_coresets(d, i), i)


def _uniqueness(d: Digraph, partition: CoresetPartition, i: int) -> UniquenessResult:
    power = partition.host
    counts = walk_counts(d, i)
    for cls in partition.classes:
        targets = power.ordered(alpha(power, cls))
        for u in power.ordered(cls):
            for w in targets:
                c = counts[u, w]
                if c != Count.ONE:
                    return UniquenessResult(False, UniquenessFailure(cls, u, w, c))
    return UniquenessResult(True, None)


@dataclass(frozen=True)
class OrderCheck:
    order: int
    coresets: CoresetPartition
    passed: bool
    failure: UniquenessFailure | None


@dataclass(frozen=True)
class NthOrderReport:
    n: int
    per_order: tuple[OrderCheck, ...]

    @property
    def is_nth_order_line(self) -> bool:
        return all(c.passed for c in self.per_order)

    def __bool__(self):
        return self.is_nth_order_line


def is_nth_order_line_digraph(d: Digraph, n: int) -> NthOrderReport:
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"order must be a positive integer, got {n!r}")
    _require_no_sources_or_sinks(d)
    checks = []
    for i in range(1, n + 1):
        partition = coreset_partition(power_digraph(d, i))
        passed, failure = _uniqueness(d, partition, i)
        checks.append(OrderCheck(i, partition, passed, failure))
    return NthOrderReport(n, tuple(checks))


def lift_coreset(d: Digraph, u: Iterable[str]) -> frozenset[str]:
    """Edges of ``d`` with head in ``u``, as vertices of ``line_digraph(d)``."""
    _require_no_sources_or_sinks(d)
    target = d.members(d.mask(u))
    return frozenset(eid for eid, _, head in MultiDigraph.from_digraph(d).edges if head in target)
