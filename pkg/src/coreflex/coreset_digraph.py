"""The coreset digraph ``Y(D)`` and its iteration to a fixpoint."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple

from coreflex.coresets import coreset_partition
from coreflex.digraph import Digraph, alpha
from coreflex.errors import ConvergenceError

__all__ = [
    "CoresetDigraph",
    "YSequence",
    "Shape",
    "FixpointShape",
    "coreset_digraph",
    "iterate_coreset_digraph",
    "classify_fixpoint",
    "complexity_index",
]


class CoresetDigraph(NamedTuple):
    digraph: Digraph
    members: dict[str, frozenset[str]]


def coreset_digraph(d: Digraph) -> CoresetDigraph:
    """Quotient of ``d`` by its nonempty coresets, labelled ``U1..Um`` in class order.

    ``U_i -> U_j`` is an edge iff the successor set of ``U_i`` meets ``U_j``.
    """
    partition = coreset_partition(d)
    labels = [f"U{i + 1}" for i in range(len(partition))]
    members = dict(zip(labels, partition.classes))
    edges = []
    for li, ui in members.items():
        succ = alpha(d, ui)
        edges.extend((li, lj) for lj, uj in members.items() if succ & uj)
    return CoresetDigraph(Digraph(labels, edges), members)


@dataclass(frozen=True)
class YSequence:
    """Stages ``D, Y(D), ..., Y^k(D)`` up to the first fixpoint.

    ``membership_maps[k]`` sends each stage-k vertex to the original vertices
    it stands for.
    """

    stages: tuple[Digraph, ...]
    membership_maps: tuple[dict[str, frozenset[str]], ...]

    @property
    def fixpoint_index(self) -> int:
        return len(self.stages) - 1

    @property
    def limit(self) -> Digraph:
        return self.stages[-1]


def iterate_coreset_digraph(d: Digraph, max_steps: int | None = None) -> YSequence:
    """Apply ``Y`` until the digraph stops shrinking.

    ``max_steps`` bounds the fixpoint index; the index never exceeds the
    number of vertices, which is the default bound.
    """
    if max_steps is None:
        max_steps = len(d)
    stages = [d]
    maps = [{v: frozenset([v]) for v in d.vertices}]
    for _ in range(max_steps + 1):
        current = stages[-1]
        nxt, members = coreset_digraph(current)
        if len(nxt) == len(current):
            relabel = {next(iter(m)): lab for lab, m in members.items()}
            same = Digraph(nxt.vertices, [(relabel[u], relabel[v]) for u, v in current.edges()])
            if same != nxt:
                raise AssertionError("order-preserving coreset digraph differs from its input")
            return YSequence(tuple(stages), tuple(maps))
        prev = maps[-1]
        maps.append({lab: frozenset().union(*(prev[x] for x in m)) for lab, m in members.items()})
        stages.append(nxt)
    if max_steps >= len(d):
        raise AssertionError("coreset digraph iteration exceeded the vertex count")
    raise ConvergenceError(f"no fixpoint within {max_steps} steps")


class Shape(enum.Enum):
    IS_FIXED_PATH = "path"
    IS_FIXED_CYCLE_WITH_TAIL = "cycle-with-tail"
    NOT_FIXED = "not-fixed"
    NOT_APPLICABLE = "not-applicable"


@dataclass(frozen=True)
class FixpointShape:
    shape: Shape
    cycle_length: int = 0
    tail_length: int = 0
    note: str = ""


def _weak_components(d: Digraph) -> int:
    parent = list(range(len(d)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for u, v in d.edges():
        parent[find(d.index(u))] = find(d.index(v))
    return len({find(i) for i in range(len(d))})


def classify_fixpoint(d: Digraph) -> FixpointShape:
    """Classify ``d`` as a fixed path, a fixed cycle with a tail, or not fixed.

    Path length and tail length count edges.
    """
    if len(d) == 0:
        return FixpointShape(Shape.NOT_APPLICABLE, note="empty digraph")
    if len(d.sinks()) >= 2 or any(d.in_degree(v) >= 2 for v in d.vertices):
        return FixpointShape(Shape.NOT_FIXED)
    if _weak_components(d) > 1:
        return FixpointShape(
            Shape.NOT_APPLICABLE, note=f"fixed but has {_weak_components(d)} weak components"
        )
    n = len(d)
    if d.edge_count() == n - 1:
        return FixpointShape(Shape.IS_FIXED_PATH, tail_length=n - 1)
    # n edges and in-degree exactly one everywhere: walking backwards n steps lands on the cycle.
    v = d.vertices[0]
    for _ in range(n):
        v = next(iter(d.pred[v]))
    cycle = 1
    w = next(iter(d.pred[v]))
    while w != v:
        w = next(iter(d.pred[w]))
        cycle += 1
    return FixpointShape(Shape.IS_FIXED_CYCLE_WITH_TAIL, cycle_length=cycle, tail_length=n - cycle)


def complexity_index(d: Digraph) -> int:
    """Number of coreset-digraph steps until the sequence stops changing."""
    return iterate_coreset_digraph(d).fixpoint_index
