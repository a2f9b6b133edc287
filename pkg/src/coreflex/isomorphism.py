"""Backtracking isomorphism test for small digraphs and multidigraphs.

Meant for oracle checks in tests; there is no canonical labelling here.
"""

from __future__ import annotations

from collections import Counter

from coreflex.digraph import Digraph, MultiDigraph
from coreflex.errors import DomainError, InstanceTooLarge

MAX_VERTICES = 12


def _edge_counts(g) -> tuple[tuple[str, ...], Counter]:
    if isinstance(g, Digraph):
        return g.vertices, Counter(g.edges())
    if isinstance(g, MultiDigraph):
        return g.vertices, g.multiplicities()
    raise DomainError(f"expected Digraph or MultiDigraph, got {type(g).__name__}")


def _signature(vertices, counts):
    outd = Counter()
    ind = Counter()
    loops = Counter()
    for (u, v), k in counts.items():
        outd[u] += k
        ind[v] += k
        if u == v:
            loops[u] += k
    return {v: (outd[v], ind[v], loops[v]) for v in vertices}


def find_isomorphism(g, h, max_vertices: int = MAX_VERTICES) -> dict[str, str] | None:
    """Return a vertex bijection ``g -> h`` preserving edge multiplicities, or None.

    Both arguments must be of the same kind.  Raises :class:`InstanceTooLarge`
    when either side has more than ``max_vertices`` vertices.
    """
    if type(g) is not type(h):
        raise DomainError("cannot compare a Digraph with a MultiDigraph")
    gv, gc = _edge_counts(g)
    hv, hc = _edge_counts(h)
    if max(len(gv), len(hv)) > max_vertices:
        raise InstanceTooLarge(
            f"isomorphism check limited to {max_vertices} vertices, got {len(gv)} and {len(hv)}"
        )
    if len(gv) != len(hv) or sum(gc.values()) != sum(hc.values()):
        return None
    gsig = _signature(gv, gc)
    hsig = _signature(hv, hc)
    if sorted(gsig.values()) != sorted(hsig.values()):
        return None

    # Most constrained vertices first: rare signatures, then high degree.
    freq = Counter(gsig.values())
    order = sorted(gv, key=lambda v: (freq[gsig[v]], -sum(gsig[v])))
    candidates = {v: [w for w in hv if hsig[w] == gsig[v]] for v in gv}
    mapping: dict[str, str] = {}
    used: set[str] = set()

    def consistent(v: str, w: str) -> bool:
        if gc.get((v, v), 0) != hc.get((w, w), 0):
            return False
        for u, x in mapping.items():
            if gc.get((v, u), 0) != hc.get((w, x), 0):
                return False
            if gc.get((u, v), 0) != hc.get((x, w), 0):
                return False
        return True

    def extend(k: int) -> bool:
        if k == len(order):
            return True
        v = order[k]
        for w in candidates[v]:
            if w in used or not consistent(v, w):
                continue
            mapping[v] = w
            used.add(w)
            if extend(k + 1):
                return True
            del mapping[v]
            used.discard(w)
        return False

    if extend(0):
        return {v: mapping[v] for v in gv}
    return None


def isomorphic(g, h, max_vertices: int = MAX_VERTICES) -> bool:
    return find_isomorphism(g, h, max_vertices) is not None
