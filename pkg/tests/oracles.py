"""Independent reference implementations used only by the tests.

Nothing here touches the bitmask kernels or the closure iteration; each
oracle works from plain edge sets by enumeration.
"""

from __future__ import annotations

import itertools
import random
from collections import Counter

from coreflex import Digraph, MultiDigraph


def edge_set(d: Digraph) -> set[tuple[str, str]]:
    return set(d.edges())


def succ(d: Digraph, v: str) -> set[str]:
    return {y for x, y in edge_set(d) if x == v}


def pred(d: Digraph, v: str) -> set[str]:
    return {x for x, y in edge_set(d) if y == v}


def count_walks(d: Digraph, n: int) -> dict[tuple[str, str], int]:
    """Exact number of length-n walks between every ordered pair, by enumeration."""
    edges = edge_set(d)
    out = {v: [y for x, y in edges if x == v] for v in d.vertices}
    counts: Counter = Counter()

    def walk(start, cur, left):
        if left == 0:
            counts[start, cur] += 1
            return
        for nxt in out[cur]:
            walk(start, nxt, left - 1)

    for v in d.vertices:
        walk(v, v, n)
    return {(u, v): counts[u, v] for u in d.vertices for v in d.vertices}


class UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        self.parent[self.find(a)] = self.find(b)

    def groups(self):
        out: dict = {}
        for x in self.parent:
            out.setdefault(self.find(x), set()).add(x)
        return [frozenset(g) for g in out.values()]


def common_successor_coresets(d: Digraph) -> set[frozenset[str]]:
    """Nontrivial coresets as components of "shares a successor" among non-sinks."""
    nonsinks = [v for v in d.vertices if succ(d, v)]
    uf = UnionFind(nonsinks)
    for u, x in itertools.combinations(nonsinks, 2):
        if succ(d, u) & succ(d, x):
            uf.union(u, x)
    return set(uf.groups())


def brute_force_coresets(d: Digraph) -> set[frozenset[str]]:
    """Minimal nonempty sets U with pred(succ(U)) == U, by subset enumeration."""

    def beta_alpha(s):
        a = set().union(*(succ(d, v) for v in s))
        return set().union(*(pred(d, w) for w in a)) if a else set()

    fixed = []
    vs = list(d.vertices)
    for r in range(1, len(vs) + 1):
        for combo in itertools.combinations(vs, r):
            s = set(combo)
            if beta_alpha(s) == s and not any(f <= s for f in fixed):
                fixed.append(frozenset(s))
    return set(fixed)


def contract(d: Digraph, classes) -> set[tuple[int, int]]:
    """Quotient edge set on class indices after identifying each class."""
    where = {v: i for i, c in enumerate(classes) for v in c}
    return {(where[u], where[v]) for u, v in edge_set(d)}


def naive_line_digraph(m: MultiDigraph) -> set[tuple[str, str]]:
    return {(e, f) for e, _, he in m.edges for f, tf, _ in m.edges if he == tf}


def all_digraphs(n: int):
    """Every digraph (loops allowed) on vertices '0'..'n-1'."""
    vs = [str(i) for i in range(n)]
    pairs = [(u, v) for u in vs for v in vs]
    for bits in range(1 << len(pairs)):
        yield Digraph(vs, [p for k, p in enumerate(pairs) if (bits >> k) & 1])


def random_digraph(rng: random.Random, max_n: int = 8, density: float | None = None) -> Digraph:
    n = rng.randint(0, max_n)
    p = rng.random() if density is None else density
    vs = [f"v{i}" for i in range(n)]
    return Digraph(vs, [(u, v) for u in vs for v in vs if rng.random() < p])


def random_multidigraph(rng: random.Random, max_n: int = 6, max_e: int = 10) -> MultiDigraph:
    n = rng.randint(1, max_n)
    vs = [f"v{i}" for i in range(n)]
    pairs = [(rng.choice(vs), rng.choice(vs)) for _ in range(rng.randint(0, max_e))]
    return MultiDigraph.from_pairs(pairs, vs)


def random_closed_multidigraph(rng: random.Random, max_n: int = 4, max_extra: int = 3) -> MultiDigraph:
    """Random multidigraph without sources or sinks: a random permutation plus extra edges."""
    n = rng.randint(1, max_n)
    vs = [f"v{i}" for i in range(n)]
    perm = vs[:]
    rng.shuffle(perm)
    pairs = list(zip(vs, perm))
    pairs += [(rng.choice(vs), rng.choice(vs)) for _ in range(rng.randint(0, max_extra))]
    rng.shuffle(pairs)
    return MultiDigraph.from_pairs(pairs, vs)


def random_closed_digraph(rng: random.Random, max_n: int = 6) -> Digraph:
    """Random simple digraph without sources or sinks."""
    n = rng.randint(1, max_n)
    vs = [f"v{i}" for i in range(n)]
    perm = vs[:]
    rng.shuffle(perm)
    p = rng.random() * 0.5
    edges = set(zip(vs, perm)) | {(u, v) for u in vs for v in vs if rng.random() < p}
    return Digraph(vs, sorted(edges))
