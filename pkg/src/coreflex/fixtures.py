"""Small named digraphs used in examples, tests and benchmarks."""

from importlib import resources

from coreflex.digraph import Digraph, MultiDigraph
from coreflex.edgelist import parse_edge_list


def d1_text() -> str:
    return resources.files("coreflex").joinpath("data/d1.txt").read_text(encoding="utf-8")


def d1() -> Digraph:
    """The seven-vertex worked example shipped as ``data/d1.txt``."""
    return parse_edge_list(d1_text())


def cycle(n: int, prefix: str = "c") -> Digraph:
    vs = [f"{prefix}{i}" for i in range(n)]
    return Digraph(vs, [(vs[i], vs[(i + 1) % n]) for i in range(n)])


def path(n: int, prefix: str = "p") -> Digraph:
    vs = [f"{prefix}{i}" for i in range(n)]
    return Digraph(vs, [(vs[i], vs[i + 1]) for i in range(n - 1)])


def complete_with_loops(n: int) -> Digraph:
    vs = [str(i + 1) for i in range(n)]
    return Digraph(vs, [(u, v) for u in vs for v in vs])


def bouquet(loops: int, vertex: str = "v") -> MultiDigraph:
    """One vertex carrying ``loops`` loops."""
    return MultiDigraph.from_pairs([(vertex, vertex)] * loops)
