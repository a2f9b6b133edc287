"""Hypothesis strategies for digraphs."""

from hypothesis import strategies as st

from coreflex import Digraph, MultiDigraph


@st.composite
def digraphs(draw, max_vertices=8):
    n = draw(st.integers(0, max_vertices))
    vs = [f"v{i}" for i in range(n)]
    pairs = [(u, v) for u in vs for v in vs]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Digraph(vs, chosen)


@st.composite
def multidigraphs(draw, max_vertices=6, max_edges=10):
    n = draw(st.integers(1, max_vertices))
    vs = [f"v{i}" for i in range(n)]
    pairs = draw(st.lists(st.tuples(st.sampled_from(vs), st.sampled_from(vs)), max_size=max_edges))
    return MultiDigraph.from_pairs(pairs, vs)
