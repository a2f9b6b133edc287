import random

import pytest

from coreflex import Digraph, DomainError, InstanceTooLarge, MultiDigraph, find_isomorphism, isomorphic
from coreflex.fixtures import cycle, path
from oracles import edge_set, random_digraph


def relabel(d: Digraph, rng: random.Random) -> tuple[Digraph, dict]:
    names = [f"r{i}" for i in range(len(d))]
    rng.shuffle(names)
    mapping = dict(zip(d.vertices, names))
    order = list(d.vertices)
    rng.shuffle(order)
    return Digraph([mapping[v] for v in order], [(mapping[u], mapping[v]) for u, v in d.edges()]), mapping


def test_relabelled_cycle(c3):
    other = Digraph(["p", "q", "r"], [("q", "p"), ("p", "r"), ("r", "q")])
    witness = find_isomorphism(c3, other)
    assert witness is not None
    assert {(witness[u], witness[v]) for u, v in c3.edges()} == edge_set(other)


def test_cycle_vs_path(c3):
    assert not isomorphic(c3, path(3))


def test_loops_matter():
    assert not isomorphic(Digraph(["a"], [("a", "a")]), Digraph(["a"]))


def test_multiplicities_matter():
    two = MultiDigraph.from_pairs([("a", "b"), ("a", "b")])
    one_each = MultiDigraph.from_pairs([("a", "b"), ("b", "a")])
    assert isomorphic(two, MultiDigraph.from_pairs([("y", "x"), ("y", "x")]))
    assert not isomorphic(two, one_each)


def test_mixed_kinds_rejected(c3):
    with pytest.raises(DomainError):
        isomorphic(c3, MultiDigraph.from_digraph(c3))


def test_size_limit():
    big = cycle(13)
    with pytest.raises(InstanceTooLarge):
        isomorphic(big, big)
    assert isomorphic(big, big, max_vertices=13)


def test_random_relabellings():
    rng = random.Random(11)
    for _ in range(300):
        d = random_digraph(rng, max_n=7)
        other, mapping = relabel(d, rng)
        witness = find_isomorphism(d, other)
        assert witness is not None
        assert {(witness[u], witness[v]) for u, v in d.edges()} == edge_set(other)


def test_single_edge_change_breaks_isomorphism():
    rng = random.Random(5)
    for _ in range(200):
        d = random_digraph(rng, max_n=6)
        if len(d) == 0:
            continue
        u, v = rng.choice(d.vertices), rng.choice(d.vertices)
        edges = edge_set(d) ^ {(u, v)}
        assert not isomorphic(d, Digraph(d.vertices, edges))
