"""Acceptance criteria, one test each, with their time budgets.

A one-line PASS/FAIL verdict per criterion is printed in the pytest terminal
summary.
"""

import itertools
import random
import time
from contextlib import contextmanager

import pytest

from coreflex import (
    Count,
    alpha,
    beta,
    complexity_index,
    core_decomposition,
    coreset_digraph,
    coreset_partition,
    geller_harary_partitions,
    i_uniqueness,
    is_line_digraph,
    is_nth_order_line_digraph,
    isomorphic,
    iterate_coreset_digraph,
    iterated_line_digraph,
    lift_coreset,
    line_digraph,
    matrix_coreset_check,
    nth_order_coresets,
    reverse,
    richards_check,
    root_digraph,
    successor_partition,
)
from coreflex.fixtures import complete_with_loops, d1
from oracles import (
    all_digraphs,
    edge_set,
    random_closed_digraph,
    random_closed_multidigraph,
    random_digraph,
    random_multidigraph,
)

RESULTS: list[str] = []


@contextmanager
def criterion(number: int, title: str, budget_s: float):
    start = time.perf_counter()
    try:
        yield
    except BaseException as exc:
        elapsed = time.perf_counter() - start
        RESULTS.append(f"FAIL  criterion {number:2d}: {title} ({elapsed:.2f}s; {type(exc).__name__}: {exc})")
        raise
    elapsed = time.perf_counter() - start
    ok = elapsed < budget_s
    RESULTS.append(
        f"{'PASS' if ok else 'FAIL'}  criterion {number:2d}: {title} ({elapsed:.2f}s, budget {budget_s:g}s)"
    )
    assert ok, f"criterion {number} took {elapsed:.2f}s, budget {budget_s}s"


@pytest.fixture(scope="module")
def corpus():
    """All digraphs on at most 3 vertices plus 1000 random ones on at most 8."""
    graphs = [d for n in range(4) for d in all_digraphs(n)]
    rng = random.Random(20240611)
    graphs += [random_digraph(rng, max_n=8) for _ in range(1000)]
    return graphs


def test_criterion_01_partitions_of_d1():
    with criterion(1, "coreset and successor partitions of D1", 1.0):
        d = d1()
        p = coreset_partition(d)
        assert [set(c) for c in p.classes] == [{"x1", "x2", "x3", "x6"}, {"x4"}, {"x5"}, {"x7"}]
        assert p.trivial_index == 3
        assert [set(s) for s in successor_partition(d, p)] == [
            set(), {"x1", "x2", "x3", "x4"}, {"x5"}, {"x6", "x7"}, set(),
        ]


def test_criterion_02_core_decomposition_of_d1():
    with criterion(2, "core decomposition of D1 has edge counts (8, 1, 2, 0)", 1.0):
        d = d1()
        dec = core_decomposition(d)
        assert dec.parts[0].edges == frozenset()
        assert [len(p.edges) for p in dec.parts[1:]] == [8, 1, 2, 0]
        union = set().union(*(p.edges for p in dec.parts))
        assert union == edge_set(d) and sum(len(p.edges) for p in dec.parts) == 11


def test_criterion_03_coreset_digraph_of_d1():
    with criterion(3, "coreset digraph of D1", 1.0):
        y, members = coreset_digraph(d1())
        assert [set(members[k]) for k in y.vertices] == [{"x1", "x2", "x3", "x6"}, {"x4"}, {"x5"}, {"x7"}]
        assert edge_set(y) == {("U1", "U1"), ("U1", "U2"), ("U2", "U3"), ("U3", "U1"), ("U3", "U4")}


def test_criterion_04_line_characterization_exhaustive():
    with criterion(4, "recognition == row/column test on all 65,536 digraphs of order 4", 120.0):
        disagreements = 0
        positives = 0
        for d in all_digraphs(4):
            res = is_line_digraph(d)
            if res.is_line != richards_check(d):
                disagreements += 1
                continue
            if not res.is_line:
                continue
            positives += 1
            assert isomorphic(line_digraph(res.root), d)
            a, b = geller_harary_partitions(d)
            assert {(u, v) for x, y in zip(a, b) for u in x for v in y} == edge_set(d)
            for part in core_decomposition(d):
                assert part.edges == {(u, v) for u in part.coreset for v in part.succ}
        assert disagreements == 0
        assert positives > 0


def test_criterion_05_line_digraphs_recognized():
    with criterion(5, "line digraphs of 500 random multidigraphs are recognized", 30.0):
        rng = random.Random(5)
        for _ in range(500):
            m = random_multidigraph(rng, max_n=6, max_e=10)
            ld = line_digraph(m)
            res = is_line_digraph(ld)
            assert res.is_line
            assert line_digraph(root_digraph(ld)) == ld


def test_criterion_06_nth_order_line_digraphs():
    with criterion(6, "walk-uniqueness characterization of nth-order line digraphs", 120.0):
        k2 = complete_with_loops(2)
        assert i_uniqueness(k2, 1).passed
        passed, failure = i_uniqueness(k2, 2)
        assert not passed and failure.count == Count.MANY
        assert is_nth_order_line_digraph(k2, 1).is_nth_order_line
        assert not is_nth_order_line_digraph(k2, 2).is_nth_order_line
        rng = random.Random(6)
        for _ in range(200):
            m = random_closed_multidigraph(rng, max_n=4, max_extra=3)
            for n in (1, 2, 3):
                report = is_nth_order_line_digraph(iterated_line_digraph(m, n), n)
                assert report.is_nth_order_line, (m, n)


def test_criterion_07_lifted_coresets():
    with criterion(7, "lifting maps nth-order coresets onto (n+1)th-order coresets of L(D)", 60.0):
        rng = random.Random(7)
        for _ in range(200):
            d = random_closed_digraph(rng, max_n=6)
            ld = line_digraph(d)
            for n in (1, 2):
                source = nth_order_coresets(d, n).classes
                lifted = [lift_coreset(d, u) for u in source]
                assert len(set(lifted)) == len(source)
                assert set(lifted) == set(nth_order_coresets(ld, n + 1).classes)


def test_criterion_08_partition_and_decomposition_properties(corpus):
    with criterion(8, "partition, decomposition, matrix test and self-decomposition properties", 120.0):
        for d in corpus:
            p = coreset_partition(d)
            for sets in (p.classes, [s for s in successor_partition(d, p) if s]):
                assert all(sets)
                assert sum(len(s) for s in sets) == len(d)
                assert set().union(*sets) == set(d.vertices)
            for a, b in itertools.combinations(p.classes, 2):
                assert not a & b
            for u in p.nontrivial:
                assert beta(d, alpha(d, u)) == u
            dec = core_decomposition(d, p)
            assert sum(len(part.edges) for part in dec) == d.edge_count()
            assert set().union(*(part.edges for part in dec)) == edge_set(d)
            for part, sub in zip(dec.parts, dec.digraphs()):
                if part.edges:
                    inner = [q for q in core_decomposition(sub) if q.edges]
                    assert len(inner) == 1 and inner[0].edges == part.edges
            if len(d) <= 4:
                nontrivial = set(p.nontrivial)
                for r in range(1, len(d) + 1):
                    for combo in itertools.combinations(d.vertices, r):
                        assert matrix_coreset_check(d, combo) == (frozenset(combo) in nontrivial)


def test_criterion_09_coreset_digraph_convergence(corpus):
    with criterion(9, "coreset digraph iteration converges to a fixed path or cycle with tail", 60.0):
        assert complexity_index(d1()) == 3
        for d in corpus:
            seq = iterate_coreset_digraph(d)
            limit = seq.limit
            y, _ = coreset_digraph(limit)
            assert len(y) == len(limit)
            assert edge_set(y) == {(f"U{limit.index(u) + 1}", f"U{limit.index(v) + 1}") for u, v in limit.edges()}
            assert len(limit.sinks()) <= 1
            assert all(limit.in_degree(v) <= 1 for v in limit.vertices)


def test_criterion_10_reversal(corpus):
    with criterion(10, "coresets of the reversal are the successor sets", 60.0):
        for d in corpus:
            rev = set(coreset_partition(reverse(d)).classes)
            assert rev == {s for s in successor_partition(d) if s}
