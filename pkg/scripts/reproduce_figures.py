"""Print the worked seven-vertex example end to end.

Usage: python3 scripts/reproduce_figures.py [--dot-dir DIR]

With ``--dot-dir`` the DOT renderings are written there as files instead of
being printed.
"""

import argparse
from pathlib import Path

from coreflex import (
    blocked_adjacency,
    classify_fixpoint,
    core_decomposition,
    coreset_digraph,
    coreset_partition,
    iterate_coreset_digraph,
    render_dot,
    successor_partition,
)
from coreflex.fixtures import d1


def fmt(s, order):
    return "{" + ", ".join(v for v in order if v in s) + "}"


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--dot-dir", type=Path)
    args = parser.parse_args(argv)

    d = d1()
    order = d.vertices
    p = coreset_partition(d)
    print("digraph D1:", ", ".join(f"{u}->{v}" for u, v in d.edges()))

    print("\ncoresets and successor sets")
    for i, (u, a) in enumerate(zip(p.with_empty(), successor_partition(d, p))):
        tag = "  (trivial)" if i - 1 == p.trivial_index else ""
        print(f"  U{i} = {fmt(u, order):22s} alpha(U{i}) = {fmt(a, order)}{tag}")

    print("\ncore decomposition")
    for i, part in enumerate(core_decomposition(d, p)):
        edges = ", ".join(f"{u}->{v}" for u, v in sorted(part.edges, key=lambda e: (order.index(e[0]), order.index(e[1]))))
        print(f"  D{i}: {len(part.edges)} edges  {edges}".rstrip())

    b = blocked_adjacency(d)
    print("\nblocked adjacency matrix")
    print("  rows:", " ".join(b.row_order), "| cols:", " ".join(b.col_order))
    for row in b.matrix:
        print("  " + " ".join(str(int(x)) for x in row))

    y, members = coreset_digraph(d)
    print("\ncoreset digraph Y(D1)")
    for lab in y.vertices:
        print(f"  {lab} = {fmt(members[lab], order)}")
    print("  edges:", ", ".join(f"{u}->{v}" for u, v in y.edges()))

    seq = iterate_coreset_digraph(d)
    print("\ncoreset digraph sequence")
    for k, (stage, mm) in enumerate(zip(seq.stages, seq.membership_maps)):
        groups = "  ".join(f"{lab}={fmt(mm[lab], order)}" for lab in stage.vertices)
        print(f"  stage {k}: {len(stage)} vertices, {stage.edge_count()} edges  {groups}")
    shape = classify_fixpoint(seq.limit)
    print(f"  complexity index = {seq.fixpoint_index}")
    print(f"  limit: {shape.shape.name}, cycle length {shape.cycle_length}, tail length {shape.tail_length}")

    dots = {"d1_coresets.dot": render_dot(d, p, name="D1"), "y_d1.dot": render_dot(y, name="Y")}
    for name, text in dots.items():
        if args.dot_dir:
            args.dot_dir.mkdir(parents=True, exist_ok=True)
            (args.dot_dir / name).write_text(text)
            print(f"\nwrote {args.dot_dir / name}")
        else:
            print(f"\n{name}\n{text}", end="")


if __name__ == "__main__":
    main()
