"""Edge-list text format and DOT output.

One edge per line as ``tail head``; ``node X`` declares a vertex; a token
starting with ``#`` begins a comment.  Vertex order is order of first
appearance.  In simple mode repeated edges collapse with a warning, in
multi mode they are kept as parallel edges.
"""

from __future__ import annotations

import warnings
from typing import Iterable

from coreflex.coresets import CoresetPartition
from coreflex.digraph import Digraph, MultiDigraph

__all__ = ["EdgeListError", "parse_edge_list", "render_edge_list", "render_dot"]


class EdgeListError(ValueError):
    def __init__(self, lineno: int, message: str):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}")


def _tokens(line: str) -> list[str]:
    out = []
    for tok in line.split():
        if tok.startswith("#"):
            break
        out.append(tok)
    return out


def parse_edge_list(text: str, multi: bool = False) -> Digraph | MultiDigraph:
    order: dict[str, None] = {}
    pairs: list[tuple[str, str]] = []
    seen: set[tuple[str, str]] = set()
    for lineno, line in enumerate(text.splitlines(), 1):
        toks = _tokens(line)
        if not toks:
            continue
        if toks[0] == "node":
            if len(toks) != 2:
                raise EdgeListError(lineno, "expected 'node <label>'")
            order.setdefault(toks[1])
            continue
        if len(toks) != 2:
            raise EdgeListError(lineno, f"expected 'tail head', got {len(toks)} tokens")
        tail, head = toks
        order.setdefault(tail)
        order.setdefault(head)
        if not multi:
            if (tail, head) in seen:
                warnings.warn(f"line {lineno}: duplicate edge {tail} {head} collapsed", stacklevel=2)
                continue
            seen.add((tail, head))
        pairs.append((tail, head))
    if multi:
        return MultiDigraph.from_pairs(pairs, order)
    return Digraph(order, pairs)


def _first_appearance(pairs: Iterable[tuple[str, str]]) -> list[str]:
    order: dict[str, None] = {}
    for t, h in pairs:
        order.setdefault(t)
        order.setdefault(h)
    return list(order)


def render_edge_list(d: Digraph | MultiDigraph) -> str:
    """Normalized edge list; parsing it gives back ``d`` exactly.

    ``node`` lines are emitted for isolated vertices, or for every vertex
    when edge order alone would not reproduce the vertex order.
    """
    pairs = d.pairs() if isinstance(d, MultiDigraph) else d.edges()
    listed = _first_appearance(pairs)
    isolated = [v for v in d.vertices if v not in set(listed)]
    lines = []
    if list(d.vertices) == listed + isolated:
        lines += [f"{t} {h}" for t, h in pairs]
        lines += [f"node {v}" for v in isolated]
    else:
        lines += [f"node {v}" for v in d.vertices]
        lines += [f"{t} {h}" for t, h in pairs]
    return "".join(line + "\n" for line in lines)


def _q(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def render_dot(
    d: Digraph | MultiDigraph,
    partition: CoresetPartition | None = None,
    name: str = "G",
) -> str:
    """DOT text for ``d``; coreset classes become clusters when a partition is given."""
    lines = [f"digraph {name} {{"]
    if partition is not None:
        for i, cls in enumerate(partition.classes):
            tag = " (sinks)" if i == partition.trivial_index else ""
            lines.append(f"  subgraph cluster_{i + 1} {{")
            lines.append(f'    label="U{i + 1}{tag}";')
            lines += [f"    {_q(v)};" for v in d.vertices if v in cls]
            lines.append("  }")
    else:
        lines += [f"  {_q(v)};" for v in d.vertices]
    if isinstance(d, MultiDigraph):
        lines += [f"  {_q(t)} -> {_q(h)} [label={_q(eid)}];" for eid, t, h in d.edges]
    else:
        lines += [f"  {_q(t)} -> {_q(h)};" for t, h in d.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"
