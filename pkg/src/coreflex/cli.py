"""Command-line interface.

Exit codes: 0 success or "yes", 1 recognized "no", 2 precondition violated,
64 usage error, 65 malformed input, 66 input could not be read.
"""

from __future__ import annotations

import argparse
import sys
import warnings
from typing import Sequence

from coreflex.coreset_digraph import classify_fixpoint, coreset_digraph, iterate_coreset_digraph
from coreflex.coresets import blocked_adjacency, core_decomposition, coreset_partition, successor_partition
from coreflex.digraph import Digraph, line_digraph, power_digraph
from coreflex.edgelist import EdgeListError, parse_edge_list, render_dot, render_edge_list
from coreflex.errors import DomainError
from coreflex.recognition import is_line_digraph, is_nth_order_line_digraph

EX_OK = 0
EX_NO = 1
EX_PRECONDITION = 2
EX_USAGE = 64
EX_DATAERR = 65
EX_NOINPUT = 66


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {n}")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("file", help="edge-list file, or - for stdin")
    common.add_argument("--dot", action="store_true", help="emit DOT instead of plain text")

    parser = _Parser(prog="coreflex", description="Coresets, line digraphs and coreset digraphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("coresets", parents=[common], help="print coresets and successor sets")
    sub.add_parser("decompose", parents=[common], help="print the core subgraphs")
    p = sub.add_parser("line", parents=[common], help="emit the line digraph")
    p.add_argument("--multi", action="store_true", help="keep repeated edges as parallel edges")
    p = sub.add_parser("is-line", parents=[common], help="recognize (nth-order) line digraphs")
    p.add_argument("--order", type=_positive, default=None, metavar="N",
                   help="test for an Nth-order line digraph via walk uniqueness")
    p.add_argument("--emit-root", action="store_true", help="print only the root multidigraph")
    p = sub.add_parser("power", help="digraph of length-N walks")
    p.add_argument("n", type=_positive, metavar="N")
    p.add_argument("file", help="edge-list file, or - for stdin")
    p.add_argument("--dot", action="store_true", help="emit DOT instead of plain text")
    p = sub.add_parser("core-digraph", parents=[common], help="coreset digraph and its iteration")
    p.add_argument("--iterate", action="store_true", help="iterate to the fixed point, printing each stage")
    p.add_argument("--complexity", action="store_true", help="print the number of steps to the fixed point")
    p = sub.add_parser("matrix", parents=[common], help="adjacency matrix")
    p.add_argument("--blocked", action="store_true", help="group rows by coreset, columns by successor set")
    return parser


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _fmt(d: Digraph, s) -> str:
    return "{" + ", ".join(d.ordered(s)) + "}"


def _cmd_coresets(d, args, out):
    partition = coreset_partition(d)
    if args.dot:
        out.write(render_dot(d, partition))
        return EX_OK
    out.write("coresets:\n")
    for i, cls in enumerate(partition.classes, 1):
        tag = "  (trivial)" if i - 1 == partition.trivial_index else ""
        out.write(f"  U{i} = {_fmt(d, cls)}{tag}\n")
    out.write("successor sets:\n")
    for i, succ in enumerate(successor_partition(d, partition)):
        tag = "  (sources)" if i == 0 else ""
        out.write(f"  alpha(U{i}) = {_fmt(d, succ)}{tag}\n")
    return EX_OK


def _cmd_decompose(d, args, out):
    partition = coreset_partition(d)
    decomposition = core_decomposition(d, partition)
    if args.dot:
        out.write(render_dot(d, partition))
        return EX_OK
    for i, part in enumerate(decomposition.parts):
        edges = sorted(part.edges, key=lambda e: (d.index(e[0]), d.index(e[1])))
        out.write(f"D{i}: {_fmt(d, part.coreset)} -> {_fmt(d, part.succ)}, {len(edges)} edges\n")
        for u, v in edges:
            out.write(f"  {u} {v}\n")
    return EX_OK


def _cmd_line(d, args, out):
    ld = line_digraph(d)
    out.write(render_dot(ld) if args.dot else render_edge_list(ld))
    return EX_OK


def _write_root(root, args, out):
    if args.dot:
        out.write(render_dot(root, name="root"))
        return
    for eid, t, h in root.edges:
        out.write(f"{t} {h}  # {eid}\n")
    used = {x for _, t, h in root.edges for x in (t, h)}
    for v in root.vertices:
        if v not in used:
            out.write(f"node {v}\n")


def _cmd_is_line(d, args, out):
    if args.order is not None:
        try:
            report = is_nth_order_line_digraph(d, args.order)
        except DomainError as exc:
            sys.stderr.write(f"coreflex: precondition violated: {exc}\n")
            return EX_PRECONDITION
        for check in report.per_order:
            if check.passed:
                out.write(f"order {check.order}: pass ({len(check.coresets)} coresets)\n")
            else:
                f = check.failure
                out.write(
                    f"order {check.order}: fail: {f.count.name} walks of length {check.order} "
                    f"from {f.u} to {f.w} (coreset {_fmt(d, f.coreset)})\n"
                )
        verdict = "yes" if report.is_nth_order_line else "no"
        out.write(f"order-{args.order} line digraph: {verdict}\n")
        return EX_OK if report.is_nth_order_line else EX_NO

    result = is_line_digraph(d)
    if args.emit_root:
        if result.is_line:
            _write_root(result.root, args, out)
        else:
            sys.stderr.write(f"coreflex: not a line digraph: {result.counterexample}\n")
        return EX_OK if result.is_line else EX_NO
    if not result.is_line:
        c = result.counterexample
        out.write("line digraph: no\n")
        out.write(f"counterexample coreset: {_fmt(d, c.coreset)}\n")
        out.write(f"  alpha({c.u}) = {_fmt(d, c.succ_u)}\n")
        out.write(f"  alpha({c.x}) = {_fmt(d, c.succ_x)}\n")
        return EX_NO
    if not args.dot:
        out.write("line digraph: yes\nroot:\n")
    _write_root(result.root, args, out)
    return EX_OK


def _cmd_power(d, args, out):
    p = power_digraph(d, args.n)
    out.write(render_dot(p) if args.dot else render_edge_list(p))
    return EX_OK


def _write_stage(k, stage, members, original, out):
    out.write(f"stage {k}: {len(stage)} vertices, {stage.edge_count()} edges\n")
    for v in stage.vertices:
        out.write(f"  {v} = {_fmt(original, members[v])}\n")
    for u, v in stage.edges():
        out.write(f"  {u} {v}\n")


def _cmd_core_digraph(d, args, out):
    if not (args.iterate or args.complexity):
        y, members = coreset_digraph(d)
        if args.dot:
            out.write(render_dot(y, name="Y"))
        else:
            _write_stage(1, y, members, d, out)
        return EX_OK
    seq = iterate_coreset_digraph(d)
    if args.iterate:
        if args.dot:
            for k, stage in enumerate(seq.stages):
                out.write(render_dot(stage, name=f"Y{k}"))
        else:
            for k, (stage, members) in enumerate(zip(seq.stages, seq.membership_maps)):
                _write_stage(k, stage, members, d, out)
            shape = classify_fixpoint(seq.limit)
            out.write(
                f"limit: {shape.shape.value} (cycle {shape.cycle_length}, tail {shape.tail_length})"
                + (f" [{shape.note}]" if shape.note else "")
                + "\n"
            )
    if args.complexity:
        out.write(f"complexity = {seq.fixpoint_index}\n")
    return EX_OK


def _cmd_matrix(d, args, out):
    if args.dot:
        out.write(render_dot(d, coreset_partition(d)))
        return EX_OK
    if args.blocked:
        rows, cols, matrix, _, _ = blocked_adjacency(d)
    else:
        rows = cols = d.vertices
        matrix = d.adjacency_matrix()
    out.write(f"rows: {' '.join(rows)} | cols: {' '.join(cols)}\n")
    for r in matrix:
        out.write(" ".join(str(int(x)) for x in r) + "\n")
    return EX_OK


_COMMANDS = {
    "coresets": _cmd_coresets,
    "decompose": _cmd_decompose,
    "line": _cmd_line,
    "is-line": _cmd_is_line,
    "power": _cmd_power,
    "core-digraph": _cmd_core_digraph,
    "matrix": _cmd_matrix,
}


def run_command(argv: Sequence[str], out=None) -> int:
    out = out if out is not None else sys.stdout
    try:
        args = build_parser().parse_args(list(argv))
    except UsageError as exc:
        sys.stderr.write(f"{exc}\n")
        return EX_USAGE
    except SystemExit as exc:  # --help
        return exc.code or EX_OK
    try:
        text = _read(args.file)
    except OSError as exc:
        sys.stderr.write(f"coreflex: cannot read {args.file}: {exc.strerror or exc}\n")
        return EX_NOINPUT
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            d = parse_edge_list(text, multi=getattr(args, "multi", False))
        for w in caught:
            sys.stderr.write(f"coreflex: warning: {w.message}\n")
    except EdgeListError as exc:
        sys.stderr.write(f"coreflex: {args.file}: {exc}\n")
        return EX_DATAERR
    return _COMMANDS[args.command](d, args, out)


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
