"""Compare the compiled and pure-Python kernel backends.

Usage: python3 benchmarks/bench_kernels.py [--repeat N] [--quick]

Kernel rows time each backend directly on the same random inputs.  The sweep
row runs recognition over every digraph of order 4 in a fresh interpreter, once
per backend, selected through ``COREFLEX_PURE_PYTHON``.
"""

import argparse
import os
import random
import subprocess
import sys
import timeit

from coreflex.kernels import FAST_LIMIT, backends

SWEEP = """
import time
from coreflex import Digraph, is_line_digraph, richards_check
from coreflex.kernels import BACKEND
start = time.perf_counter()
for bits in range(1 << 16):
    rows = [(bits >> (4 * i)) & 0xF for i in range(4)]
    d = Digraph._from_rows(("a", "b", "c", "d"), rows)
    assert is_line_digraph(d).is_line == richards_check(d)
print(BACKEND, time.perf_counter() - start)
"""


def random_rows(rng, n, density):
    return [sum(1 << j for j in range(n) if rng.random() < density) for _ in range(n)]


def transpose(rows, n):
    return [sum(1 << i for i in range(n) if rows[i] >> j & 1) for j in range(n)]


def kernel_cases(rng):
    for n in (8, 32, FAST_LIMIT):
        rows = random_rows(rng, n, 3.0 / n)
        cols = transpose(rows, n)
        yield f"coreset_labels n={n}", lambda k, r=rows, c=cols, n=n: k.coreset_labels(r, c, n)
        yield f"bool_power n={n} k=5", lambda k, r=rows: k.bool_power(r, 5)
        yield f"sat_power n={n} k=5", lambda k, r=rows: k.sat_power(r, 5)
        yield f"identical_or_disjoint n={n}", lambda k, r=rows: k.identical_or_disjoint(r)


def run_sweep(pure):
    env = dict(os.environ)
    if pure:
        env["COREFLEX_PURE_PYTHON"] = "1"
    else:
        env.pop("COREFLEX_PURE_PYTHON", None)
    out = subprocess.run([sys.executable, "-c", SWEEP], env=env, capture_output=True, text=True, check=True)
    name, seconds = out.stdout.split()
    return name, float(seconds)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=200)
    parser.add_argument("--quick", action="store_true", help="skip the order-4 sweep")
    args = parser.parse_args(argv)

    found = backends()
    names = list(found)
    print(f"{'case':34s}" + "".join(f"{n:>14s}" for n in names) + ("     speedup" if len(names) > 1 else ""))
    rng = random.Random(0)
    for label, call in kernel_cases(rng):
        times = []
        for name in names:
            mod = found[name]
            times.append(min(timeit.repeat(lambda: call(mod), number=args.repeat, repeat=3)) / args.repeat)
        row = f"{label:34s}" + "".join(f"{t * 1e6:12.1f}us" for t in times)
        if len(times) > 1:
            row += f"{times[0] / times[1]:11.1f}x"
        print(row)

    if not args.quick:
        results = [run_sweep(pure=True)]
        if "cython" in found:
            results.append(run_sweep(pure=False))
        for name, seconds in results:
            print(f"order-4 recognition sweep [{name}]: {seconds:.2f}s")


if __name__ == "__main__":
    main()
