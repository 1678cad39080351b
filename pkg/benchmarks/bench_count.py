"""Time count_flows with the numba kernel against the numpy fallback.

    python3 benchmarks/bench_count.py [--repeat 3] [--quick]

The numba kernel is compiled once before timing. Both back ends must return
the same count; the script exits non-zero otherwise.
"""

import argparse
import sys
import time

from dihedral_flows.algebra import parse_context
from dihedral_flows.corpus import get_graph
from dihedral_flows.flows import count_flows

CASES = [
    ("fig4#1", "D2n:4"),
    ("fig4#1", "Dlt:4"),
    ("fig1", "D2n:3"),
    ("fig1", "Dlt:4"),
    ("petersen3t", "D2n:4"),
    ("petersen2t", "Zn:5"),
    ("tietze", "D2n:3"),
    ("tietze", "D2n:4"),
]
QUICK = CASES[:4]


def best_of(fn, repeat):
    best, value = float("inf"), None
    for _ in range(repeat):
        t = time.perf_counter()
        value = fn()
        best = min(best, time.perf_counter() - t)
    return best, value


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="only the small cases")
    args = ap.parse_args(argv)

    warm = get_graph("theta")
    count_flows(warm, parse_context("D2n:3"), use_numba=True, workers=1)

    print(f"{'graph':<12} {'ctx':<7} {'count':>9} {'numba s':>9} {'numpy s':>9} {'speedup':>8}")
    status = 0
    for name, spec in QUICK if args.quick else CASES:
        g, ctx = get_graph(name), parse_context(spec)
        tn, cn = best_of(lambda: count_flows(g, ctx, use_numba=True, workers=1), args.repeat)
        tp, cp = best_of(lambda: count_flows(g, ctx, use_numba=False, workers=1), args.repeat)
        if cn != cp:
            print(f"mismatch on {name} {spec}: numba {cn}, numpy {cp}", file=sys.stderr)
            status = 1
        print(f"{name:<12} {spec:<7} {cn:>9} {tn:>9.4f} {tp:>9.4f} {tp / max(tn, 1e-9):>7.1f}x")
    return status


if __name__ == "__main__":
    sys.exit(main())
