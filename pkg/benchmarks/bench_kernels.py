"""Compare the compiled and pure-Python kernels on the two hot paths.

    python benchmarks/bench_kernels.py [--repeat 3]

Forced-path search runs over every 2-path of the cubic and quartic graphs on
10 vertices; canonical labelling runs over the same graphs after a random
relabelling.  Both backends must return identical results.
"""

import argparse
import random
import sys
import time

from pathham import _pykernels
from pathham.enumerate import enumerate_regular_graphs
from pathham.graph import paths_of_length

try:
    from pathham import _ckernels
except ImportError:
    _ckernels = None


def workload():
    graphs = enumerate_regular_graphs(3, 10) + enumerate_regular_graphs(4, 10)
    rng = random.Random(1)
    shuffled = []
    for g in graphs:
        perm = list(range(g.n))
        rng.shuffle(perm)
        shuffled.append(g.relabel(perm))
    paths = [(g, list(p)) for g in graphs for p in paths_of_length(g, 2)]
    return paths, shuffled


def run(mod, paths, shuffled):
    t0 = time.perf_counter()
    ham = [mod.ham_complete(g.adj, g.n, p) for g, p in paths]
    t1 = time.perf_counter()
    canon = [tuple(mod.canonical_perm(g.adj, g.n)) for g in shuffled]
    t2 = time.perf_counter()
    return t1 - t0, t2 - t1, ham, canon


def main(argv=None):
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if _ckernels is None:
        print("compiled extension not built; nothing to compare", file=sys.stderr)
        return 1
    paths, shuffled = workload()
    print(f"workload: {len(paths)} forced-path searches, {len(shuffled)} canonical labellings")
    best = {}
    results = {}
    for mod in (_pykernels, _ckernels):
        times = []
        for _ in range(args.repeat):
            th, tc, ham, canon = run(mod, paths, shuffled)
            times.append((th, tc))
        best[mod.BACKEND] = (min(t[0] for t in times), min(t[1] for t in times))
        results[mod.BACKEND] = (ham, canon)
    assert results["python"] == results["cython"], "backends disagree"
    print(f"{'kernel':<12}{'python s':>12}{'cython s':>12}{'speedup':>10}")
    for i, name in enumerate(("ham search", "canonical")):
        py, cy = best["python"][i], best["cython"][i]
        print(f"{name:<12}{py:>12.4f}{cy:>12.4f}{py / cy:>9.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
