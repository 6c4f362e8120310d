#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python twins.

Runs each hot kernel on identical inputs through both implementations and
prints a table of timings and speedups.  Skips the compiled column when the
extension is not built (install the package first).

    python3 benchmarks/bench_kernels.py           # full runs
    python3 benchmarks/bench_kernels.py --quick   # ~10x smaller workloads
"""

import argparse
import random
import time

from cliquefold import _kernels_py as pure

try:
    from cliquefold import _kernels as compiled
except ImportError:
    compiled = None


def _random_adj(rng, n, density):
    adj = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < density:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return adj


def _time(fn, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    return time.perf_counter() - t0, out


def bench_canonical(rng, reps):
    cases = [(n, _random_adj(rng, n, d))
             for n in (8, 9, 10)
             for d in (0.2, 0.5, 0.8)
             for _ in range(reps)]

    def run(mod):
        for n, adj in cases:
            mod.canonical_code(n, adj)

    return f"canonical_code  n=8..10 x{len(cases)}", run


def bench_cliques_sparse(rng, reps):
    cases = [(24, _random_adj(rng, 24, 0.15)) for _ in range(reps * 4)]

    def run(mod):
        for n, adj in cases:
            mod.clique_count_vector(n, adj)

    return f"clique_counts   n=24 sparse x{len(cases)}", run


def bench_cliques_dense(rng, reps):
    cases = [(12, _random_adj(rng, 12, 0.85)) for _ in range(reps * 4)]

    def run(mod):
        for n, adj in cases:
            mod.clique_count_vector(n, adj)

    return f"clique_counts   n=12 dense x{len(cases)}", run


def bench_labeled_census(_rng, _reps):
    def run(mod):
        assert mod.labeled_class_count(6) == 156

    return "labeled_classes n=6", run


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--quick", action="store_true", help="smaller workloads")
    ap.add_argument("--seed", type=int, default=7, help="workload RNG seed")
    args = ap.parse_args()
    reps = 5 if args.quick else 50

    benches = [
        bench_canonical,
        bench_cliques_sparse,
        bench_cliques_dense,
        bench_labeled_census,
    ]

    if compiled is None:
        print("compiled kernels not available; timing the pure backend only\n")

    header = f"{'benchmark':<34} {'pure':>10} {'compiled':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for make in benches:
        rng = random.Random(args.seed)
        label, run = make(rng, reps)
        t_pure, _ = _time(run, pure)
        if compiled is not None:
            t_comp, _ = _time(run, compiled)
            print(f"{label:<34} {t_pure:>9.4f}s {t_comp:>9.4f}s {t_pure / t_comp:>7.1f}x")
        else:
            print(f"{label:<34} {t_pure:>9.4f}s {'-':>10} {'-':>8}")


if __name__ == "__main__":
    main()
