"""Compare the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N]

Every workload runs on both backends; the script aborts if their results differ.
"""
import argparse
import time
from itertools import permutations

from szl import _pykernels
from szl.verify import FamilySpec, enumerate_graphs

try:
    from szl import _ckernels
except ImportError:  # extension not built
    _ckernels = None


def sweep_failing(mod, graphs, ell):
    return [mod.failing_boundaries(G.n, list(G.degrees), list(G.subset_cuts()), ell) for G in graphs]


def sweep_imbalances(mod, graphs):
    return [sorted(mod.achievable_imbalances(G.n, list(G.upper))) for G in graphs]


def sweep_canonical(mod, graphs, perms):
    return [mod.canonical_upper(G.n, list(G.upper), perms) for G in graphs]


def best_of(fn, repeat):
    best, result = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _ckernels is None:
        raise SystemExit("szl._ckernels is not built; run `pip install -e . --no-build-isolation` first")

    fam4 = {ell: list(enumerate_graphs(FamilySpec(4, 0, 3 * ell + 2, ell + 1))) for ell in (3, 4)}
    small = list(enumerate_graphs(FamilySpec(4, 0, 10, 10)))
    perms = list(permutations(range(4)))
    workloads = [
        ("failing boundaries, 4 vertices, l=3", lambda m: sweep_failing(m, fam4[3], 3)),
        ("failing boundaries, 4 vertices, l=4", lambda m: sweep_failing(m, fam4[4], 4)),
        ("achievable imbalances, e <= 10", lambda m: sweep_imbalances(m, small)),
        ("canonical codes, e <= 10", lambda m: sweep_canonical(m, small, perms)),
    ]
    print(f"{'workload':40} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name, job in workloads:
        tp, rp = best_of(lambda: job(_pykernels), args.repeat)
        tc, rc = best_of(lambda: job(_ckernels), args.repeat)
        if rp != rc:
            raise SystemExit(f"backends disagree on: {name}")
        print(f"{name:40} {tp:10.3f} {tc:10.3f} {tp / tc:8.1f}x")


if __name__ == "__main__":
    main()
