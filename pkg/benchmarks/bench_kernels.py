"""Compare the compiled and pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--sweep 200]

Each kernel is timed on a fixed random workload with both backends; the
end-to-end rows run the property sweep in a subprocess with and without
SUBBIRKHOFF_PURE so the whole pipeline picks up the backend.
"""
import argparse
import os
import random
import subprocess
import sys
import time
import timeit

from subbirkhoff.kernels import backends


def _adjacency(rng, n, degree):
    return [sorted(rng.sample(range(n), degree)) for _ in range(n)]


def _rowmasks(rng, n, density):
    masks = []
    for r in range(n):
        # keep the diagonal so the pattern has at least one permutation
        m = 1 << r
        for c in range(n):
            if rng.random() < density:
                m |= 1 << c
        masks.append(m)
    return masks


def workloads(seed=0):
    rng = random.Random(seed)
    match_adj = _adjacency(rng, 400, 6)
    scc_adj = _adjacency(rng, 4000, 2)
    cover = _rowmasks(rng, 8, 0.5)
    block = _rowmasks(rng, 16, 0.3)
    return {
        "bipartite_matching n=400": lambda k: k.bipartite_matching(400, 400, match_adj),
        "strong_components n=4000": lambda k: k.strong_components(4000, scc_adj),
        "permutation_cover n=8": lambda k: k.permutation_cover(8, cover),
        "zero_block_exists n=16": lambda k: k.zero_block_exists(16, block),
    }


def time_sweep(count, pure):
    env = dict(os.environ)
    env.pop("SUBBIRKHOFF_PURE", None)
    if pure:
        env["SUBBIRKHOFF_PURE"] = "1"
    start = time.perf_counter()
    subprocess.run([sys.executable, "-m", "subbirkhoff", "sweep", "--count", str(count)],
                   env=env, check=True, stdout=subprocess.DEVNULL)
    return time.perf_counter() - start


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--sweep", type=int, default=200, help="sweep size; 0 skips the end-to-end rows")
    args = ap.parse_args(argv)

    found = backends()
    names = sorted(found)
    print(f"{'workload':28s}" + "".join(f"{n:>12s}" for n in names) + "     speedup")
    for label, fn in workloads().items():
        results = {name: fn(found[name]) for name in names}
        if len(set(map(repr, results.values()))) != 1:
            raise SystemExit(f"backends disagree on {label}")
        best = {name: min(timeit.repeat(lambda: fn(found[name]), number=1, repeat=args.repeat))
                for name in names}
        ratio = best["python"] / best["cython"] if "cython" in best else float("nan")
        print(f"{label:28s}" + "".join(f"{best[n] * 1e3:10.2f}ms" for n in names) + f"{ratio:10.1f}x")

    if args.sweep:
        py = time_sweep(args.sweep, pure=True)
        cy = time_sweep(args.sweep, pure=False) if "cython" in found else float("nan")
        print(f"{'sweep count=' + str(args.sweep):28s}{cy * 1e3:10.0f}ms{py * 1e3:10.0f}ms{py / cy:10.2f}x")


if __name__ == "__main__":
    main()
