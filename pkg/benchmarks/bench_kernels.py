"""Compare the compiled and pure-Python crossing kernels.

    python benchmarks/bench_kernels.py [--repeat 5]

Times a full crossing scan of random K_{n,n,n} drawings and the
single-vertex delta used by the local search, on both backends, and checks
that they return identical results.  Also times the local search end to end.
"""

import argparse
import os
import subprocess
import sys
import time

import numpy as np

from crossnum import kernels
from crossnum.errors import DegenerateConfiguration


def _best(fn, repeat):
    out, best = None, float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return out, best


def _random_drawing(n, seed):
    rng = np.random.default_rng(seed)
    parts = [i for i in range(3) for _ in range(n)]
    while True:
        pts = rng.integers(-10**6, 10**6, size=(3 * n, 2))
        xs, ys = pts[:, 0].tolist(), pts[:, 1].tolist()
        try:
            kernels.validate(xs, ys, parts)
        except DegenerateConfiguration:
            continue
        return xs, ys, parts


def _search_seconds(pure):
    env = dict(os.environ, CROSSNUM_PURE_PYTHON="1" if pure else "0")
    code = (
        "import time; from crossnum.bounds_search import minimize_crossings as m; "
        "t = time.perf_counter(); r = m((3, 3, 3), 20000, 2, seed=1, seeded_every=0); "
        "print(time.perf_counter() - t, r.best_count)"
    )
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    secs, count = out.stdout.split()
    return float(secs), int(count)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--sizes", default="4,6,8,10,14")
    args = ap.parse_args(argv)
    if not kernels.has_compiled():
        raise SystemExit("compiled extension not built; run `pip install -e . --no-build-isolation`")

    print(f"{'profile':<12} {'kernel':<8} {'python (ms)':>12} {'cython (ms)':>12} {'speedup':>8}")
    for n in (int(s) for s in args.sizes.split(",")):
        xs, ys, parts = _random_drawing(n, seed=n)
        cases = {
            "scan": lambda b: kernels.scan(xs, ys, parts, backend=b)[:3],
            "vertex": lambda b: [kernels.vertex_crossings(xs, ys, parts, v, backend=b) for v in range(0, len(xs), 3)],
        }
        for name, fn in cases.items():
            py, t_py = _best(lambda: fn("python"), args.repeat)
            cy, t_cy = _best(lambda: fn("cython"), args.repeat)
            assert py == cy, (name, n)
            print(f"{f'{n},{n},{n}':<12} {name:<8} {t_py * 1e3:12.2f} {t_cy * 1e3:12.3f} {t_py / t_cy:8.0f}x")

    t_py, c_py = _search_seconds(pure=True)
    t_cy, c_cy = _search_seconds(pure=False)
    assert c_py == c_cy
    print(f"{'3,3,3':<12} {'search':<8} {t_py * 1e3:12.0f} {t_cy * 1e3:12.0f} {t_py / t_cy:8.0f}x")


if __name__ == "__main__":
    main()
