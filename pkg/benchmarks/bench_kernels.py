"""Compare the compiled and pure-Python ``axpy`` kernels.

Runs the raw kernel on random sparse rows and then a full classification of
a few catalog octics with each backend.  Usage::

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import os
import random
import subprocess
import sys
import time

from arrfree import _pykernels
from arrfree.arith import Rational

try:
    from arrfree import _ckernels
except ImportError:
    _ckernels = None

PIPELINE = """
import time
from arrfree import catalog, kernels
from arrfree.analyzer import classify
t = time.perf_counter()
for name in {names!r}:
    classify(catalog.get(name))
print(kernels.BACKEND, time.perf_counter() - t)
"""


def random_rows(n_rows, width, seed=1):
    rng = random.Random(seed)
    rows = []
    for _ in range(n_rows):
        keys = sorted(rng.sample(range(4 * width), width), reverse=True)
        rows.append([(k, Rational(rng.randint(-9, 9) or 1, rng.randint(1, 5))) for k in keys])
    return rows


def time_kernel(axpy, rows, repeat):
    best = float("inf")
    for _ in range(repeat):
        p = dict(rows[0])
        t = time.perf_counter()
        for r in rows[1:]:
            axpy(p, r, 3, Rational(2, 3), [])
        best = min(best, time.perf_counter() - t)
    return best


def time_pipeline(names, pure, repeat):
    """Best of ``repeat`` fresh interpreters, so the backend is picked at import."""
    env = {k: v for k, v in os.environ.items() if k != "ARRFREE_PURE_PYTHON"}
    if pure:
        env["ARRFREE_PURE_PYTHON"] = "1"
    best, backend = float("inf"), "?"
    for _ in range(repeat):
        out = subprocess.run([sys.executable, "-c", PIPELINE.format(names=names)],
                             capture_output=True, text=True, env=env, check=True).stdout.split()
        backend, best = out[0], min(best, float(out[1]))
    return backend, best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--names", nargs="*", default=["cs1", "cs239", "csA", "csB", "csC"])
    args = ap.parse_args()

    rows = random_rows(400, 300)
    t_py = time_kernel(_pykernels.axpy, rows, args.repeat)
    print(f"axpy kernel, python: {t_py * 1e3:8.2f} ms")
    if _ckernels is None:
        print("compiled extension not built; run `pip install -e . --no-build-isolation`")
        return
    t_c = time_kernel(_ckernels.axpy, rows, args.repeat)
    print(f"axpy kernel, cython: {t_c * 1e3:8.2f} ms  (speed-up {t_py / t_c:.2f}x)")

    for pure in (True, False):
        backend, secs = time_pipeline(args.names, pure, args.repeat)
        print(f"classify {' '.join(args.names)} with {backend:>6}: {secs:6.2f} s")


if __name__ == "__main__":
    main()
