"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--max-n 8]
"""

import argparse
import random
import time

from pogp import _pykernels, kernels
from pogp.pattern import Pogp


def best_of(repeat, fn):
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return best, result


def cases(max_n):
    prepared = lambda *texts: [Pogp.parse(t)._kernel() for t in texts]
    yield f"count Av(3-12) n={max_n}", lambda b: b.count_avoiders(max_n, prepared("3-12"))
    yield f"count Av(3-12-3) n={max_n}", lambda b: b.count_avoiders(max_n, prepared("3-12-3"))
    yield f"count Av(3-121-3) n={max_n}", lambda b: b.count_avoiders(max_n, prepared("3-121-3"))
    yield f"count Av(2-1-2, 3-12) n={max_n}", lambda b: b.count_avoiders(max_n, prepared("2-1-2", "3-12"))

    rng = random.Random(7)
    perms = []
    for _ in range(2000):
        p = list(range(1, 13))
        rng.shuffle(p)
        perms.append(p)
    letters, dashes = Pogp.parse("2-13-2")._kernel()

    def occurrences(b):
        return sum(b.count_occurrences(p, letters, dashes) for p in perms)

    yield "occurrences of 2-13-2 in 2000 perms of [12]", occurrences


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--max-n", type=int, default=8)
    args = ap.parse_args(argv)

    if kernels.compiled_backend is None:
        raise SystemExit("compiled kernels are not built; run `pip install -e . --no-build-isolation`")

    print(f"{'case':<46} {'python':>10} {'cython':>10} {'speedup':>8}")
    for name, fn in cases(args.max_n):
        t_py, r_py = best_of(args.repeat, lambda: fn(_pykernels))
        t_c, r_c = best_of(args.repeat, lambda: fn(kernels.compiled_backend))
        if r_py != r_c:
            raise SystemExit(f"{name}: backends disagree ({r_py} vs {r_c})")
        print(f"{name:<46} {t_py:>9.3f}s {t_c:>9.4f}s {t_py / t_c:>7.0f}x")


if __name__ == "__main__":
    main()
