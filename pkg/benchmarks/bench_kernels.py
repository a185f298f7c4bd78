"""Time the IE forward/backward kernel on each available backend.

    python benchmarks/bench_kernels.py [--repeat 20]

Prints one line per (shape, backend) with the best-of-repeat time and the
speedup of the compiled kernel over the numpy fallback.
"""

import argparse
import timeit

import numpy as np

from iemetric import kernels

SHAPES = [
    # (M, C, d, Q)
    (64, 10, 2, 9),
    (256, 10, 64, 9),
    (256, 10, 64, 1),
    (256, 100, 64, 20),
    (1024, 50, 128, 49),
]


def instance(m, nc, d, seed=0):
    rng = np.random.default_rng(seed)
    centers = rng.normal(size=(nc, d))
    labels = rng.integers(0, nc, size=m)
    feats = centers[labels] + rng.normal(scale=0.8, size=(m, d))
    return feats, labels, centers


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=20)
    args = p.parse_args(argv)
    backends = kernels.available_backends()
    print(f"backends: {', '.join(backends)} (default {kernels.BACKEND})")
    print(f"{'M':>5} {'C':>4} {'d':>4} {'Q':>3}  " + "  ".join(f"{b:>12}" for b in backends) + "  speedup")
    for m, nc, d, q in SHAPES:
        f, y, c = instance(m, nc, d)
        times = {}
        for name in backends:
            fn = kernels.get_backend(name).ie_forward_backward
            fn(f, y, c, 0.7, 0.1, q)  # warm up
            times[name] = min(timeit.repeat(lambda: fn(f, y, c, 0.7, 0.1, q), number=5, repeat=args.repeat)) / 5
        cols = "  ".join(f"{times[b] * 1e3:10.3f}ms" for b in backends)
        speed = f"{times['python'] / times['cython']:7.2f}x" if "cython" in times else "    n/a"
        print(f"{m:5d} {nc:4d} {d:4d} {q:3d}  {cols}  {speed}")


if __name__ == "__main__":
    main()
