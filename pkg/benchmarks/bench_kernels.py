"""Time the numba kernels against their numpy fallbacks.

Shapes mirror the hot spots: training attention (64 × 256) and inference
attention / prototype counting (512 × 4096).

    python3 benchmarks/bench_kernels.py [--repeat 20]
"""

import argparse
import timeit

import numpy as np

from protoattend import _kernels as K

SHAPES = [(64, 256), (512, 4096)]


def cases(rows, cols, rng):
    z = rng.standard_normal((rows, cols)) * 3.0
    p, _ = K.sparsemax_rows_numpy(z)
    g = rng.standard_normal((rows, cols))
    w = rng.dirichlet(np.full(cols, 0.05), size=rows)
    fr = np.array([0.5, 0.9, 0.95])
    return {
        "sparsemax_rows": ((z,), K.sparsemax_rows_numpy, getattr(K, "sparsemax_rows_numba", None)),
        "sparsemax_rows_backward": ((p, g), K.sparsemax_rows_backward_numpy, getattr(K, "sparsemax_rows_backward_numba", None)),
        "prototype_counts": ((w, fr), K.prototype_counts_numpy, getattr(K, "prototype_counts_numba", None)),
    }


def best_ms(fn, args, repeat):
    return min(timeit.repeat(lambda: fn(*args), number=1, repeat=repeat)) * 1e3


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=20)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    rng = np.random.default_rng(args.seed)

    print(f"numba available: {K.HAVE_NUMBA}")
    print(f"{'kernel':26s} {'shape':>11s} {'numpy ms':>10s} {'numba ms':>10s} {'speedup':>8s}")
    for rows, cols in SHAPES:
        for name, (a, f_np, f_nb) in cases(rows, cols, rng).items():
            t_np = best_ms(f_np, a, args.repeat)
            if f_nb is None:
                print(f"{name:26s} {rows:>5d}x{cols:<5d} {t_np:10.3f} {'-':>10s} {'-':>8s}")
                continue
            f_nb(*a)  # compile outside the timing
            t_nb = best_ms(f_nb, a, args.repeat)
            print(f"{name:26s} {rows:>5d}x{cols:<5d} {t_np:10.3f} {t_nb:10.3f} {t_np / t_nb:7.2f}x")


if __name__ == "__main__":
    main()
