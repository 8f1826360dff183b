"""Compare the compiled and pure-numpy kernel backends.

    python3 benchmarks/bench_kernels.py [--repeat N]

Times im2col, col2im and the fused Adam update on the shapes that dominate a
pendulum training step, checks the two backends agree, and prints a table.
"""

import argparse
import timeit

import numpy as np

from ctrlvae.kernels import _reference

try:
    from ctrlvae.kernels import _fast
except ImportError:
    _fast = None


def cases(batch):
    rng = np.random.default_rng(0)
    # first encoder conv: 2 -> 16 channels, 48x48, k3 s2 p1
    x = rng.standard_normal((batch, 2, 48, 48))
    geom = (3, 3, 2, 2, 1, 1, 24, 24)
    cols = _reference.im2col(x, *geom)
    # second encoder conv input
    x2 = rng.standard_normal((batch, 16, 24, 24))
    geom2 = (3, 3, 2, 2, 1, 1, 12, 12)
    cols2 = _reference.im2col(x2, *geom2)
    n = 2_387_022
    adam = [rng.standard_normal(n), rng.standard_normal(n), np.zeros(n), np.zeros(n)]

    def adam_args(mod):
        p, g, m, v = (a.copy() for a in adam)
        return lambda: mod.adam_update(p, g, m, v, 3e-4, 0.9, 0.999, 1e-8, 0.1, 0.001)

    return [
        ("im2col 2x48x48", lambda mod: (lambda: mod.im2col(x, *geom))),
        ("im2col 16x24x24", lambda mod: (lambda: mod.im2col(x2, *geom2))),
        ("col2im 2x48x48", lambda mod: (lambda: mod.col2im(cols, 2, 48, 48, *geom))),
        ("col2im 16x24x24", lambda mod: (lambda: mod.col2im(cols2, 16, 24, 24, *geom2))),
        ("adam 2.39M params", adam_args),
    ]


def check_agreement(batch):
    rng = np.random.default_rng(1)
    x = rng.standard_normal((batch, 3, 17, 17))
    g = (5, 5, 2, 2, 2, 2, 9, 9)
    a, b = _fast.im2col(x, *g), _reference.im2col(x, *g)
    assert np.array_equal(a, b)
    assert np.allclose(_fast.col2im(a, 3, 17, 17, *g), _reference.col2im(b, 3, 17, 17, *g),
                       rtol=0, atol=1e-12)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--batch", type=int, default=128)
    args = ap.parse_args()
    if _fast is None:
        print("compiled backend not built; run `pip install -e . --no-build-isolation` first")
        return
    check_agreement(4)
    print(f"{'kernel':<20}{'cython ms':>12}{'numpy ms':>12}{'speedup':>10}")
    for name, make in cases(args.batch):
        times = []
        for mod in (_fast, _reference):
            fn = make(mod)
            fn()
            times.append(min(timeit.repeat(fn, number=1, repeat=args.repeat)) * 1e3)
        print(f"{name:<20}{times[0]:>12.2f}{times[1]:>12.2f}{times[1] / times[0]:>9.1f}x")


if __name__ == "__main__":
    main()
