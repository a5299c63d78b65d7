"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--n 200000] [--repeat 3]
"""

import argparse
import sys
import timeit

import numpy as np

from citebenford import _pykernels

try:
    from citebenford import _ckernels
except ImportError:
    _ckernels = None


def cases(n):
    rng = np.random.default_rng(1)
    ints = rng.integers(1, 10**12, n, dtype=np.int64)
    floats = 10.0 ** rng.uniform(-6, 6, n)
    return {
        "tally_int64": lambda k: k.tally_int64(ints, 10),
        "tally_float64": lambda k: k.tally_float64(floats, 10),
        "sample benford": lambda k: k.sample(_pykernels.LAW_BENFORD, n, 10, 4, 1.0, 12345),
        "sample uniform_digit": lambda k: k.sample(_pykernels.LAW_UNIFORM_DIGIT, n, 10, 4, 1.0, 12345),
        "sample zipf": lambda k: k.sample(_pykernels.LAW_ZIPF, n, 10, 4, 1.5, 12345),
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=200_000)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if _ckernels is None:
        print("compiled extension not built; only the Python kernels are available", file=sys.stderr)
    print(f"n = {args.n}, best of {args.repeat}")
    print(f"{'kernel':<22}{'python s':>12}{'cython s':>12}{'speedup':>10}")
    for name, fn in cases(args.n).items():
        py = min(timeit.repeat(lambda: fn(_pykernels), number=1, repeat=args.repeat))
        if _ckernels is None:
            print(f"{name:<22}{py:>12.4f}{'-':>12}{'-':>10}")
            continue
        cy = min(timeit.repeat(lambda: fn(_ckernels), number=1, repeat=args.repeat))
        # both backends must agree before timings mean anything
        a, b = fn(_pykernels), fn(_ckernels)
        same = np.array_equal(a[0], b[0]) and a[1] == b[1]
        print(f"{name:<22}{py:>12.4f}{cy:>12.4f}{py / cy:>9.1f}x" + ("" if same else "  MISMATCH"))


if __name__ == "__main__":
    main()
