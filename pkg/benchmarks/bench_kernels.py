"""Compare the compiled and numpy polynomial-evaluation kernels.

    python benchmarks/bench_kernels.py [--points N] [--repeat R]

Workloads are the kets used by the verification sweeps plus a dense random
polynomial.  Both backends are checked to agree before timing.
"""
import argparse
import timeit

import numpy as np

from spinharm.kernels import _pyeval
from spinharm.multiplet import multiplet
from spinharm.poly import poly_arrays

try:
    from spinharm.kernels import _ceval
except ImportError:
    _ceval = None


def workloads(rng):
    for j in (1, "5/2", 6):
        k = multiplet(j).kets[len(multiplet(j)) // 2]
        yield f"ket j={j}, m={k.m}", poly_arrays(k.body)
    exps = rng.integers(0, 8, size=(200, 4)).astype(np.int64)
    coeffs = rng.normal(size=200) + 1j * rng.normal(size=200)
    yield "random, 200 terms", (exps, coeffs)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--points", type=int, default=20_000)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    rng = np.random.default_rng(args.seed)
    z1 = rng.normal(size=args.points) + 1j * rng.normal(size=args.points)
    z2 = rng.normal(size=args.points) + 1j * rng.normal(size=args.points)

    if _ceval is None:
        print("compiled kernel not built; timing the numpy backend only")
    print(f"{'workload':<24}{'terms':>7}{'numpy ms':>12}{'cython ms':>12}{'speedup':>10}")
    for name, (exps, coeffs) in workloads(rng):
        t_py = min(timeit.repeat(lambda: _pyeval.poly_eval_batch(exps, coeffs, z1, z2), number=1, repeat=args.repeat))
        if _ceval is not None:
            a = _ceval.poly_eval_batch(exps, coeffs, z1, z2)
            b = _pyeval.poly_eval_batch(exps, coeffs, z1, z2)
            scale = max(1.0, float(np.max(np.abs(b))))
            assert np.max(np.abs(a - b)) <= 1e-12 * scale, name
            t_c = min(timeit.repeat(lambda: _ceval.poly_eval_batch(exps, coeffs, z1, z2), number=1, repeat=args.repeat))
            print(f"{name:<24}{len(coeffs):>7}{1e3 * t_py:>12.2f}{1e3 * t_c:>12.2f}{t_py / t_c:>9.1f}x")
        else:
            print(f"{name:<24}{len(coeffs):>7}{1e3 * t_py:>12.2f}{'-':>12}{'-':>10}")


if __name__ == "__main__":
    main()
