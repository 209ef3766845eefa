"""Compare the compiled and pure-Python kernels on a few fixed workloads.

    python benchmarks/bench_kernels.py [--repeat N]

Each workload is run on both backends; results are checked for agreement
before timings are reported.
"""

import argparse
import sys
import timeit

from latmark.graded import _engine, enumerate_fiber, graded_markov
from latmark.kernels import _pykernels
from latmark.lattice import canonicalize, dot

try:
    from latmark.kernels import _ckernels
except ImportError:
    _ckernels = None


def workloads():
    mac = canonicalize([(1, -1, -1, 1), (1, -2, 2, -1)], 4)
    wide = canonicalize([(3, -4, 1, 0, 0), (0, 2, -3, 1, 0), (1, 0, 0, 3, -4)], 5)
    proj = canonicalize([(1, -1, 0), (6, 0, -1)], 3)

    def fiber_args(L, u):
        eng = _engine(L)
        rhs = [[dot(t, u) for t in lv] for lv in eng.tails]
        return (u, eng.basis, eng.coeffs, rhs, 10**6)

    big = enumerate_fiber(mac, (40, 0, 0, 40)).elements
    moves = [(b.plus, b.minus) for b in graded_markov(mac).basis]
    return [
        ("graver_completion macaulay", "graver_completion", (list(mac.basis_rows), 4)),
        ("graver_completion 3x5", "graver_completion", (list(wide.basis_rows), 5)),
        ("enumerate_points x3^40", "enumerate_points", fiber_args(proj, (0, 0, 40))),
        ("enumerate_points macaulay deg 80", "enumerate_points", fiber_args(mac, (40, 0, 0, 40))),
        (f"component_labels {len(big)} vertices", "component_labels", (list(big), moves)),
    ]


def _normalise(x):
    return sorted(x) if isinstance(x, (list, tuple)) and x and isinstance(x[0], tuple) else x


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    if _ckernels is None:
        print("compiled kernels not built; run: python setup.py build_ext --inplace")
        return 1
    print(f"{'workload':40s} {'python ms':>10s} {'cython ms':>10s} {'speedup':>8s}")
    for name, fn, call_args in workloads():
        py, cy = getattr(_pykernels, fn), getattr(_ckernels, fn)
        if _normalise(py(*call_args)) != _normalise(cy(*call_args)):
            print(f"{name}: backends disagree")
            return 2
        tp = min(timeit.repeat(lambda: py(*call_args), number=1, repeat=args.repeat)) * 1e3
        tc = min(timeit.repeat(lambda: cy(*call_args), number=1, repeat=args.repeat)) * 1e3
        print(f"{name:40s} {tp:10.2f} {tc:10.2f} {tp / tc:7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
