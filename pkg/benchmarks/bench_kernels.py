"""Compare the pure-Python and compiled combinatorial kernels.

    python benchmarks/bench_kernels.py [--repeat 5]

Each workload is run on both backends; the outputs are checked for equality
before any timing is reported.
"""
import argparse
import sys
import timeit

from momentlab import kernels
from momentlab.identities import HankelMinorSpec, gv_candidates
from momentlab.jacobi import JacobiParams
from momentlab.paths import LukasFree


def workloads():
    yield "motzkin paths n=14", lambda k: k.path_levels(14, False, False)
    yield "lukasiewicz paths n=12", lambda k: k.path_levels(12, True, False)
    yield "irreducible motzkin n=15", lambda k: k.path_levels(15, False, True)
    yield "count lukasiewicz n=200", lambda k: k.count_paths(200, True, False)

    specs = [
        ("GV motzkin Delta_4", JacobiParams.symbolic(5).scheme(), HankelMinorSpec.delta(4)),
        ("GV lukas-free H(0,1,2;1,2,3)", LukasFree.symbolic(6),
         HankelMinorSpec((0, 1, 2), (1, 2, 3))),
        ("GV lukas-free H(1,2,3,4;1,2,3,4)", LukasFree.symbolic(8),
         HankelMinorSpec((1, 2, 3, 4), (1, 2, 3, 4))),
    ]
    for label, scheme, spec in specs:
        _, cands = gv_candidates(scheme, spec)
        yield label, (lambda cands: lambda k: k.disjoint_configurations(cands, 10 ** 8))(cands)


def _result(fn, impl):
    out = fn(impl)
    return out if isinstance(out, (int, tuple)) else list(out)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    if kernels.compiled_impl is None:
        print("compiled kernels are not built; run `pip install -e . --no-build-isolation`")
        return 1
    py, cy = kernels.python_impl, kernels.compiled_impl
    print(f"{'workload':36} {'python ms':>10} {'cython ms':>10} {'speedup':>8}")
    for label, fn in workloads():
        if _result(fn, py) != _result(fn, cy):
            print(f"{label}: backends disagree")
            return 1
        t_py = min(timeit.repeat(lambda: fn(py), number=1, repeat=args.repeat)) * 1e3
        t_cy = min(timeit.repeat(lambda: fn(cy), number=1, repeat=args.repeat)) * 1e3
        print(f"{label:36} {t_py:10.2f} {t_cy:10.2f} {t_py / t_cy:7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
