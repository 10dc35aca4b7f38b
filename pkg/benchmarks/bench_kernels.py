"""Benchmark the compiled kernels against the pure-numpy fallback.

Runs the three hot operations (sup-compose, transitive closure, the
transitivity check) over a range of matrix sizes, plus the exponential
path-consistency search at its capped size, and prints per-call times
for both backends with the speedup ratio.

Usage:
    python3 benchmarks/bench_kernels.py
    python3 benchmarks/bench_kernels.py --sizes 8,32,128 --repeats 50
"""

import argparse
import time

import numpy as np

from fuzzrel import _kernels_py as pure
from fuzzrel.tnorms import EPS, TNorm

try:
    from fuzzrel import _ckernels as compiled
except ImportError:
    compiled = None

CODES = {TNorm.GODEL: 0, TNorm.LUKASIEWICZ: 1, TNorm.PRODUCT: 2}


def per_call_seconds(fn, repeats):
    fn()  # warm up
    start = time.perf_counter()
    for _ in range(repeats):
        fn()
    return (time.perf_counter() - start) / repeats


def fmt_seconds(value):
    if value is None:
        return "-"
    if value < 1e-3:
        return f"{value * 1e6:8.1f} us"
    return f"{value * 1e3:8.2f} ms"


def random_matrix(rng, n, density=0.5):
    mat = rng.random((n, n))
    return np.ascontiguousarray(np.where(rng.random((n, n)) < density, mat, 0.0))


def build_cases(sizes, path_size, code, rng):
    cases = []
    for n in sizes:
        mat = random_matrix(rng, n)
        cap = max(1, int(np.ceil(np.log2(max(n, 2)))) + 2)
        cases.append(
            (f"sup_compose      n={n:>3}", lambda m, mat=mat: m.sup_compose(mat, code))
        )
        cases.append(
            (
                f"closure          n={n:>3}",
                lambda m, mat=mat, cap=cap: m.transitive_closure_matrix(mat, code, cap),
            )
        )
        cases.append(
            (
                f"is_transitive    n={n:>3}",
                lambda m, mat=mat: m.is_transitive_matrix(mat, code, EPS),
            )
        )
    dense = random_matrix(rng, path_size, density=0.9)
    cases.append(
        (
            f"path_check       n={path_size:>3}",
            lambda m: m.path_consistency_violation(dense, code, EPS, path_size),
        )
    )
    return cases


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--sizes", default="4,8,16,64", help="comma-separated matrix sizes"
    )
    parser.add_argument("--repeats", type=int, default=200, help="calls per timing")
    parser.add_argument(
        "--tnorm",
        choices=[t.value for t in TNorm],
        default="godel",
        help="t-norm for every kernel call",
    )
    parser.add_argument(
        "--path-size", type=int, default=6, help="universe size for the path search"
    )
    parser.add_argument("--seed", type=int, default=7)
    args = parser.parse_args(argv)

    sizes = [int(s) for s in args.sizes.split(",")]
    code = CODES[TNorm.coerce(args.tnorm)]
    rng = np.random.default_rng(args.seed)

    if compiled is None:
        print("compiled backend not built; timing the pure backend only\n")

    print(f"t-norm: {args.tnorm}, repeats: {args.repeats}")
    header = f"{'operation':<24} {'pure':>12} {'compiled':>12} {'speedup':>9}"
    print(header)
    print("-" * len(header))
    for name, call in build_cases(sizes, args.path_size, code, rng):
        pure_t = per_call_seconds(lambda: call(pure), args.repeats)
        if compiled is None:
            print(f"{name:<24} {fmt_seconds(pure_t):>12} {'-':>12} {'-':>9}")
            continue
        comp_t = per_call_seconds(lambda: call(compiled), args.repeats)
        ratio = pure_t / comp_t if comp_t > 0 else float("inf")
        print(
            f"{name:<24} {fmt_seconds(pure_t):>12} {fmt_seconds(comp_t):>12} {ratio:>8.1f}x"
        )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
