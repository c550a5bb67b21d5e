"""Backend benchmark: compiled kernel vs pure-Python fallback.

Times the raw convolution kernel on integer vectors of several sizes and
magnitudes, then a realistic workload (high-order operator applications),
once per available backend.  Results go to stdout as a small table.

Run from the repository root:

    python3 benchmarks/bench_kernel.py
    python3 benchmarks/bench_kernel.py --repeat 7 --workload-n 10
"""
import argparse
import timeit

from genjacobi import kernel
from genjacobi.genjacobi import Params, _gen_jacobi_cached, gen_jacobi
from genjacobi.operators import apply_combined, apply_Lfull
from genjacobi.verify import SplitMix64, random_poly


def conv_case(size: int, digits: int, rng: SplitMix64):
    lim = 10 ** digits
    a = [rng.randint(-lim, lim) for _ in range(size)]
    b = [rng.randint(-lim, lim) for _ in range(size)]
    return a, b


def bench_conv(repeat: int) -> list:
    rng = SplitMix64(2024)
    rows = []
    for size, digits in ((8, 2), (32, 6), (64, 18), (64, 60)):
        a, b = conv_case(size, digits, rng)
        loops = max(1, 20000 // (size * size))
        times = {}
        for name in kernel.BACKENDS:
            kernel.use_backend(name)
            t = min(timeit.repeat(lambda: kernel.conv(a, b),
                                  number=loops, repeat=repeat))
            times[name] = t / loops
        rows.append((f"conv n={size} ~{digits}-digit", times))
    return rows


def workload(n: int) -> None:
    # end-to-end: build generalized polynomials and push them through the
    # highest-order operator; exercises conv, add_scaled, and gcd paths
    pr = Params(2, 2, 1, 1)
    _gen_jacobi_cached.cache_clear()
    for k in range(n + 1):
        y = gen_jacobi(k, pr)
        apply_combined(y, pr)
        apply_Lfull(y, 2, 2)
    rng = SplitMix64(7)
    for _ in range(5):
        apply_Lfull(random_poly(rng, 12), 2, 2)


def bench_workload(repeat: int, n: int) -> list:
    times = {}
    for name in kernel.BACKENDS:
        kernel.use_backend(name)
        times[name] = min(timeit.repeat(lambda: workload(n),
                                        number=1, repeat=repeat))
    return [(f"operator workload n<={n}", times)]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5,
                    help="timing repetitions, best-of is reported")
    ap.add_argument("--workload-n", type=int, default=12,
                    help="polynomial index cap for the macro workload")
    args = ap.parse_args()

    names = list(kernel.BACKENDS)
    initial = kernel.BACKEND
    print(f"backends: {', '.join(names)}  (active at import: {initial})")
    if "cython" not in names:
        print("compiled kernel not built; timing the fallback only")

    rows = bench_conv(args.repeat) + bench_workload(args.repeat, args.workload_n)
    kernel.use_backend(initial)

    width = max(len(r[0]) for r in rows)
    header = "case".ljust(width) + "".join(f"  {n:>12}" for n in names)
    if len(names) > 1:
        header += "  speedup"
    print(header)
    for label, times in rows:
        line = label.ljust(width)
        for n in names:
            line += f"  {times[n] * 1e6:>10.1f}us"
        if len(names) > 1 and times.get("cython"):
            line += f"  {times['python'] / times['cython']:>6.2f}x"
        print(line)


if __name__ == "__main__":
    main()
