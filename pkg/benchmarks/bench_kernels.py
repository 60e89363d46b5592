"""Compare the compiled and numpy profile minimizers.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import timeit

import numpy as np

from nuradius.kernels import available_backends

SIZES = (4, 12, 36, 72, 144)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    backends = available_backends()
    rng = np.random.default_rng(0)
    names = sorted(backends)
    print(f"{'k':>5} " + " ".join(f"{n + ' (ms)':>16}" for n in names) + f" {'speedup':>9}")
    for k in SIZES:
        a, b = rng.standard_normal(k), rng.standard_normal(k)
        ref = None
        times = {}
        for name in names:
            fn = backends[name].profile_min
            res = fn(a, b, 1e-9)
            if ref is None:
                ref = res
            assert abs(res[1] - ref[1]) <= 1e-12, (name, res, ref)
            number = max(1, int(2000 / k))
            best = min(timeit.repeat(lambda: fn(a, b, 1e-9), number=number, repeat=args.repeat))
            times[name] = 1e3 * best / number
        speed = times["python"] / times["compiled"] if "compiled" in times else float("nan")
        print(f"{k:>5} " + " ".join(f"{times[n]:>16.4f}" for n in names) + f" {speed:>9.1f}x")


if __name__ == "__main__":
    main()
