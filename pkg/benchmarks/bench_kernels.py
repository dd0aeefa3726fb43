"""Time the compiled and pure-Python enumeration kernels, and the two series products.

    python3 benchmarks/bench_kernels.py [--max-len 18] [--repeat 3]
"""
import argparse
import time

from modgroup import _convolve, kernels


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - start)
    return min(times), result


def bench_kernels(max_len, repeat):
    print(f"enumeration kernels, words of length <= {max_len}")
    reference = None
    for name in kernels.available():
        k = kernels.get(name)
        jobs = {
            "identity": lambda: k.enumerate_identity(max_len),
            "pda": lambda: k.enumerate_pda(max_len),
            "reduced": lambda: k.count_reduced(min(max_len, 12)),
        }
        row = {}
        for job, fn in jobs.items():
            row[job], result = best_of(fn, repeat)
            if job == "identity":
                if reference is None:
                    reference = result
                assert result == reference, f"{name} disagrees"
        print(f"  {name:8s} " + "  ".join(f"{job} {t:8.4f}s" for job, t in row.items()))


def bench_products(order, repeat):
    from math import comb
    a = [comb(2 * n, n) for n in range(order)]
    print(f"series product, {order} terms of ~{a[-1].bit_length()} bits")
    t_kron, r1 = best_of(lambda: _convolve.mul_int(a, a, order), repeat)
    t_school, r2 = best_of(lambda: _convolve._schoolbook(a, a, order), 1)
    assert r1 == r2
    print(f"  kronecker {t_kron:8.4f}s  schoolbook {t_school:8.4f}s")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-len", type=int, default=18)
    parser.add_argument("--order", type=int, default=1000)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    bench_kernels(args.max_len, args.repeat)
    bench_products(args.order, args.repeat)


if __name__ == "__main__":
    main()
