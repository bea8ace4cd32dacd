"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--n 8] [--repeat 3]
"""

import argparse
import itertools
import timeit

from permtab import _accel
from permtab.enumeration import shapes_of_length


def fill_all(kern, shapes):
    return sum(len(kern.shape_fillings(rows)) for rows in shapes)


def count_all(kern, perms, values, lengths):
    return sum(kern.count_vincular(p, values, lengths) for p in perms)


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--n", type=int, default=8)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    shapes = [s.row_lengths for s in shapes_of_length(args.n)]
    perms = list(itertools.permutations(range(1, args.n + 1)))
    cases = {
        f"fill all tableaux, n={args.n}": lambda k: fill_all(k, shapes),
        f"count 3-21 over S_{args.n}": lambda k: count_all(k, perms, (3, 2, 1), (1, 2)),
        f"count 32-1 over S_{args.n}": lambda k: count_all(k, perms, (3, 2, 1), (2, 1)),
        f"count 1-2-3 over S_{args.n}": lambda k: count_all(k, perms, (1, 2, 3), (1, 1, 1)),
    }
    backends = _accel.backends()
    print("case\t" + "\t".join(f"{name} (s)" for name in backends) + "\tspeedup")
    for label, fn in cases.items():
        results = {name: fn(kern) for name, kern in backends.items()}
        if len(set(results.values())) != 1:
            raise SystemExit(f"backends disagree on {label}: {results}")
        times = {
            name: min(timeit.repeat(lambda: fn(kern), number=1, repeat=args.repeat))
            for name, kern in backends.items()
        }
        speedup = times["python"] / times["cython"] if "cython" in times else 1.0
        print(f"{label}\t" + "\t".join(f"{t:.3f}" for t in times.values()) + f"\t{speedup:.1f}x")


if __name__ == "__main__":
    main()
