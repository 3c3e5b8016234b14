"""Time the compiled kernels against the pure-Python fallback.

Runs the three enumeration workloads through both modules and prints a
small table with the best wall-clock time of each and the speedup.  The
compiled column is skipped when the extension is not built.

Usage:
    python3 benchmarks/bench_backends.py
    python3 benchmarks/bench_backends.py --n 11 --m 16 --seq-n 12 --repeat 5
"""

import argparse
import time

from ncpseq import _kernels_py

try:
    from ncpseq import _kernels
except ImportError:
    _kernels = None


def best_of(fn, arg, repeat):
    """Best wall-clock seconds over `repeat` runs, plus the result size."""
    best = float("inf")
    items = 0
    for _ in range(repeat):
        started = time.perf_counter()
        items = fn(arg)
        best = min(best, time.perf_counter() - started)
    return items, best


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=11, help="special-partition size parameter")
    parser.add_argument("--m", type=int, default=16, help="SSP ground size")
    parser.add_argument("--seq-n", type=int, default=12, help="sequence length")
    parser.add_argument("--repeat", type=int, default=3, help="runs per measurement")
    args = parser.parse_args(argv)

    workloads = [
        (f"special partitions, n={args.n}", "count_special_partitions", args.n),
        (f"SSP partitions, m={args.m}", "count_ssp_partitions", args.m),
        (f"sequences, n={args.seq_n}", "count_catalan_sequences", args.seq_n),
    ]

    if _kernels is None:
        print("compiled extension not built; timing the pure backend only\n")

    header = f"{'workload':<28} {'items':>9} {'pure (s)':>10}"
    if _kernels is not None:
        header += f" {'compiled (s)':>13} {'speedup':>8}"
    print(header)
    print("-" * len(header))

    for label, name, arg in workloads:
        items, pure = best_of(getattr(_kernels_py, name), arg, args.repeat)
        row = f"{label:<28} {items:>9} {pure:>10.4f}"
        if _kernels is not None:
            comp_items, comp = best_of(getattr(_kernels, name), arg, args.repeat)
            if comp_items != items:
                raise SystemExit(f"backend disagreement on {label}: {comp_items} != {items}")
            row += f" {comp:>13.4f} {pure / comp:>7.1f}x"
        print(row)


if __name__ == "__main__":
    main()
