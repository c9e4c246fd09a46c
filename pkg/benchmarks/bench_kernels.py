"""Compare the compiled and pure-Python counting kernels.

    python3 benchmarks/bench_kernels.py [--row table6.1] [--levels 2 3 4 5] [--repeat 3]

Each case times ``level_histogram`` on the redundancy rows of a published
code: every t-subset of rows is XORed and the weights are tallied. The two
backends must return identical histograms; the script stops if they do not.
"""

import argparse
import math
import time

import numpy as np

from selfdual import kernel
from selfdual.pipeline import record_for_row


def best_of(fn, repeat):
    best, out = math.inf, None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--row", default="table6.1", help="manifest row supplying the code")
    ap.add_argument("--levels", type=int, nargs="+", default=[2, 3, 4, 5])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--python-limit", type=int, default=1_000_000,
                    help="skip the Python backend above this many subsets")
    args = ap.parse_args(argv)

    code = record_for_row(args.row).code()
    rows = kernel.pack_rows(code.redundancy)
    print(f"{args.row}: [{code.n},{code.k}], compiled backend {'available' if kernel.COMPILED else 'missing'}")
    print(f"{'t':>3} {'subsets':>10} {'python ms':>10} {'compiled ms':>11} {'speedup':>8}")
    for t in args.levels:
        subsets = math.comb(code.k, t)
        times = {}
        hists = {}
        for name in kernel.BACKENDS:
            if name == "python" and subsets > args.python_limit:
                continue
            times[name], hists[name] = best_of(
                lambda: kernel.level_histogram(rows, t, code.n, workers=1, backend=name), args.repeat)
        if len(hists) == 2 and not np.array_equal(hists["python"], hists["compiled"]):
            raise SystemExit(f"backends disagree at t={t}")
        py, cc = times.get("python"), times.get("compiled")
        speed = f"{py / cc:8.0f}x" if py and cc else f"{'-':>9}"
        print(f"{t:3} {subsets:10} {1e3 * py if py else float('nan'):10.2f} "
              f"{1e3 * cc if cc else float('nan'):11.2f} {speed}")


if __name__ == "__main__":
    main()
