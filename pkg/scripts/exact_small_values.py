"""Exact CF-chromatic and chromatic numbers of small FC_d(n), next to the lower bounds."""

import argparse
import time

from cfpoly.errors import ResourceLimitError
from cfpoly.hypergraphs import fc
from cfpoly.palette import sqrt_lower_bound
from cfpoly.verify import SearchBudget, cf_chromatic_exact, chi_exact


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--dims", type=int, nargs="+", default=[2, 3, 4, 5, 6, 7])
    parser.add_argument("--extra", type=int, default=7, help="n runs from d+1 to d+1+extra")
    parser.add_argument("--max-nodes", type=int, default=2_000_000)
    args = parser.parse_args()
    print(f"{'d':>3} {'n':>3} {'chi':>4} {'CF':>4} {'lb':>4} {'sec':>7}")
    for d in args.dims:
        for n in range(d + 1, d + 2 + args.extra):
            t0 = time.perf_counter()
            budget = SearchBudget(args.max_nodes)
            try:
                cf = cf_chromatic_exact(fc(d, n), budget)
            except ResourceLimitError:
                cf = "?"
            chi = chi_exact(fc(d, n), budget)
            lb = sqrt_lower_bound(n, d) if d % 2 == 0 and d >= 4 else "-"
            print(f"{d:>3} {n:>3} {chi:>4} {cf:>4} {lb:>4} {time.perf_counter() - t0:>7.2f}")


if __name__ == "__main__":
    main()
