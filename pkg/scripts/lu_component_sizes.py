"""Measured sizes, girths and component counts of D(k, q) for small k, q."""

import argparse
import time

from cfpoly.girthgraphs import components, girth, lu_component, lu_graph


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--q", type=int, nargs="+", default=[4, 8])
    parser.add_argument("--max-points", type=int, default=1 << 13, help="skip D(k, q) above this many points; 1 << 15 adds D(5, 8), about 5 min")
    args = parser.parse_args()
    print(f"{'k':>2} {'q':>3} {'|D|':>8} {'comps':>6} {'|CD|':>7} {'edges(CD)':>10} {'girth':>6} {'sec':>6}")
    for q in args.q:
        for k in range(2, 12):
            if q**k > args.max_points:
                break
            t0 = time.perf_counter()
            D = lu_graph(k, q)
            C = lu_component(k, q)
            print(f"{k:>2} {q:>3} {D.c:>8} {len(components(D)):>6} {C.c:>7} {C.n_edges:>10} "
                  f"{girth(C, cap=16) or '-':>6} {time.perf_counter() - t0:>6.2f}")


if __name__ == "__main__":
    main()
