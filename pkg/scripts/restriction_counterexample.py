"""Show that the plain prefix of a tour coloring can lose the CF property.

A tour coloring on [n'] is CF for FC_d(n'), but its prefix on [n] < n' closes
the cycle with a new pair {n, 1}. The dispatcher instead picks a window of the
tour whose closing pair keeps the palette certified.
"""

from cfpoly.colorers import cf_color_fc, color_from_eulerian, construction_graph, pick_construction
from cfpoly.girthgraphs import euler_tour
from cfpoly.hypergraphs import fc
from cfpoly.verify import find_cf_violation


def main():
    for d in (4, 6, 8, 10):
        key = pick_construction(d, d + 1)
        G = construction_graph(key)
        full = color_from_eulerian(G, euler_tour(G, start=0), G.n_edges)
        for n in range(d + 1, G.n_edges):
            bad = find_cf_violation(fc(d, n), full.restrict(n))
            if bad is not None:
                fixed = cf_color_fc(d, n)
                print(f"d={d} {key}: prefix on [{n}] fails on facet {bad}; "
                      f"dispatcher uses {fixed.construction} with {fixed.c} colors, "
                      f"violation={find_cf_violation(fc(d, n), fixed)}")
                break
        else:
            print(f"d={d} {key}: every prefix stays CF")


if __name__ == "__main__":
    main()
