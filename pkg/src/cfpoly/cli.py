"""Command-line front end: ``cfpoly {color,verify,exact,certify,palette,table,ucycle}``.

Exit codes: 0 property holds / success, 1 property violated, 2 malformed
input or unsupported parameters, 3 search budget exhausted.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from . import colorers
from .errors import ResourceLimitError
from .girthgraphs import certify_for_dimension
from .hypergraphs import (
    HypergraphFamily,
    cycle,
    disjoint_paths,
    fc,
    hyperedge_count,
    matching,
    two_intervals,
)
from .palette import (
    find_bad_submultigraph,
    palette_graph,
    read_multigraph,
    sqrt_lower_bound,
    write_multigraph,
)
from .verify import (
    Coloring,
    SearchBudget,
    chi_exact,
    cf_chromatic_exact,
    find_cf_violation,
    find_proper_violation,
    spot_check_cf,
)

EXIT_OK, EXIT_VIOLATED, EXIT_ERROR, EXIT_LIMIT = 0, 1, 2, 3

CSV_COLUMNS = ["family", "d_or_r", "n", "colors", "lower_bound", "verified", "construction", "seconds"]

# above this many facets the table falls back to random spot checks
FULL_CHECK_LIMIT = 2_000_000


class CliError(Exception):
    pass


def _family(args) -> HypergraphFamily:
    kind = args.family
    need = {"fc": ("d", "n"), "d": ("r", "m", "n"), "i2": ("n",), "cycle": ("n",), "matching": ("n",)}[kind]
    missing = [k for k in need if getattr(args, k, None) is None]
    if missing:
        raise CliError(f"--family {kind} needs " + ", ".join(f"--{k}" for k in missing))
    if kind == "fc":
        return fc(args.d, args.n)
    if kind == "d":
        return disjoint_paths(args.r, args.m, args.n)
    if kind == "i2":
        return two_intervals(args.n)
    return cycle(args.n) if kind == "cycle" else matching(args.n)


def _read_coloring(path: str) -> Coloring:
    try:
        return Coloring.from_json(Path(path).read_text())
    except (OSError, json.JSONDecodeError, KeyError, TypeError) as exc:
        raise CliError(f"cannot read coloring from {path}: {exc}") from exc


def _write(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_color(args) -> int:
    if args.family == "d" and args.m is None:
        args.m = 2
    f = _family(args)
    if args.proper:
        if f.kind != "FC":
            raise CliError("--proper is only available for --family fc")
        phi = colorers.proper_color(f.d, f.n)
    elif f.kind == "FC":
        phi = colorers.cf_color_fc(f.d, f.n) if f.d % 2 == 0 else colorers.cf_color_odd(f.d, f.n)
    elif f.kind == "I2":
        phi = colorers.cf_color_i2(f.n)
    elif f.kind == "D":
        if f.m != 2:
            raise CliError("only m = 2 is supported for --family d")
        phi = colorers.cf_color_d2r(f.r, f.n, SearchBudget(args.max_nodes))
    else:
        raise CliError(f"no colorer for --family {args.family}")
    _write(phi.to_json() + "\n", args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    phi = _read_coloring(args.coloring)
    if args.n is None:
        args.n = phi.n
    if args.family == "d" and args.m is None:
        args.m = 2
    f = _family(args)
    witness = find_proper_violation(f, phi) if args.proper else find_cf_violation(f, phi)
    label = "proper" if args.proper else "conflict-free"
    if witness is None:
        print(label)
        return EXIT_OK
    print(f"violated: not {label}; witness {' '.join(map(str, witness))}")
    return EXIT_VIOLATED


def cmd_exact(args) -> int:
    if args.family == "d" and args.m is None:
        args.m = 2
    f = _family(args)
    budget = SearchBudget(args.max_nodes)
    print(chi_exact(f, budget) if args.proper else cf_chromatic_exact(f, budget))
    return EXIT_OK


def cmd_certify(args) -> int:
    try:
        with open(args.graph) as fp:
            G = read_multigraph(fp)
    except OSError as exc:
        raise CliError(f"cannot read graph from {args.graph}: {exc}") from exc
    cert = certify_for_dimension(G, args.d)
    if cert.passed:
        print(f"pass: certified for d={args.d}")
        return EXIT_OK
    print(f"fail: certificate for d={args.d} violated")
    for v in cert.violations:
        print(f"  {v}")
    return EXIT_VIOLATED


def cmd_palette(args) -> int:
    phi = _read_coloring(args.coloring)
    base = cycle(phi.n) if args.base == "cycle" else matching(phi.n)
    P = palette_graph(base, phi)
    buf = io.StringIO()
    write_multigraph(P, buf)
    _write(buf.getvalue(), args.out)
    if args.bad is not None:
        found = find_bad_submultigraph(P, args.bad)
        if found is None:
            print(f"no bad sub-multigraph with {args.bad} edges", file=sys.stderr)
            return EXIT_OK
        print(f"bad sub-multigraph with {args.bad} edges: {list(found)}", file=sys.stderr)
        return EXIT_VIOLATED
    return EXIT_OK


def cmd_ucycle(args) -> int:
    U = colorers.universal_cycle(args.c, args.r, SearchBudget(args.max_nodes))
    print(" ".join(map(str, U.sequence)))
    return EXIT_OK


# --- experiment tables -----------------------------------------------------------------


def _verify_row(f: HypergraphFamily, phi: Coloring, seed: int, samples: int) -> str:
    if hyperedge_count(f) <= FULL_CHECK_LIMIT:
        return "yes" if find_cf_violation(f, phi) is None else "no"
    return "spot" if spot_check_cf(f, phi, samples, seed) is None else "no"


def _table_jobs(suite: str, max_n: int) -> list[tuple]:
    jobs: list[tuple] = []
    if suite == "upper-bounds":
        for d in (4, 6, 8, 10, 12, 14, 16, 18, 20):
            jobs += [("FC", d, n) for n in range(d + 1, max_n + 1)]
        for d in (3, 5, 7):
            jobs += [("FC", d, n) for n in range(d + 1, max_n + 1)]
        jobs += [("I2", 0, n) for n in range(3, max_n + 1)]
        for r in (2, 3):
            jobs += [("D", r, n) for n in range(2 * r + 2, max_n + 1)]
    elif suite == "exact":
        for d in (3, 4, 5, 6, 7):
            jobs += [("FC", d, n) for n in range(d + 1, min(max_n, d + 8) + 1)]
    else:
        raise CliError(f"unknown suite {suite!r}")
    return jobs


def _table_row(job: tuple, seed: int, samples: int, max_nodes: int) -> dict:
    family, p, n = job
    t0 = time.perf_counter()
    lower: int | str = ""
    if family == "FC":
        f = fc(p, n)
        if p % 2 == 0:
            phi = colorers.cf_color_fc(p, n)
            lower = sqrt_lower_bound(n, p)
        else:
            phi = colorers.cf_color_odd(p, n)
            lower = 2 if p == 3 else 3
    elif family == "I2":
        f, phi = two_intervals(n), colorers.cf_color_i2(n)
    else:
        f, phi = disjoint_paths(p, 2, n), colorers.cf_color_d2r(p, n, SearchBudget(max_nodes))
    verified = _verify_row(f, phi, seed, samples)
    return {
        "family": family,
        "d_or_r": p if family != "I2" else "",
        "n": n,
        "colors": phi.c,
        "lower_bound": lower,
        "verified": verified,
        "construction": json.dumps(phi.construction, sort_keys=True),
        "seconds": f"{time.perf_counter() - t0:.4f}",
    }


def _exact_row(job: tuple, max_nodes: int) -> dict:
    _, d, n = job
    t0 = time.perf_counter()
    phi_value = cf_chromatic_exact(fc(d, n), SearchBudget(max_nodes))
    lower = sqrt_lower_bound(n, d) if d % 2 == 0 else (2 if d == 3 else 3)
    return {
        "family": "FC",
        "d_or_r": d,
        "n": n,
        "colors": phi_value,
        "lower_bound": lower,
        "verified": "exact",
        "construction": json.dumps({"kind": "exact"}),
        "seconds": f"{time.perf_counter() - t0:.4f}",
    }


def cmd_table(args) -> int:
    jobs = _table_jobs(args.suite, args.max_n)
    if args.suite == "exact":
        work = lambda job: _exact_row(job, args.max_nodes)  # noqa: E731
    else:
        work = lambda job: _table_row(job, args.seed, args.samples, args.max_nodes)  # noqa: E731
    with ThreadPoolExecutor(max_workers=args.workers) as pool:
        rows = list(pool.map(work, jobs))
    rows.sort(key=lambda r: (r["family"], str(r["d_or_r"]).zfill(3), r["n"]))
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    _write(buf.getvalue(), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cfpoly", description=__doc__.splitlines()[0])
    parser.add_argument("--seed", type=int, default=0, help="seed for sampled checks (default 0)")
    sub = parser.add_subparsers(dest="command", required=True)

    def family_flags(p, families=("fc", "d", "i2", "cycle", "matching")):
        p.add_argument("--family", choices=families, required=True)
        p.add_argument("--d", type=int)
        p.add_argument("--r", type=int)
        p.add_argument("--m", type=int, help="number of paths for --family d (default 2)")
        p.add_argument("--n", type=int)

    def budget_flag(p):
        p.add_argument("--max-nodes", type=int, default=SearchBudget().max_nodes)

    p = sub.add_parser("color", help="construct a coloring and write it as JSON")
    family_flags(p, ("fc", "d", "i2"))
    p.add_argument("--proper", action="store_true", help="proper instead of conflict-free")
    p.add_argument("--out")
    budget_flag(p)
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("verify", help="check a coloring JSON against a hypergraph")
    family_flags(p)
    p.add_argument("--coloring", required=True)
    p.add_argument("--proper", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("exact", help="exact CF-chromatic (or chromatic) number by backtracking")
    family_flags(p)
    p.add_argument("--proper", action="store_true")
    budget_flag(p)
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("certify", help="check the girth / Euler certificate of a graph file")
    p.add_argument("--graph", required=True)
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("palette", help="write the palette multigraph of a coloring")
    p.add_argument("--coloring", required=True)
    p.add_argument("--base", choices=("cycle", "matching"), default="cycle")
    p.add_argument("--bad", type=int, metavar="L", help="also search a bad sub-multigraph with L edges")
    p.add_argument("--out")
    p.set_defaults(func=cmd_palette)

    p = sub.add_parser("table", help="CSV experiment table")
    p.add_argument("--suite", choices=("upper-bounds", "exact"), default="upper-bounds")
    p.add_argument("--max-n", type=int, default=40)
    p.add_argument("--samples", type=int, default=20_000, help="spot-check samples for large instances")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out")
    budget_flag(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("ucycle", help="print a universal cycle for r-subsets of [c]")
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    budget_flag(p)
    p.set_defaults(func=cmd_ucycle)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (CliError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
