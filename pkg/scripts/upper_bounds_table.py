"""Sweep the constructive colorers and write the upper-bounds CSV.

    python scripts/upper_bounds_table.py --max-n 40 --out results/upper_bounds.csv
"""

import argparse
import sys
from pathlib import Path

from cfpoly.cli import main

if __name__ == "__main__":
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-n", type=int, default=40)
    parser.add_argument("--out", default="results/upper_bounds.csv")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    Path(args.out).parent.mkdir(parents=True, exist_ok=True)
    sys.exit(main(["--seed", str(args.seed), "table", "--suite", "upper-bounds",
                   "--max-n", str(args.max_n), "--out", args.out]))
