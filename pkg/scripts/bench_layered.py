"""Time the tree builders and ccm on generated instances; writes a CSV.

Without arguments it runs the specs in data/bench_specs.csv.
"""

import argparse
import sys
from pathlib import Path

from splitmeet.verify import bench, read_bench_specs, write_bench_csv

DEFAULT_SPECS = Path(__file__).resolve().parent.parent / "data" / "bench_specs.csv"


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("specs", nargs="?", default=str(DEFAULT_SPECS))
    ap.add_argument("--out", default=None)
    ap.add_argument("--oracle-max-n", type=int, default=16)
    args = ap.parse_args(argv)

    rows = bench(read_bench_specs(args.specs), oracle_max_n=args.oracle_max_n)
    if args.out:
        with open(args.out, "w", newline="") as fh:
            write_bench_csv(rows, fh)
    else:
        write_bench_csv(rows, sys.stdout)

    slowest = {}
    for row in rows:
        if row["millis"]:
            key = (row["mode"], row["n"], row["strategy"])
            slowest[key] = max(slowest.get(key, 0.0), float(row["millis"]))
    print("\nslowest per (mode, n, strategy):", file=sys.stderr)
    for (mode, n, strategy), ms in sorted(slowest.items()):
        print(f"  {mode:8} n={n:<5} {strategy:20} {ms:10.1f} ms", file=sys.stderr)
    disagreements = [r for r in rows if r["agreed"] == "false"]
    return 1 if disagreements else 0


if __name__ == "__main__":
    raise SystemExit(main())
