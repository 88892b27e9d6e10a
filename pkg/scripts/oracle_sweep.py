"""Compare ccm with the brute-force oracle over seeded random corpora."""

import argparse
import itertools
import time

from splitmeet.ccm import CCMTrace, ccm
from splitmeet.core import serialize
from splitmeet.generate import layered_corpus, random_corpus
from splitmeet.oracle import meet_irreducibles_oracle


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--random", type=int, default=1000)
    ap.add_argument("--layered", type=int, default=200)
    ap.add_argument("--seed", type=int, default=2024)
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--max-m", type=int, default=12)
    args = ap.parse_args(argv)

    start = time.perf_counter()
    source = itertools.chain(
        random_corpus(args.random, args.seed, args.max_n, args.max_m),
        layered_corpus(args.layered, args.seed + 1, args.max_n, args.max_m))
    counts, mismatches, steps = {}, 0, 0
    for spec, base in source:
        trace = CCMTrace()
        got = ccm(base, trace=trace).sets
        counts[trace.strategy] = counts.get(trace.strategy, 0) + 1
        steps += len(trace.combines)
        if got != meet_irreducibles_oracle(base):
            mismatches += 1
            print("mismatch:", spec)
            print(serialize(base))
    total = sum(counts.values())
    print(f"{total} instances, {mismatches} mismatches, {steps} combine steps, "
          f"strategies {counts}, {time.perf_counter() - start:.1f} s")
    return 1 if mismatches else 0


if __name__ == "__main__":
    raise SystemExit(main())
