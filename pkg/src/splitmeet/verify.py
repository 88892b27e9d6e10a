"""Self-checks on a single base and a small benchmark harness."""

from __future__ import annotations

import csv
import time
from dataclasses import dataclass
from typing import Iterable, Optional

from .ccm import CCMTrace, ccm
from .core import ImplicationBase
from .dualization import verify_dual
from .errors import BudgetExceeded, GeneratorError
from .generate import GeneratorSpec, generate
from .oracle import DEFAULT_BUDGET, enumerate_closed_sets, meet_irreducibles_oracle
from .trees import build_acyclic_tree, build_tree, h_build_tree, validate_tree

PASS, FAIL, SKIP = "pass", "fail", "skipped"


@dataclass
class Check:
    name: str
    status: str
    detail: str = ""


@dataclass
class VerifyReport:
    checks: list
    meets: int
    closed_sets: Optional[int] = None
    root_m1: Optional[int] = None
    root_m2: Optional[int] = None
    strategy: str = ""

    @property
    def ok(self) -> bool:
        # skipped checks neither pass nor fail; any failure fails the report
        return all(c.status != FAIL for c in self.checks)


def verify_base(base: ImplicationBase, budget: int = DEFAULT_BUDGET) -> VerifyReport:
    trace = CCMTrace()
    result = ccm(base, budget=budget, trace=trace)
    checks = []

    closed = None
    try:
        cs = enumerate_closed_sets(base, budget)
        closed = len(cs)
        oracle = meet_irreducibles_oracle(base, cs=cs)
        same = oracle == result.sets
        checks.append(Check("ccm-equals-oracle", PASS if same else FAIL,
                            f"|M| = {len(result)}, oracle {len(oracle)}"))
    except BudgetExceeded as exc:
        checks.append(Check("ccm-equals-oracle", SKIP, str(exc)))

    for name, tree in (("acyclic-tree-valid", build_acyclic_tree(base)),
                       ("h-tree-valid", h_build_tree(base))):
        ok, why = validate_tree(base, tree)
        checks.append(Check(name, PASS if ok else FAIL, why))
    strict = build_tree(base)
    if strict is None:
        checks.append(Check("strict-tree-valid", SKIP, "base is H-indecomposable"))
    else:
        ok, why = validate_tree(base, strict)
        checks.append(Check("strict-tree-valid", PASS if ok else FAIL, why))

    bad = [c for c in trace.combines if c[4] < c[2] + c[3]]
    checks.append(Check("meet-count-inequality", FAIL if bad else PASS,
                        f"{len(trace.combines)} combine steps"))

    try:
        dual_ok = all(verify_dual(i1, bm, bp, budget) for i1, bm, bp in trace.duals)
        checks.append(Check("borders-dual", PASS if dual_ok else FAIL,
                            f"{len(trace.duals)} dualizations"))
    except BudgetExceeded as exc:
        checks.append(Check("borders-dual", SKIP, str(exc)))

    root = trace.combines[-1] if trace.combines else None
    return VerifyReport(checks, len(result), closed,
                        root[2] if root else None, root[3] if root else None, trace.strategy)


BENCH_FIELDS = ("n", "m", "mode", "strategy", "millis", "|M|", "agreed")


def read_bench_specs(path) -> list[tuple[GeneratorSpec, int]]:
    """CSV with header ``mode,n,m,p,k,seed,count`` (missing columns default)."""
    out = []
    with open(path, newline="", encoding="utf-8") as fh:
        for row in csv.DictReader(fh):
            spec = GeneratorSpec(n=int(row["n"]), m=int(row.get("m") or 0), p=int(row.get("p") or 2),
                                 mode=row.get("mode") or "random", k=int(row.get("k") or 2),
                                 seed=int(row.get("seed") or 0))
            out.append((spec, int(row.get("count") or 1)))
    return out


def _timed(fn):
    start = time.perf_counter()
    value = fn()
    return value, (time.perf_counter() - start) * 1000.0


def bench(specs: Iterable[tuple[GeneratorSpec, int]], budget: int = DEFAULT_BUDGET,
          oracle_max_n: int = 12) -> list[dict]:
    rows = []
    for spec, count in specs:
        for rep in range(count):
            s = GeneratorSpec(spec.n, spec.m, spec.p, spec.mode, spec.k, spec.seed + rep)
            common = {"n": s.n, "m": s.m, "mode": s.mode}
            try:
                base = generate(s)
            except GeneratorError as exc:
                rows.append({**common, "strategy": "generate", "millis": "", "|M|": "",
                             "agreed": f"error: {exc}"})
                continue
            for name, fn in (("build_tree", build_tree), ("build_acyclic_tree", build_acyclic_tree)):
                _, ms = _timed(lambda: fn(base))
                rows.append({**common, "strategy": name, "millis": f"{ms:.3f}", "|M|": "", "agreed": ""})
            trace = CCMTrace()
            try:
                result, ms = _timed(lambda: ccm(base, budget=budget, trace=trace))
            except BudgetExceeded as exc:
                rows.append({**common, "strategy": "ccm", "millis": "", "|M|": "",
                             "agreed": f"error: {exc}"})
                continue
            agreed = ""
            if s.n <= oracle_max_n:
                try:
                    agreed = str(meet_irreducibles_oracle(base, budget) == result.sets).lower()
                except BudgetExceeded:
                    agreed = ""
            rows.append({**common, "strategy": trace.strategy, "millis": f"{ms:.3f}",
                         "|M|": len(result), "agreed": agreed})
    return rows


def write_bench_csv(rows: list[dict], fh) -> None:
    writer = csv.DictWriter(fh, fieldnames=BENCH_FIELDS)
    writer.writeheader()
    writer.writerows(rows)
