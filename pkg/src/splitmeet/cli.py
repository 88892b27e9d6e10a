"""Command-line interface.

Exit codes: 0 success, 1 usage or input error, 2 verification failure,
3 budget exceeded.
"""

from __future__ import annotations

import argparse
import sys

from . import core
from .ccm import CCMTrace, ccm
from .closure import closure
from .core import read_base, sorted_family
from .dualization import ldual, min_transversals, parse_hypergraph
from .errors import BudgetExceeded, SplitmeetError
from .generate import MODES, GeneratorSpec, generate
from .oracle import DEFAULT_BUDGET, covers_of, enumerate_closed_sets, meet_irreducibles_oracle
from .splits import find_acyclic_split, find_split, is_split, premise_components
from .trees import build_acyclic_tree, build_tree, dumps, h_build_tree
from .verify import bench, read_bench_specs, verify_base, write_bench_csv

EXIT_USAGE, EXIT_VERIFY, EXIT_BUDGET = 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit(lines, out=None):
    text = "\n".join(lines) + ("\n" if lines else "")
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _budget(args):
    return args.budget if args.budget is not None else (args.global_budget or DEFAULT_BUDGET)


def _out(args):
    return getattr(args, "out", None) or args.global_out


def cmd_closure(args):
    base = read_base(args.base)
    return [base.format_set(closure(base, base.mask(args.seed.split())))]


def cmd_components(args):
    base = read_base(args.base)
    return [base.format_set(b) for b in premise_components(base).blocks]


def _report_lines(base, report):
    lines = [f"kind: {report.kind.value}",
             f"u1: {base.format_set(report.u1)}",
             f"u2: {base.format_set(report.u2)}"]
    if report.is_split:
        lines += [f"I[U1]: {report.i1}", f"I[U2]: {report.i2}", f"I[U1,U2]: {report.ibip}"]
    elif report.violation is not None:
        lines.append(f"violation: {base.format_implication(report.violation)}")
    return lines


def cmd_split(args):
    base = read_base(args.base)
    if args.u1:
        u1 = base.mask(args.u1.split())
        return _report_lines(base, is_split(base, u1, base.ground & ~u1))
    found = find_acyclic_split(base) if args.acyclic else find_split(base)
    if found is None:
        return ["NONE"]
    return _report_lines(base, is_split(base, *found))


def cmd_decompose(args):
    base = read_base(args.base)
    builder = {"strict": build_tree, "hfactor": h_build_tree, "acyclic": build_acyclic_tree}[args.mode]
    tree = builder(base)
    if tree is None:
        return ["FAIL"]
    text = dumps(base, tree)
    out = _out(args)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
        return []
    return [text]


def cmd_ccm(args):
    base = read_base(args.base)
    trace = CCMTrace()
    result = ccm(base, strategy=args.strategy, budget=_budget(args), trace=trace)
    lines = []
    for m in result:
        line = base.format_set(m)
        if args.provenance:
            line += f"\t{result.origin[m].value}"
        lines.append(line)
    return lines


def cmd_oracle(args):
    base = read_base(args.base)
    budget = _budget(args)
    if args.what == "meets":
        return [base.format_set(m) for m in sorted_family(meet_irreducibles_oracle(base, budget))]
    cs = enumerate_closed_sets(base, budget)
    if args.what == "lattice":
        return [base.format_set(c) for c in sorted_family(cs)]
    lines = []
    for c in sorted_family(cs):
        for d in sorted_family(covers_of(cs, c)):
            lines.append(f"{base.format_set(c)} < {base.format_set(d)}")
    return lines


def cmd_dualize(args):
    with open(args.hypergraph, encoding="utf-8") as fh:
        vertices, edges = parse_hypergraph(fh.read())
    fmt = core.ImplicationBase(vertices, (1 << len(vertices)) - 1, ())
    return [fmt.format_set(t) for t in sorted_family(min_transversals(edges))]


def cmd_ldual(args):
    i1 = read_base(args.i1)
    with open(args.bminus, encoding="utf-8") as fh:
        rows = [line.split("#", 1)[0].strip() for line in fh]
    bminus = [i1.mask([] if r == "{}" else r.split()) for r in rows if r]
    m1 = ccm(i1, budget=_budget(args)).sets
    return [i1.format_set(p) for p in sorted_family(ldual(i1, m1, bminus))]


def cmd_generate(args):
    seed = args.seed if args.seed is not None else (args.global_seed or 0)
    spec = GeneratorSpec(n=args.n, m=args.m, p=args.p, mode=args.mode, k=args.k, seed=seed)
    text = core.serialize(generate(spec))
    out = _out(args)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
        return []
    return [text.rstrip("\n")]


def cmd_verify(args):
    base = read_base(args.base)
    report = verify_base(base, _budget(args))
    lines = [f"{c.status.upper():7} {c.name}" + (f"  ({c.detail})" if c.detail else "")
             for c in report.checks]
    lines.append(f"strategy: {report.strategy}")
    lines.append(f"|M| = {report.meets}")
    if report.closed_sets is not None:
        lines.append(f"|C| = {report.closed_sets}")
    if report.root_m1 is not None:
        lines.append(f"root combine: |M1| = {report.root_m1}, |M2| = {report.root_m2}")
    lines.append("PASS" if report.ok else "FAIL")
    _emit(lines)
    return None if report.ok else EXIT_VERIFY


def cmd_bench(args):
    rows = bench(read_bench_specs(args.specs), budget=_budget(args), oracle_max_n=args.oracle_max_n)
    out = _out(args)
    if out:
        with open(out, "w", newline="", encoding="utf-8") as fh:
            write_bench_csv(rows, fh)
    else:
        write_bench_csv(rows, sys.stdout)
    return None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="splitmeet", description=__doc__.splitlines()[0])
    parser.add_argument("--budget", dest="global_budget", type=int, default=None,
                        help="closure-computation budget for oracle enumeration")
    parser.add_argument("--seed", dest="global_seed", type=int, default=None)
    parser.add_argument("--out", dest="global_out", default=None)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def command(name, fn, help_, base=True, budget=False, out=False):
        p = sub.add_parser(name, help=help_)
        if base:
            p.add_argument("base", help=".imp file")
        if budget:
            p.add_argument("--budget", type=int, default=None)
        if out:
            p.add_argument("--out", default=None)
        p.set_defaults(func=fn)
        return p

    p = command("closure", cmd_closure, "closure of a seed set")
    p.add_argument("--seed", required=True, help='elements, e.g. "2 3"')
    command("components", cmd_components, "premise-connected components")
    p = command("split", cmd_split, "find or classify a split")
    p.add_argument("--acyclic", action="store_true")
    p.add_argument("--u1", default=None, help="classify the bipartition with this side")
    p = command("decompose", cmd_decompose, "decomposition tree as JSON", out=True)
    p.add_argument("--mode", choices=("strict", "hfactor", "acyclic"), default="hfactor")
    p = command("ccm", cmd_ccm, "meet-irreducible closed sets", budget=True)
    p.add_argument("--strategy", choices=("auto", "layered", "tree", "oracle"), default="auto")
    p.add_argument("--provenance", action="store_true")
    p = command("oracle", cmd_oracle, "brute-force lattice queries", budget=True)
    p.add_argument("--what", choices=("lattice", "meets", "covers"), default="lattice")
    p = command("dualize", cmd_dualize, "minimal transversals of a hypergraph", base=False)
    p.add_argument("--hypergraph", required=True)
    p = command("ldual", cmd_ldual, "positive border dual to a negative border", base=False,
                budget=True)
    p.add_argument("i1", help=".imp file")
    p.add_argument("--bminus", required=True, help="one set per line")
    p = command("generate", cmd_generate, "random base", base=False, out=True)
    p.add_argument("--mode", choices=MODES, default="random")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--p", type=int, default=2)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--seed", type=int, default=None)
    command("verify", cmd_verify, "check ccm, trees and borders on one base", budget=True)
    p = command("bench", cmd_bench, "time generated instances, CSV output", base=False,
                budget=True, out=True)
    p.add_argument("specs", help="CSV: mode,n,m,p,k,seed,count")
    p.add_argument("--oracle-max-n", type=int, default=12)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        result = args.func(args)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (SplitmeetError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if isinstance(result, list):
        _emit(result)
        return 0
    return result or 0


if __name__ == "__main__":
    sys.exit(main())
