"""Print the worked examples: splits, trees, factors and meet-irreducibles."""

from splitmeet import (
    ccm,
    combine_meets,
    compact,
    find_acyclic_split,
    h_build_tree,
    h_factors,
    is_split,
    meet_irreducibles_oracle,
)
from splitmeet.core import sorted_family
from splitmeet.oracle import enumerate_closed_sets
from splitmeet.trees import build_tree, describe


def show_family(base, family):
    return ", ".join(base.format_set(m).replace(" ", "") for m in sorted_family(family))


def main():
    intro = compact("12>3 23>4 4>1")
    print("12>3 23>4 4>1")
    print("  closed sets:", show_family(intro, enumerate_closed_sets(intro)))
    print("  meet-irreducible:", show_family(intro, ccm(intro).sets))

    split = compact("12>3 3>1 56>2 23>7 45>6 5>7")
    r = is_split(split, ["1", "2", "3"], ["4", "5", "6", "7"])
    print("\n12>3 3>1 56>2 23>7 45>6 5>7 with 123 | 4567:", r.kind.value)
    print("  I[U1] =", r.i1, " I[U2] =", r.i2, " I[U1,U2] =", r.ibip)
    print(describe(split, build_tree(split), "  "))

    hidden = compact("12>3 13>2 23>4")
    print("\n12>3 13>2 23>4: build_tree ->", "FAIL" if build_tree(hidden) is None else "tree")

    factors = compact("45>1 12>3 23>1 13>2 3>6 1>4")
    print("\n45>1 12>3 23>1 13>2 3>6 1>4 H-factors:")
    for f in h_factors(h_build_tree(factors)):
        print("  ", f)

    running = compact("12>3 13>4 23>5 2>4 1>5 5>6 4>6")
    u1, u2 = find_acyclic_split(running)
    r = is_split(running, u1, u2)
    m1, m2 = meet_irreducibles_oracle(r.i1), meet_irreducibles_oracle(r.i2)
    result = combine_meets(r, m1, m2)
    print(f"\nrunning example, acyclic split {running.format_set(u1)} | {running.format_set(u2)}")
    print("  M1:", show_family(running, m1))
    print("  M2:", show_family(running, m2))
    for m in result:
        print(f"  {running.format_set(m).replace(' ', ''):8} {result.origin[m].value}")


if __name__ == "__main__":
    main()
