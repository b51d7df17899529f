#!/usr/bin/env python3
"""Cayley-graph balls and the grown-ball witness construction.

For a group with symmetric generating set S, the ball of radius r collects
all elements of word length <= r.  Growing the radius-2 ball to size d+1
(d a divisor of the order) yields a connected candidate set; when every
translate intersection containing the identity has more than two elements,
the set minus the identity can be shown to be a non-factor.
"""

from subsetfactor import (
    Subset,
    ball,
    classify_factor,
    construct_tilde,
    format_subset,
    group_from_string,
    standard_generating_set,
    tilde_condition,
    tilde_condition_two_sided,
)


def ball_growth(spec: str) -> None:
    g = group_from_string(spec)
    gens = standard_generating_set(g)
    names = [g.element_names[x] for x in gens.gens]
    print(f"{g.name} (order {g.order}), generators {names}:")
    r = 0
    while True:
        members = ball(g, gens, r).members
        print(f"  |ball_{r}| = {len(members)}")
        if members.mask == g.full_mask:
            break
        r += 1
    print()


def grown_witness(spec: str, d: int) -> None:
    g = group_from_string(spec)
    gens = standard_generating_set(g)
    t = construct_tilde(g, gens, d)
    print(f"{g.name}, target divisor d = {d}:")
    if t is None:
        b2 = len(ball(g, gens, 2).members)
        print(f"  inapplicable (radius-2 ball has {b2} elements, need <= {d + 1})")
        print()
        return
    print(f"  grown set ({len(t)} elements): {format_subset(g, t)}")
    print(f"  translate condition, right: {tilde_condition(g, t)}"
          f"  two-sided: {tilde_condition_two_sided(g, t)}")
    stripped = Subset(g.order, t.mask & ~(1 << g.identity))
    print(f"  classification of the set minus 1: "
          f"{classify_factor(g, stripped).classification}")
    print()


def main() -> None:
    print("=== ball growth ===\n")
    for spec in ("D7", "C5xC5", "A4"):
        ball_growth(spec)

    print("=== grown-ball witnesses ===\n")
    grown_witness("D9", 9)
    grown_witness("C5xC5", 5)  # ball is already too big: the technique fails here


if __name__ == "__main__":
    main()
