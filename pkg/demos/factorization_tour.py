#!/usr/bin/env python3
"""A guided tour of direct subset factorizations.

G = A . B is a *direct* product when every group element is a product a*b
in exactly one way.  A subset is a left factor when such a B exists, a
right factor when G = B . A works, and two-sided when both do.
"""

from subsetfactor import (
    classify_factor,
    enumerate_complements,
    find_same_complement,
    format_subset,
    group_from_string,
    parse_subset,
)


def show(spec: str, words: str) -> None:
    g = group_from_string(spec)
    a = parse_subset(g, words)
    rep = classify_factor(g, a)
    print(f"{g.name}: A = {format_subset(g, a)}")
    print(f"  classification: {rep.classification}")
    if rep.left_complement is not None:
        print(f"  G = A . {format_subset(g, rep.left_complement)}")
    if rep.right_complement is not None:
        print(f"  G = {format_subset(g, rep.right_complement)} . A")
    if rep.evidence is not None:
        print(f"  blocked by: {rep.evidence.kind}")
    print()


def main() -> None:
    print("=== subsets that factor ===\n")
    show("C4", "1,a")          # the textbook example
    show("C2xC2xC2", "1,a,b,c")  # a non-subgroup factor
    show("S3", "1,(1,2)")      # a transversal-style factor

    print("=== subsets that do not ===\n")
    show("C6", "1,a^2,a^3")    # the smallest well-known blocker
    show("S3", "1,(1,2,3)")    # size 2 does not divide |<A>| = 3

    print("=== counting complements ===\n")
    g = group_from_string("C2xC2xC2")
    a = parse_subset(g, "1,a")
    sols = enumerate_complements(g, a, "left")
    print(f"{g.name}: A = {format_subset(g, a)} has {len(sols)} left complements:")
    for b in sols:
        print(f"  {format_subset(g, b)}")
    print()

    print("=== one complement working on both sides ===\n")
    g = group_from_string("C3xC3")
    a = parse_subset(g, "1,a,a^2*b")
    b = find_same_complement(g, a)
    print(f"{g.name}: A = {format_subset(g, a)}")
    print(f"  G = A . B = B . A with B = {format_subset(g, b)}")


if __name__ == "__main__":
    main()
