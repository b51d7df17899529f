"""Cayley-graph balls, connectivity, and the grown-ball constructions."""

from __future__ import annotations

import pytest

from subsetfactor.factor import classify_factor
from subsetfactor.geometry import (
    GeneratingSet,
    ball,
    construct_tilde,
    is_connected_subset,
    standard_generating_set,
    tilde_condition,
    tilde_condition_two_sided,
)
from subsetfactor.groups import SMALL_GROUP_CATALOG
from subsetfactor.notation import group_from_string, parse_element_word, parse_subset
from subsetfactor.subsets import Subset


def gens_of(g, *words):
    return GeneratingSet(g, tuple(parse_element_word(g, w) for w in words))


# ---------------------------------------------------------------------------
# Generating sets


def test_generating_set_validated():
    g = group_from_string("C4")
    with pytest.raises(ValueError):
        gens_of(g, "a^2")  # a^2 generates only C2
    gens_of(g, "a")  # fine


def test_standard_generating_set_prefers_named_generators():
    g = group_from_string("D7")
    gens = standard_generating_set(g)
    names = [g.element_names[x] for x in gens.gens]
    assert names == ["a", "b"]


def test_standard_generating_set_trivial_group():
    g = group_from_string("C1")
    assert standard_generating_set(g).gens == ()


# ---------------------------------------------------------------------------
# Balls


def test_ball_radius_zero_is_identity():
    g = group_from_string("S4")
    b = ball(g, standard_generating_set(g), 0)
    assert list(b.members) == [g.identity]


def test_ball_d7_radius_two():
    g = group_from_string("D7")
    b = ball(g, gens_of(g, "a", "b"), 2)
    want = parse_subset(g, "1,a,a^6,b,a^2,a^5,a*b,a^6*b")
    assert b.members.mask == want.mask


def test_ball_c5squared_saturates_abelian_bound():
    g = group_from_string("C5xC5")
    b = ball(g, gens_of(g, "a", "b"), 2)
    assert len(b.members) == 13


def test_balls_are_monotone_and_reach_group():
    for spec in ("S3", "D4", "A4", "C3xC3"):
        g = group_from_string(spec)
        gens = standard_generating_set(g)
        prev = 0
        r = 0
        while True:
            m = ball(g, gens, r).members.mask
            assert m | prev == m  # monotone
            if m == g.full_mask:
                break
            assert r <= g.order  # diameter bound
            prev = m
            r += 1


# ---------------------------------------------------------------------------
# Connectivity


def test_connectivity_examples():
    g = group_from_string("C6")
    gens = gens_of(g, "a")
    assert not is_connected_subset(g, gens, parse_subset(g, "1,a^3"))
    assert is_connected_subset(g, gens, parse_subset(g, "1,a"))
    assert is_connected_subset(g, gens, parse_subset(g, "a^2"))


def test_balls_are_connected():
    g = group_from_string("D4")
    gens = standard_generating_set(g)
    for r in range(4):
        assert is_connected_subset(g, gens, ball(g, gens, r).members)


# ---------------------------------------------------------------------------
# Tilde condition and construction


def test_tilde_condition_whole_group():
    g = group_from_string("C6")
    assert tilde_condition(g, Subset(6, g.full_mask))


def test_tilde_condition_small_counterexample():
    g = group_from_string("C4")
    assert not tilde_condition(g, parse_subset(g, "1,a"))


def test_tilde_condition_requires_identity():
    g = group_from_string("C4")
    with pytest.raises(ValueError):
        tilde_condition(g, parse_subset(g, "a"))


def test_construct_tilde_d9():
    g = group_from_string("D9")
    gens = standard_generating_set(g)
    t = construct_tilde(g, gens, 9)
    assert t is not None and len(t) == 10
    b2 = ball(g, gens, 2).members
    assert b2.mask & ~t.mask == 0
    assert is_connected_subset(g, gens, t)
    assert g.identity in t
    assert tilde_condition(g, t)
    stripped = Subset(g.order, t.mask & ~(1 << g.identity))
    assert classify_factor(g, stripped).classification == "none"


def test_construct_tilde_inapplicable_when_ball_too_big():
    g = group_from_string("C5xC5")
    assert construct_tilde(g, standard_generating_set(g), 5) is None


def test_construct_tilde_full_group():
    g = group_from_string("C6")
    # d + 1 = |G| is out of range for proper use but d=5 does not divide 6
    assert construct_tilde(g, standard_generating_set(g), 5) is None


def test_tilde_deterministic():
    g = group_from_string("D9")
    gens = standard_generating_set(g)
    assert construct_tilde(g, gens, 9).mask == construct_tilde(g, gens, 9).mask


def test_two_sided_condition_implies_nonfactor_at_desk_scale():
    # wherever the construction applies on the catalog, the two-sided
    # condition certifies that the set minus the identity is not a factor
    for name, spec in SMALL_GROUP_CATALOG:
        g = group_from_string(spec)
        if g.order < 2:
            continue
        gens = standard_generating_set(g)
        for d in range(2, g.order):
            if g.order % d:
                continue
            t = construct_tilde(g, gens, d)
            if t is None or not tilde_condition_two_sided(g, t):
                continue
            stripped = Subset(g.order, t.mask & ~(1 << g.identity))
            assert classify_factor(g, stripped).classification == "none", (name, d)
