"""Subset algebra: products, direct factorizations, canonical forms."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from subsetfactor.notation import group_from_string, parse_subset
from subsetfactor.subsets import (
    Subset,
    canonical_form,
    invert_set,
    is_lagrange,
    product,
    translate,
    verify_direct_factorization,
)

GROUP_POOL = ["C4", "C6", "S3", "C2xC2", "Q8", "D4", "C3xC3", "A4"]
_GROUPS = {spec: group_from_string(spec) for spec in GROUP_POOL}


@st.composite
def group_and_subset(draw, nonempty=True):
    g = _GROUPS[draw(st.sampled_from(GROUP_POOL))]
    lo = 1 if nonempty else 0
    mask = draw(st.integers(min_value=lo, max_value=(1 << g.order) - 1))
    return g, Subset(g.order, mask)


@st.composite
def group_and_two_subsets(draw):
    g = _GROUPS[draw(st.sampled_from(GROUP_POOL))]
    top = (1 << g.order) - 1
    a = draw(st.integers(min_value=1, max_value=top))
    b = draw(st.integers(min_value=1, max_value=top))
    return g, Subset(g.order, a), Subset(g.order, b)


# ---------------------------------------------------------------------------
# Basics


def test_subset_container_protocol():
    g = _GROUPS["C4"]
    s = Subset.from_indices(g.order, [0, 2])
    assert len(s) == 2
    assert 0 in s and 2 in s and 1 not in s
    assert list(s) == [0, 2]


def test_from_indices_rejects_out_of_range():
    with pytest.raises(ValueError):
        Subset.from_indices(4, [4])


def test_is_lagrange():
    g = _GROUPS["C6"]
    assert is_lagrange(g, parse_subset(g, "1,a"))
    assert is_lagrange(g, parse_subset(g, "1,a,a^2"))
    assert not is_lagrange(g, parse_subset(g, "1,a,a^2,a^3"))
    with pytest.raises(ValueError):
        is_lagrange(g, Subset(6, 0))


# ---------------------------------------------------------------------------
# Products


def test_product_direct_example():
    g = _GROUPS["C4"]
    a = parse_subset(g, "1,a")
    b = parse_subset(g, "1,a^2")
    res = product(g, a, b)
    assert res.direct
    assert res.product.mask == (1 << g.order) - 1


def test_product_collision_reported():
    g = _GROUPS["C4"]
    a = parse_subset(g, "1,a")
    b = parse_subset(g, "1,a")  # 1*a = a*1
    res = product(g, a, b)
    assert not res.direct
    assert res.collision is not None


@given(group_and_two_subsets())
@settings(max_examples=200, deadline=None)
def test_product_matches_naive(data):
    g, a, b = data
    res = product(g, a, b)
    pairs = {(x, y) for x in a for y in b}
    elements = {g.mul(x, y) for x, y in pairs}
    assert set(res.product) == elements
    assert res.direct == (len(pairs) == len(elements))


@given(group_and_two_subsets())
@settings(max_examples=200, deadline=None)
def test_verify_direct_factorization_definition(data):
    g, a, b = data
    res = product(g, a, b)
    expected = len(a) * len(b) == g.order and res.direct and len(set(res.product)) == g.order
    assert verify_direct_factorization(g, a, b) == expected


# ---------------------------------------------------------------------------
# Translation / inversion


@given(group_and_subset(), st.integers(min_value=0, max_value=63))
@settings(max_examples=200, deadline=None)
def test_translate_preserves_size(data, seed):
    g, a = data
    x = seed % g.order
    for side in ("left", "right"):
        t = translate(g, a, x, side)
        assert len(t) == len(a)


@given(group_and_subset())
@settings(max_examples=200, deadline=None)
def test_inversion_is_involutive(data):
    g, a = data
    assert invert_set(g, invert_set(g, a)).mask == a.mask


@given(group_and_subset(), st.integers(min_value=0, max_value=63))
@settings(max_examples=100, deadline=None)
def test_left_translate_then_inverse_is_right_translate(data, seed):
    g, a = data
    x = seed % g.order
    lhs = invert_set(g, translate(g, a, x, "left"))  # (xA)^-1 = A^-1 x^-1
    rhs = translate(g, invert_set(g, a), g.inverse[x], "right")
    assert lhs.mask == rhs.mask


# ---------------------------------------------------------------------------
# Canonical forms


@given(group_and_subset())
@settings(max_examples=150, deadline=None)
def test_l1_canonical_is_idempotent_and_minimal(data):
    g, a = data
    c = canonical_form(g, a, "L1")
    assert canonical_form(g, c, "L1").mask == c.mask
    # canonical form contains the identity for nonempty sets
    assert g.identity in c
    if g.identity in a:
        assert c.mask <= a.mask


@given(group_and_subset(), st.integers(min_value=0, max_value=63))
@settings(max_examples=150, deadline=None)
def test_l1_invariant_under_left_translation(data, seed):
    g, a = data
    x = seed % g.order
    t = translate(g, a, x, "left")
    assert canonical_form(g, a, "L1").mask == canonical_form(g, t, "L1").mask


@given(group_and_subset())
@settings(max_examples=100, deadline=None)
def test_l2_canonical_idempotent_and_below_l1(data):
    g, a = data
    c2 = canonical_form(g, a, "L2")
    assert canonical_form(g, c2, "L2").mask == c2.mask
    assert c2.mask <= canonical_form(g, a, "L1").mask


@given(group_and_subset())
@settings(max_examples=100, deadline=None)
def test_l2_invariant_under_inversion_and_two_sided_translation(data):
    g, a = data
    c = canonical_form(g, a, "L2").mask
    assert canonical_form(g, invert_set(g, a), "L2").mask == c
    for x in (0, g.order - 1):
        for side in ("left", "right"):
            assert canonical_form(g, translate(g, a, x, side), "L2").mask == c


@given(group_and_subset())
@settings(max_examples=60, deadline=None)
def test_l3_idempotent_and_below_l2(data):
    g, a = data
    c3 = canonical_form(g, a, "L3")
    assert canonical_form(g, c3, "L3").mask == c3.mask
    assert c3.mask <= canonical_form(g, a, "L2").mask


def test_canonical_form_rejects_unknown_level():
    g = _GROUPS["C4"]
    with pytest.raises(ValueError):
        canonical_form(g, parse_subset(g, "1,a"), "L9")
