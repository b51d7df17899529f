"""Acceptance suite: eleven desk-scale criteria, one test (and one printed
pass/fail line) per criterion.

Run with ``pytest -v tests/test_acceptance.py`` for per-criterion lines, or
``-s`` to see the explicit PASS markers.
"""

from __future__ import annotations

import itertools
import random
import time

import pytest

from subsetfactor.cfs import (
    STRONG_CFS_GROUPS,
    catalog_group,
    cyclic_witness,
    decide_cfs,
    decide_strong_cfs,
    witness_catalog,
)
from subsetfactor.factor import (
    classify_factor,
    extend_complement,
    find_left_complement,
    find_right_complement,
    find_same_complement,
    index2_criterion,
    restrict_complement,
)
from subsetfactor.groups import SMALL_GROUP_CATALOG, all_subgroups, right_transversal
from subsetfactor.notation import group_from_string, parse_element_word, parse_subset
from subsetfactor.subsets import Subset, invert_set, translate, verify_direct_factorization

_CATALOG_GROUPS = {name: group_from_string(spec) for name, spec in SMALL_GROUP_CATALOG}


def _report(num: int, label: str, ok: bool, elapsed: float, limit: float | None = None) -> None:
    verdict = "PASS" if ok else "FAIL"
    budget = f" ({elapsed:.2f}s" + (f" < {limit:.0f}s limit)" if limit else ")")
    print(f"criterion {num:2d} [{verdict}] {label}{budget}", flush=True)
    assert ok, f"criterion {num} failed: {label}"
    if limit is not None:
        assert elapsed < limit, f"criterion {num} exceeded {limit}s ({elapsed:.2f}s)"


def test_criterion_01_positive_catalog_verifies():
    t0 = time.perf_counter()
    by_group: dict[str, int] = {}
    ok = True
    for e in witness_catalog():
        if e.claim != "positive_factorization":
            continue
        g = catalog_group(e.group_spec)
        a = parse_subset(g, e.words)
        b = parse_subset(g, e.complement_words)
        if not verify_direct_factorization(g, a, b):
            ok = False
        by_group[e.group_spec] = by_group.get(e.group_spec, 0) + 1
    ok = ok and by_group == {"C2xC2": 3, "C4": 3, "C2xC2xC2": 42, "C3xC3": 28}
    _report(1, "all 76 listed factorizations verify exactly", ok, time.perf_counter() - t0, 1.0)


def test_criterion_02_nonfactor_witnesses_by_exhausted_search():
    t0 = time.perf_counter()
    entries = [e for e in witness_catalog() if e.claim == "non_factor"]
    ok = len(entries) == 18
    largest_elapsed = 0.0
    for e in entries:
        g = catalog_group(e.group_spec)
        a = parse_subset(g, e.words)
        t1 = time.perf_counter()
        if find_left_complement(g, a) is not None or find_right_complement(g, a) is not None:
            ok = False
        if g.order == 121:
            largest_elapsed = time.perf_counter() - t1
    ok = ok and largest_elapsed < 10.0
    _report(2, "all 18 witnesses fail exhausted two-sided search", ok, time.perf_counter() - t0)


def test_criterion_03_strong_cfs_classification():
    t0 = time.perf_counter()
    ok = True
    for name, g in _CATALOG_GROUPS.items():
        rep = decide_strong_cfs(g, group_name=name)
        if rep.holds != (name in STRONG_CFS_GROUPS):
            ok = False
        if rep.witness is not None:
            if classify_factor(g, rep.witness).classification != "none":
                ok = False
    _report(3, "strong CFS holds for exactly the eleven classified groups",
            ok, time.perf_counter() - t0, 60.0)


def test_criterion_04_cyclic_witnesses_never_factor():
    t0 = time.perf_counter()
    ok = True
    for n in range(2, 41):
        g = group_from_string(f"C{n}")
        for d in range(3, n):
            if n % d:
                continue
            w = cyclic_witness(g, d)
            if classify_factor(g, w).classification != "none":
                ok = False
    _report(4, "cyclic witness {1,a^2..a^d} is never a factor (n <= 40)",
            ok, time.perf_counter() - t0, 30.0)


def test_criterion_05_subgroup_lemma_instances():
    t0 = time.perf_counter()
    rng = random.Random(20260826)
    pool = [g for g in _CATALOG_GROUPS.values() if g.order >= 4]
    subgroup_cache = {id(g): [h for h in all_subgroups(g) if 1 < h.order < g.order]
                      for g in pool}
    done = 0
    failures = 0
    while done < 1000:
        g = rng.choice(pool)
        subs = subgroup_cache[id(g)]
        if not subs:
            continue
        h = rng.choice(subs)
        members = [i for i in range(g.order) if h.mask >> i & 1]
        size = rng.choice([d for d in range(1, h.order + 1) if h.order % d == 0])
        picked = [g.identity] + rng.sample(
            [m for m in members if m != g.identity], size - 1
        ) if size > 1 else [g.identity]
        a = Subset.from_indices(g.order, picked)
        b = find_left_complement(g, a)
        if b is None:
            continue
        done += 1
        try:
            c = restrict_complement(g, h, a, b)  # H = A . C
            x = right_transversal(g, h)
            bx = extend_complement(g, h, a, c, x)  # G = A . CX
            if c.mask & ~h.mask or not verify_direct_factorization(g, a, bx):
                failures += 1
        except Exception:
            failures += 1
    _report(5, "1000 randomized restrict/extend lemma instances, 0 failures",
            failures == 0, time.perf_counter() - t0)


def test_criterion_06_hereditary_witnesses():
    t0 = time.perf_counter()
    ok = True
    s4 = group_from_string("S4")
    if classify_factor(s4, parse_subset(s4, "1,(1,2,3)")).classification != "none":
        ok = False
    for spec, gen_word in (("C12", "a^2"), ("C18", "a^3")):
        g = group_from_string(spec)
        gen = parse_element_word(g, gen_word)
        lifted = Subset.from_indices(g.order, [g.identity, g.power(gen, 2), g.power(gen, 3)])
        if classify_factor(g, lifted).classification != "none":
            ok = False
    _report(6, "witnesses stay non-factors in supergroups (S4, C12, C18)",
            ok, time.perf_counter() - t0)


def test_criterion_07_oracle_equivalence_small_orders():
    t0 = time.perf_counter()
    ok = True
    for name, g in _CATALOG_GROUPS.items():
        n = g.order
        if n > 10:
            continue
        for k in range(1, n + 1):
            if n % k:
                continue
            for combo in itertools.combinations(
                [i for i in range(n) if i != g.identity], k - 1
            ):
                a = Subset.from_indices(n, (g.identity,) + combo)
                fast = find_left_complement(g, a)
                slow = None
                for cand in itertools.combinations(range(n), n // k):
                    b = Subset.from_indices(n, cand)
                    if verify_direct_factorization(g, a, b):
                        slow = b
                        break
                if (fast is None) != (slow is None):
                    ok = False
    _report(7, "search agrees with brute-force oracle on all orders <= 10",
            ok, time.perf_counter() - t0)


def _left_right_tables(g):
    """classification lookup for every nonempty subset of g."""
    n = g.order
    left = {}
    right = {}
    for mask in range(1, 1 << n):
        a = Subset(n, mask)
        left[mask] = find_left_complement(g, a) is not None
        right[mask] = find_right_complement(g, a) is not None
    return left, right


def test_criterion_08_duality_and_invariance_suite():
    t0 = time.perf_counter()
    ok = True
    # inversion duality, exhaustive on orders <= 10
    for name, g in _CATALOG_GROUPS.items():
        if g.order > 10:
            continue
        left, right = _left_right_tables(g)
        for mask in left:
            inv = invert_set(g, Subset(g.order, mask)).mask
            if left[mask] != right[inv]:
                ok = False
    # translation invariance and index-2 equivalence on orders <= 12
    for name, g in _CATALOG_GROUPS.items():
        n = g.order
        if n > 12:
            continue
        left, right = _left_right_tables(g)
        for mask in left:
            a = Subset(n, mask)
            for x in range(n):
                if left[mask] != left[translate(g, a, x, "left").mask]:
                    ok = False
                if right[mask] != right[translate(g, a, x, "right").mask]:
                    ok = False
            if n == 2 * mask.bit_count():
                if left[mask] != (index2_criterion(g, a, "left") is not None):
                    ok = False
                if right[mask] != (index2_criterion(g, a, "right") is not None):
                    ok = False
    _report(8, "inversion duality, translation invariance, index-2 equivalence",
            ok, time.perf_counter() - t0)


def test_criterion_09_ball_bounds():
    from subsetfactor.geometry import ball, standard_generating_set

    t0 = time.perf_counter()
    ok = True
    for name, g in _CATALOG_GROUPS.items():
        gens = standard_generating_set(g)
        if len(gens.gens) != 2:
            continue
        size = len(ball(g, gens, 2).members)
        if size > 17:
            ok = False
        if g.is_abelian and size > 13:
            ok = False
    c55 = group_from_string("C5xC5")
    if len(ball(c55, standard_generating_set(c55), 2).members) != 13:
        ok = False
    _report(9, "radius-2 ball sizes: <= 17 two-generated, <= 13 abelian, C5xC5 = 13",
            ok, time.perf_counter() - t0)


def test_criterion_10_same_complements_on_strong_cfs_groups():
    t0 = time.perf_counter()
    ok = True
    for spec in ("C2xC2", "C4", "C2xC2xC2", "C3xC3"):
        g = group_from_string(spec)
        n = g.order
        for mask in range(1, 1 << n):
            if n % mask.bit_count():
                continue
            b = find_same_complement(g, Subset(n, mask))
            if b is None:
                ok = False
            else:
                a = Subset(n, mask)
                if not (
                    verify_direct_factorization(g, a, b)
                    and verify_direct_factorization(g, b, a)
                ):
                    ok = False
    _report(10, "every Lagrange subset admits a shared two-sided complement",
            ok, time.perf_counter() - t0, 5.0)


def test_criterion_11_cfs_at_desk_scale():
    t0 = time.perf_counter()
    ok = True
    for name, g in _CATALOG_GROUPS.items():
        rep = decide_cfs(g, group_name=name)
        if not rep.holds:
            ok = False
    for spec in ("C16", "C4xC4", "D8", "C18", "C3xC3xC2", "C20", "D10", "S4", "C24", "D12", "A4xC2", "Q8xC3"):
        g = group_from_string(spec)
        if not decide_cfs(g).holds:
            ok = False
    _report(11, "decide_cfs holds for every group of order <= 24 checked",
            ok, time.perf_counter() - t0, 60.0)
