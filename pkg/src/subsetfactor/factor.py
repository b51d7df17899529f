"""Deciding factor-ness of subsets.

A is a left factor of G (G = A . B for some B) exactly when G can be tiled
by right translates {Ab}; complements are found by exact-cover backtracking
over those translates, always branching on the least-index uncovered
element.  Cheap sound criteria (Lagrange obstruction, index-2 scan, hole
covering, all-translates-meet) run first and double as independently
checkable non-factor certificates.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .groups import Group, Subgroup, Transversal, bits, generated_subgroup, subgroup_as_group
from .subsets import Subset, invert_set, verify_direct_factorization

CLASS_TWO_SIDED = "two_sided"
CLASS_LEFT_ONLY = "left_only"
CLASS_RIGHT_ONLY = "right_only"
CLASS_NONE = "none"


@dataclass(frozen=True)
class NonFactorEvidence:
    """Why a subset is not a factor; every kind can be re-checked by the
    corresponding criterion operation."""

    kind: str  # exhausted_search | index2_failure | hole_failure |
    #            all_translates_meet | lagrange_obstruction
    detail: dict[str, Any]


@dataclass(frozen=True)
class FactorReport:
    classification: str
    left_complement: Subset | None = None   # B with G = A . B
    right_complement: Subset | None = None  # B with G = B . A
    same_complement: Subset | None = None
    evidence: NonFactorEvidence | None = None

    @property
    def is_factor(self) -> bool:
        return self.classification != CLASS_NONE


# ---------------------------------------------------------------------------
# Exact cover over translates


def _tiles(group: Group, amask: int, side: str) -> list[tuple[int, int]]:
    """Deduplicated candidate tiles (mask, least label b): Ab for the left
    search, bA for the right search."""
    seen: dict[int, int] = {}
    for b in range(group.order):
        m = (
            group.right_translate_mask(amask, b)
            if side == "left"
            else group.left_translate_mask(b, amask)
        )
        if m not in seen:
            seen[m] = b
    return [(m, b) for m, b in seen.items()]


def _cover_search(n: int, tiles: list[tuple[int, int]], all_solutions: bool) -> list[int]:
    """Exact covers of 0..n-1 by the given tiles.

    Returns complement masks (OR of chosen labels' bits); just the first
    found unless ``all_solutions``.
    """
    full = (1 << n) - 1
    by_cell: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for m, b in sorted(tiles, key=lambda t: t[1]):
        for c in bits(m):
            by_cell[c].append((m, b))

    solutions: list[int] = []
    chosen: list[int] = []

    def rec(covered: int) -> bool:
        if covered == full:
            solutions.append(sum(1 << b for b in chosen))
            return not all_solutions
        free = ~covered & full
        cell = (free & -free).bit_length() - 1
        for m, b in by_cell[cell]:
            if not m & covered:
                chosen.append(b)
                if rec(covered | m):
                    return True
                chosen.pop()
        return False

    rec(0)
    return solutions


def _complement_mask(group: Group, amask: int, side: str, all_solutions: bool = False) -> int | None:
    k = amask.bit_count()
    if k == 0:
        raise ValueError("complement search requires a nonempty subset")
    if group.order % k:
        return None
    sols = _cover_search(group.order, _tiles(group, amask, side), all_solutions)
    if not sols:
        return None
    return min(sols) if all_solutions else sols[0]


def find_left_complement(group: Group, a: Subset, all_complements: bool = False) -> Subset | None:
    """B with G = A . B, or None.  With ``all_complements`` the search is
    exhausted and the least complement mask is returned."""
    m = _complement_mask(group, a.mask, "left", all_complements)
    if m is None:
        return None
    b = Subset(group.order, m)
    assert verify_direct_factorization(group, a, b)
    return b


def find_right_complement(group: Group, a: Subset, all_complements: bool = False) -> Subset | None:
    """B with G = B . A, or None."""
    m = _complement_mask(group, a.mask, "right", all_complements)
    if m is None:
        return None
    b = Subset(group.order, m)
    assert verify_direct_factorization(group, b, a)
    return b


def enumerate_complements(group: Group, a: Subset, side: str = "left") -> list[Subset]:
    """All complements on the given side, sorted by mask."""
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    sols = _cover_search(group.order, _tiles(group, a.mask, side), True) if group.order % len(a) == 0 else []
    return [Subset(group.order, m) for m in sorted(sols)]


# ---------------------------------------------------------------------------
# Cheap criteria


def lagrange_obstruction(group: Group, a: Subset) -> Subgroup | None:
    """The generated subgroup <A> when |A| does not divide |<A>|, which
    proves A is not a factor of any supergroup; None otherwise."""
    if not a:
        raise ValueError("empty subset")
    h = generated_subgroup(group, a.mask)
    return h if h.order % len(a) else None


def index2_criterion(group: Group, a: Subset, side: str) -> int | None:
    """For |A| = |G|/2: least g with Ag = G \\ A (side='left') or
    gA = G \\ A (side='right').  Existence is equivalent to factor-ness on
    that side."""
    n = group.order
    if 2 * len(a) != n:
        raise ValueError("index2_criterion requires |A| = |G|/2")
    want = group.full_mask ^ a.mask
    for g in range(n):
        m = (
            group.right_translate_mask(a.mask, g)
            if side == "left"
            else group.left_translate_mask(g, a.mask)
        )
        if m == want:
            return g
    return None


def hole_criterion(group: Group, a: Subset, side: str) -> int | None:
    """For 1 not in A: least g with identity in Ag (resp. gA) and the
    translate disjoint from A.  If no such g exists on a side, A is not a
    factor on that side."""
    ident = 1 << group.identity
    if a.mask & ident:
        raise ValueError("hole_criterion requires the identity to be outside A")
    for g in range(group.order):
        m = (
            group.right_translate_mask(a.mask, g)
            if side == "left"
            else group.left_translate_mask(g, a.mask)
        )
        if m & ident and not m & a.mask:
            return g
    return None


def all_translates_meet(group: Group, a: Subset) -> bool:
    """True iff A meets every translate Ag and gA.  Together with
    1 not in A this proves A is not a factor on either side."""
    for g in range(group.order):
        if not a.mask & group.right_translate_mask(a.mask, g):
            return False
        if not a.mask & group.left_translate_mask(g, a.mask):
            return False
    return True


# ---------------------------------------------------------------------------
# Classification


def classify_factor(group: Group, a: Subset) -> FactorReport:
    """Full left/right/two-sided/none classification with certificates."""
    if not a:
        raise ValueError("classify_factor requires a nonempty subset")
    n = group.order
    k = len(a)

    obstruction = lagrange_obstruction(group, a)
    if obstruction is not None:
        return FactorReport(
            CLASS_NONE,
            evidence=NonFactorEvidence(
                "lagrange_obstruction",
                {"generated_order": obstruction.order, "size": k},
            ),
        )
    if n % k:
        # |A| divides |<A>| but not |G| cannot happen (Lagrange); guard anyway.
        return FactorReport(
            CLASS_NONE,
            evidence=NonFactorEvidence("lagrange_obstruction", {"generated_order": n, "size": k}),
        )

    left_known_absent = False
    right_known_absent = False
    evidence: NonFactorEvidence | None = None

    if not a.mask >> group.identity & 1:
        if all_translates_meet(group, a):
            return FactorReport(
                CLASS_NONE,
                evidence=NonFactorEvidence("all_translates_meet", {"hole": group.identity}),
            )
        hole_left = hole_criterion(group, a, "left")
        hole_right = hole_criterion(group, a, "right")
        left_known_absent = hole_left is None
        right_known_absent = hole_right is None
        if left_known_absent and right_known_absent:
            return FactorReport(
                CLASS_NONE,
                evidence=NonFactorEvidence("hole_failure", {"sides": ["left", "right"]}),
            )
        if left_known_absent or right_known_absent:
            evidence = NonFactorEvidence(
                "hole_failure",
                {"sides": ["left"] if left_known_absent else ["right"]},
            )

    left = right = None
    if n == 2 * k:
        gl = index2_criterion(group, a, "left")
        gr = index2_criterion(group, a, "right")
        if gl is not None:
            left = Subset.from_indices(n, (group.identity, gl))
        if gr is not None:
            right = Subset.from_indices(n, (group.identity, gr))
        if left is None and right is None:
            return FactorReport(
                CLASS_NONE,
                evidence=NonFactorEvidence("index2_failure", {"sides": ["left", "right"]}),
            )
    else:
        if not left_known_absent:
            left = find_left_complement(group, a)
        if not right_known_absent:
            right = find_right_complement(group, a)

    if left is not None and right is not None:
        return FactorReport(CLASS_TWO_SIDED, left_complement=left, right_complement=right)
    if left is not None:
        return FactorReport(CLASS_LEFT_ONLY, left_complement=left)
    if right is not None:
        return FactorReport(CLASS_RIGHT_ONLY, right_complement=right)
    if evidence is None:
        evidence = NonFactorEvidence("exhausted_search", {"sides": ["left", "right"]})
    return FactorReport(CLASS_NONE, evidence=evidence)


# ---------------------------------------------------------------------------
# Simultaneous (same-complement) search


def find_same_complement(group: Group, a: Subset) -> Subset | None:
    """B with G = A . B = B . A simultaneously, or None."""
    if not a:
        raise ValueError("find_same_complement requires a nonempty subset")
    n = group.order
    if n % len(a):
        return None
    full = group.full_mask
    amask = a.mask
    left_tile = [group.right_translate_mask(amask, b) for b in range(n)]   # Ab
    right_tile = [group.left_translate_mask(b, amask) for b in range(n)]   # bA
    by_cell: list[list[int]] = [[] for _ in range(n)]
    for b in range(n):
        for c in bits(left_tile[b]):
            by_cell[c].append(b)

    chosen: list[int] = []

    def rec(cov_l: int, cov_r: int) -> bool:
        if cov_l == full:
            return cov_r == full
        free = ~cov_l & full
        cell = (free & -free).bit_length() - 1
        for b in by_cell[cell]:
            lt, rt = left_tile[b], right_tile[b]
            if not lt & cov_l and not rt & cov_r:
                chosen.append(b)
                if rec(cov_l | lt, cov_r | rt):
                    return True
                chosen.pop()
        return False

    if not rec(0, 0):
        return None
    b = Subset.from_indices(n, chosen)
    assert verify_direct_factorization(group, a, b)
    assert verify_direct_factorization(group, b, a)
    return b


# ---------------------------------------------------------------------------
# Factor-subgroup lemma operations


def restrict_complement(group: Group, subgroup: Subgroup, a: Subset, b: Subset) -> Subset:
    """Given A subset of H and G = A . B, return C = B n H with H = A . C."""
    if a.mask & ~subgroup.mask:
        raise ValueError("A is not contained in the subgroup")
    if not verify_direct_factorization(group, a, b):
        raise ValueError("G = A . B does not hold")
    c = Subset(group.order, b.mask & subgroup.mask)
    hgrp, elems = subgroup_as_group(group, subgroup)
    pos = {x: i for i, x in enumerate(elems)}
    a_h = Subset.from_indices(hgrp.order, (pos[x] for x in a))
    c_h = Subset.from_indices(hgrp.order, (pos[x] for x in c))
    if not verify_direct_factorization(hgrp, a_h, c_h):
        raise AssertionError("restriction postcondition failed")
    return c


def extend_complement(
    group: Group, subgroup: Subgroup, a: Subset, b: Subset, x: Transversal
) -> Subset:
    """Given A, B subsets of H with H = A . B and X a right transversal of
    H, return BX with G = A . (BX)."""
    if a.mask & ~subgroup.mask or b.mask & ~subgroup.mask:
        raise ValueError("A and B must be contained in the subgroup")
    if x.side != "right" or x.subgroup.mask != subgroup.mask:
        raise ValueError("X must be a right transversal of the given subgroup")
    hgrp, elems = subgroup_as_group(group, subgroup)
    pos = {e: i for i, e in enumerate(elems)}
    a_h = Subset.from_indices(hgrp.order, (pos[v] for v in a))
    b_h = Subset.from_indices(hgrp.order, (pos[v] for v in b))
    if not verify_direct_factorization(hgrp, a_h, b_h):
        raise ValueError("H = A . B does not hold")
    bx = 0
    for t in bits(x.reps_mask):
        bx |= group.right_translate_mask(b.mask, t)
    out = Subset(group.order, bx)
    if not verify_direct_factorization(group, a, out):
        raise AssertionError("extension postcondition failed")
    return out


def inversion_dual(group: Group, a: Subset) -> Subset:
    """A^-1; A is a left factor iff A^-1 is a right factor."""
    return invert_set(group, a)
