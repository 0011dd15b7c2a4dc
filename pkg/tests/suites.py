"""Property suites shared by the unit tests and the acceptance report.

Each suite returns ``(checked, failures)`` where ``failures`` is a list of
parameter tuples; an empty list means the property held everywhere.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

from xfam.constructions import (
    family_lower,
    family_upper,
    lower_slices,
    size_lower,
    size_upper,
    slice_upper,
    upper_slices,
)
from xfam.exactmath import cascade_shadow_bound, inv_real_binom, real_binom
from xfam.kneser import build, is_regular, neighborhood, neighborhood_ratio
from xfam.setfamily import Family, dual, is_cross_intersecting, is_maximal_pair, lex_compress_pair, shadow

import refimpl as ref


def _fam(n: int, k: int, members) -> Family:
    return Family.from_masks(n, k, sorted(members))


def feasible_points(max_n: int):
    """``(n, k, ell, r, s)`` with ``n >= k + ell``, ``1 <= r <= k - 1`` and ``1 <= s <= min(k, ell)``.

    ``r = k`` is left out: the lower family needs ``[k]`` plus a window
    element, so it is empty and the pair cannot be maximal.
    """
    for n in range(2, max_n + 1):
        for k in range(1, n):
            for ell in range(1, n - k + 1):
                for r in range(1, min(k - 1, ell) + 1):
                    for s in range(1, min(k, ell) + 1):
                        yield n, k, ell, r, s


def construction_suite(max_n: int = 10) -> tuple[int, dict[str, list]]:
    fails: dict[str, list] = {}
    checked = 0

    def bad(tag, p):
        fails.setdefault(tag, []).append(p)

    for n, k, ell, r, s in feasible_points(max_n):
        checked += 1
        p = (n, k, ell, r, s)
        lo, up = family_lower(n, k, r, s), family_upper(n, ell, r, s)
        # P2 against brute-force enumeration
        head, win = set(range(1, r + 1)), set(range(r + 1, r + s + 1))
        if len(lo) != size_lower(n, k, r, s) or len(lo) != sum(1 for A in ref.ksets(n, k) if head <= A and A & win):
            bad("P2", p)
        if len(up) != size_upper(n, ell, r, s) or len(up) != sum(1 for B in ref.ksets(n, ell) if B & head or win <= B):
            bad("P2", p)
        # P3 via dual on both sides
        if not is_maximal_pair(lo, up) or dual(lo, ell) != up or dual(up, k) != lo:
            bad("P3", p)
        if s < 2:
            continue
        lo1, up1 = family_lower(n, k, r, s - 1), family_upper(n, ell, r, s - 1)
        if not set(lo1.members) <= set(lo.members) or not set(up.members) <= set(up1.members):
            bad("P1", p)
        dl = set(lo.members) - set(lo1.members)
        du = set(up1.members) - set(up.members)
        if not is_regular(build(_fam(n, k, dl), _fam(n, ell, du))):
            bad("P4", p)
        ls, us = lower_slices(n, k, r, s), upper_slices(n, ell, r, s)
        if set().union(*(x.members for x in ls)) != dl or sum(map(len, ls)) != len(dl):
            bad("P1'", p)
        if set().union(*(x.members for x in us)) != du or sum(map(len, us)) != len(du):
            bad("P1'", p)
        for i, x in enumerate(ls, 1):
            if len(x) != ref.C(n - r - s - i, k - r - i):
                bad("P2'", p + (i,))
        for j in range(1, n + 1):
            if len(slice_upper(n, ell, r, s, j)) != ref.C(n - r - s - j, ell - s):
                bad("P2'", p + (j,))
        for t in range(1, k + 1):
            Ut = _fam(n, ell, set().union(*(x.members for x in us[:t])))
            g = build(Ut, lo)
            got = {lo.members[j] for j in neighborhood(g, range(len(Ut)))}
            if got != set().union(*(x.members for x in ls[:t])):
                bad("P3'", p + (t,))
        for t in range(1, min(len(ls), len(us)) + 1):
            if not is_regular(build(ls[t - 1], us[t - 1])):
                bad("P4'", p + (t,))
    return checked, fails


def _random_family(rng: random.Random, n: int, k: int, size: int) -> list[frozenset]:
    return [frozenset(c) for c in rng.sample(list(combinations(range(1, n + 1), k)), size)]


def hilton_suite(trials: int = 300, seed: int = 0) -> tuple[int, list]:
    """Lex segments of the same sizes stay cross-intersecting."""
    rng = random.Random(seed)
    fails = []
    for _ in range(trials):
        n = rng.randint(3, 9)
        k, ell = rng.randint(1, n - 1), rng.randint(1, n - 1)
        A = _random_family(rng, n, k, rng.randint(0, min(4, ref.C(n, k))))
        pool = sorted(ref.dual(A, n, ell), key=sorted)
        B = rng.sample(pool, rng.randint(0, len(pool))) if pool else []
        FA, FB = Family.from_sets(n, k, A), Family.from_sets(n, ell, B)
        LA, LB = lex_compress_pair(FA, FB)
        if not is_cross_intersecting(LA, LB) or (len(LA), len(LB)) != (len(FA), len(FB)):
            fails.append((n, k, ell, len(A), len(B)))
    return trials, fails


def result2_suite(max_n: int = 10, max_left: int = 15) -> tuple[int, list]:
    """Every subset S of the left part of a regular slice graph has |N(S)|/|S| >= |right|/|left|."""
    fails, graphs = [], 0
    seen = set()
    for n, k, ell, r, s in feasible_points(max_n):
        if s < 2:
            continue
        for L, R in zip(lower_slices(n, k, r, s), upper_slices(n, ell, r, s)):
            key = (L.members, R.members)
            if key in seen or not 0 < len(L) <= max_left:
                continue
            seen.add(key)
            for left, right in ((L, R), (R, L)):
                if len(left) > max_left:
                    continue
                g = build(left, right)
                if not is_regular(g) or g.edge_count == 0:
                    continue
                graphs += 1
                bound = Fraction(len(right), len(left))
                for size in range(1, len(left) + 1):
                    for S in combinations(range(len(left)), size):
                        if neighborhood_ratio(g, S) < bound:
                            fails.append((n, k, ell, r, s, S))
                            break
    return graphs, fails


def lovasz_suite(trials: int = 1000, seed: int = 0, tol: float = 1e-9) -> tuple[int, list]:
    """|shadow| >= binom(x, ell) where |F| = binom(x, k); also the exact cascade bound."""
    rng = random.Random(seed)
    fails = []
    for _ in range(trials):
        n = rng.randint(3, 12)
        k = rng.randint(2, min(n, 6))
        ell = rng.randint(1, k - 1)
        m = rng.randint(k, min(ref.C(n, k), 120)) if ref.C(n, k) >= k else ref.C(n, k)
        F = Family.from_sets(n, k, _random_family(rng, n, k, m))
        sh = len(shadow(F, ell))
        x = inv_real_binom(m, k)
        if sh < real_binom(x, ell) * (1 - tol) or sh < cascade_shadow_bound(m, k, ell):
            fails.append((n, k, ell, m))
    return trials, fails


def duality_suite(trials: int = 300, seed: int = 0) -> tuple[int, list]:
    """D(D(D(A))) = D(A), and a maximal pair is a fixed point of double duality."""
    rng = random.Random(seed)
    fails = []
    for _ in range(trials):
        n = rng.randint(3, 9)
        k, ell = rng.randint(1, n - 1), rng.randint(1, n - 1)
        A = Family.from_sets(n, k, _random_family(rng, n, k, rng.randint(0, min(6, ref.C(n, k)))))
        B = dual(A, ell)
        A2 = dual(B, k)
        if dual(A2, ell) != B or not set(A.members) <= set(A2.members) or not is_maximal_pair(A2, B):
            fails.append((n, k, ell, len(A)))
    return trials, fails
