"""Brute-force ground truth for products of cross-intersecting families.

``search_exhaustive`` walks every subset ``A0`` of the smaller level and forms
the maximal pair ``(dual(dual(A0)), dual(A0))``; maximal pairs are exactly the
dual fixed points, so every one of them is reached.  The walk is vectorised:
the union of "disjoint from" masks over all subsets of a block of sets is built
by doubling, so a block of ``2^c`` subsets costs ``2^c`` word operations.

``search_lex`` solves the unconstrained problem (optionally with a size
window on the first family) along lex segments, which is exhaustive because
compression to lex segments preserves cross-intersection.
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from . import bounds as bd
from . import constructions as cons
from .exactmath import binom, cascade, cascade_shadow_bound
from .setfamily import (
    DEFAULT_ENUM_CAP,
    MAX_ISO_N,
    CapExceeded,
    Family,
    _best_relabelling,
    _lex_list,
    common_intersection,
    is_cross_intersecting,
    is_maximal_pair,
    lex_segment,
    pair_canonical_key,
)

__all__ = [
    "DEFAULT_SUBSET_CAP",
    "SearchConstraints",
    "SearchResult",
    "search_exhaustive",
    "search_lex",
    "verify_theorem",
    "VerifyReport",
    "VERIFIERS",
    "shadow_minimizers",
    "mors_unique",
]

log = logging.getLogger(__name__)

DEFAULT_SUBSET_CAP = 22  # binom(n, min(k, ell)) sets on the enumerated side
_CHUNK_BITS = 16
_SAMPLE_RATE = 0.01


@dataclass(frozen=True)
class SearchConstraints:
    nontrivial: bool = False
    size_window: tuple[int, int] | None = None
    require_maximal: bool = True

    def __post_init__(self) -> None:
        if self.size_window is not None:
            lo, hi = self.size_window
            if lo > hi:
                raise ValueError(f"size window needs lo <= hi, got {self.size_window}")

    def to_dict(self) -> dict:
        return {"nontrivial": self.nontrivial,
                "size_window": list(self.size_window) if self.size_window else None,
                "require_maximal": self.require_maximal}


@dataclass
class SearchResult:
    n: int
    k: int
    ell: int
    constraints: SearchConstraints
    max_product: int | None
    extremal_pairs: list[tuple[Family, Family]]
    enumerated_count: int
    exhaustive: bool
    method: str
    class_sizes: list[int] = field(default_factory=list)
    up_to_isomorphism: bool = True
    spot_checks: int = 0
    spot_check_failures: int = 0
    pruned: int = 0
    argmax_sizes: list[tuple[int, int]] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "n": self.n, "k": self.k, "ell": self.ell,
            "method": self.method,
            "constraints": self.constraints.to_dict(),
            "max_product": None if self.max_product is None else str(self.max_product),
            "exhaustive": self.exhaustive,
            "enumerated": self.enumerated_count,
            "pruned": self.pruned,
            "up_to_isomorphism": self.up_to_isomorphism,
            "classes": [{"A": a.to_dict(), "B": b.to_dict(), "labelled_copies": c, "sizes": [len(a), len(b)]}
                        for (a, b), c in zip(self.extremal_pairs, self.class_sizes or [0] * len(self.extremal_pairs))],
            "spot_checks": {"checked": self.spot_checks, "failures": self.spot_check_failures},
        }


# -- helpers -----------------------------------------------------------------


def _validate(n: int, k: int, ell: int) -> None:
    if min(k, ell) < 1 or max(k, ell) >= n:
        raise ValueError(f"need 1 <= k, ell < n; got n={n}, k={k}, ell={ell}")


def _to_words(x: int, W: int) -> np.ndarray:
    return np.array([(x >> (64 * w)) & 0xFFFFFFFFFFFFFFFF for w in range(W)], dtype=np.uint64)


def _from_words(row: np.ndarray) -> int:
    out = 0
    for w, v in enumerate(row.tolist()):
        out |= int(v) << (64 * w)
    return out


def _bits(x: int) -> Iterable[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


@dataclass(frozen=True)
class _Levels:
    """The two levels, with "disjoint from" masks and per-element stars."""

    n: int
    s_sets: tuple[int, ...]     # enumerated side
    o_sets: tuple[int, ...]     # induced side
    W: int
    D: np.ndarray               # (N, W) uint64, row i: o-sets disjoint from s_sets[i]
    full: np.ndarray            # (W,) mask of all o-sets
    star_s: np.ndarray          # (n,) uint64, s-sets containing element e
    star_o: np.ndarray          # (n, W) uint64

    @classmethod
    def build(cls, n: int, s_level: int, o_level: int) -> "_Levels":
        s_sets, o_sets = _lex_list(n, s_level), _lex_list(n, o_level)
        W = max(1, (len(o_sets) + 63) // 64)
        D = np.zeros((len(s_sets), W), dtype=np.uint64)
        for i, a in enumerate(s_sets):
            m = 0
            for j, b in enumerate(o_sets):
                if not a & b:
                    m |= 1 << j
            D[i] = _to_words(m, W)
        full = _to_words((1 << len(o_sets)) - 1, W)
        star_s = np.array([sum(1 << i for i, a in enumerate(s_sets) if a >> e & 1) for e in range(n)],
                          dtype=np.uint64)
        star_o = np.stack([_to_words(sum(1 << j for j, b in enumerate(o_sets) if b >> e & 1), W)
                           for e in range(n)])
        return cls(n, s_sets, o_sets, W, D, full, star_s, star_o)


def _dual_rows(lv: _Levels, Y: np.ndarray) -> np.ndarray:
    """For each row of o-masks, the s-mask of sets meeting all of them."""
    X = np.zeros(len(Y), dtype=np.uint64)
    for a in range(len(lv.s_sets)):
        meets_all = ~np.any(Y & lv.D[a], axis=1)
        X |= meets_all.astype(np.uint64) << np.uint64(a)
    return X


def _popcount_rows(Y: np.ndarray) -> np.ndarray:
    return np.bitwise_count(Y).sum(axis=1, dtype=np.int64)


def _nontrivial_rows(lv: _Levels, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
    trivial = np.zeros(len(X), dtype=bool)
    for e in range(lv.n):
        in_all = ((X & ~lv.star_s[e]) == 0) & ~np.any(Y & ~lv.star_o[e], axis=1)
        trivial |= in_all
    return ~trivial


def _chunk_union(lv: _Levels, h: int, c: int) -> np.ndarray:
    """Union of disjoint masks for all subsets with high part ``h`` (rows indexed by low bits)."""
    base = np.zeros(lv.W, dtype=np.uint64)
    for b in _bits(h):
        base |= lv.D[c + b]
    U = base[None, :]
    for i in range(c):
        U = np.concatenate([U, U | lv.D[i]])
    return U


@dataclass
class _ChunkOut:
    best: int | None
    rows: list[tuple[int, bytes]]
    spot: int
    spot_fail: int


def _scan_chunks(args: tuple) -> _ChunkOut:
    n, s_level, o_level, k_is_s, cons_, c, h_lo, h_hi, seed = args
    lv = _Levels.build(n, s_level, o_level)
    best: int | None = None
    rows: dict[bytes, int] = {}
    spot = fail = 0
    for h in range(h_lo, h_hi):
        U = _chunk_union(lv, h, c)
        Y0 = ~U & lv.full
        rng = np.random.default_rng([seed, h])
        sample = np.flatnonzero(rng.random(len(Y0)) < _SAMPLE_RATE)
        if cons_.require_maximal:
            Y = np.unique(Y0, axis=0)
            X = _dual_rows(lv, Y)
            if len(sample):
                # triple dual: dual(dual(dual(A0))) == dual(A0)
                Ys = Y0[sample]
                Xs = _dual_rows(lv, Ys)
                Y3 = np.tile(lv.full, (len(Xs), 1))
                for a in range(len(lv.s_sets)):
                    hit = ((Xs >> np.uint64(a)) & np.uint64(1)).astype(bool)
                    Y3[hit] &= ~lv.D[a]
                spot += len(sample)
                fail += int(np.count_nonzero(np.any(Y3 != Ys, axis=1)))
        else:
            Y = Y0
            X = (np.uint64(h) << np.uint64(c)) | np.arange(len(Y0), dtype=np.uint64)
        sx = np.bitwise_count(X).astype(np.int64)
        sy = _popcount_rows(Y)
        size_a = sx if k_is_s else sy
        ok = np.ones(len(X), dtype=bool)
        if cons_.size_window is not None:
            lo, hi = cons_.size_window
            ok &= (size_a >= lo) & (size_a <= hi)
        if cons_.nontrivial:
            ok &= _nontrivial_rows(lv, X, Y)
        if not ok.any():
            continue
        prod = np.where(ok, sx * sy, -1)
        m = int(prod.max())
        if best is None or m > best:
            best, rows = m, {}
        if m == best:
            for i in np.flatnonzero(prod == m):
                rows[Y[i].tobytes()] = int(X[i])
    return _ChunkOut(best, sorted((x, y) for y, x in rows.items()), spot, fail)


def _class_reps(pairs: Sequence[tuple[Family, Family]], symmetric: bool) -> tuple[list, list[int], bool]:
    if not pairs:
        return [], [], True
    n = pairs[0][0].n
    if n > MAX_ISO_N:
        return list(pairs), [1] * len(pairs), False
    seen: dict[tuple, list] = {}
    for A, B in pairs:
        key = pair_canonical_key(A, B, symmetric)
        if key in seen:
            seen[key][1] += 1
        else:
            seen[key] = [(A, B), 1]
    reps, sizes = [], []
    for key in sorted(seen):
        (A, B), cnt = seen[key]
        reps.append(_canonical_pair(A, B, symmetric))
        sizes.append(cnt)
    return reps, sizes, True


def _canonical_pair(A: Family, B: Family, symmetric: bool) -> tuple[Family, Family]:
    key, (pa, pb) = _best_relabelling(A.n, [A.members, B.members])
    best = (len(A), len(B), key), (Family.from_masks(A.n, A.k, pa), Family.from_masks(A.n, B.k, pb))
    if symmetric:
        key2, (qb, qa) = _best_relabelling(A.n, [B.members, A.members])
        alt = (len(B), len(A), key2), (Family.from_masks(A.n, A.k, qb), Family.from_masks(A.n, B.k, qa))
        best = min(best, alt, key=lambda t: t[0])
    return best[1]


# -- public searches ---------------------------------------------------------


def search_exhaustive(n: int, k: int, ell: int, constraints: SearchConstraints | None = None,
                      cap: int = DEFAULT_SUBSET_CAP, workers: int = 1, seed: int = 0) -> SearchResult:
    """Exact maximum of ``|A||B|`` over (maximal) cross-intersecting pairs under ``constraints``."""
    _validate(n, k, ell)
    cons_ = constraints or SearchConstraints()
    if cons_.require_maximal:
        s_level = min(k, ell)
        o_level = ell if s_level == k else k
    else:
        s_level, o_level = k, ell
    N = binom(n, s_level)
    if N > cap:
        raise CapExceeded(f"binom({n},{s_level}) = {N} subsets' ground set exceeds cap {cap}")
    if N > 62:
        raise CapExceeded("enumerated side must have at most 62 sets")
    k_is_s = s_level == k
    c = min(N, _CHUNK_BITS)
    n_chunks = 1 << (N - c)
    jobs = []
    parts = max(1, min(workers, n_chunks))
    bounds_ = [n_chunks * p // parts for p in range(parts + 1)]
    for p in range(parts):
        jobs.append((n, s_level, o_level, k_is_s, cons_, c, bounds_[p], bounds_[p + 1], seed))
    if parts == 1:
        outs = [_scan_chunks(jobs[0])]
    else:
        with ProcessPoolExecutor(max_workers=parts) as pool:
            outs = list(pool.map(_scan_chunks, jobs))

    best = max((o.best for o in outs if o.best is not None), default=None)
    merged: dict[bytes, int] = {}
    for o in outs:
        if o.best == best:
            for x, y in o.rows:
                merged[y] = x
    lv = _Levels.build(n, s_level, o_level)
    pairs = []
    for y, x in sorted(merged.items(), key=lambda t: (t[1], t[0])):
        ymask = _from_words(np.frombuffer(y, dtype=np.uint64))
        S = Family.from_masks(n, s_level, [lv.s_sets[i] for i in _bits(x)])
        O = Family.from_masks(n, o_level, [lv.o_sets[j] for j in _bits(ymask)])
        pairs.append((S, O) if k_is_s else (O, S))
    reps, sizes, iso = _class_reps(pairs, symmetric=(k == ell))
    res = SearchResult(n, k, ell, cons_, best, reps, 1 << N, True, "exhaustive", sizes, iso,
                       sum(o.spot for o in outs), sum(o.spot_fail for o in outs), 0,
                       sorted({(len(a), len(b)) for a, b in pairs}))
    log.info("exhaustive (%d,%d,%d): max %s, %d classes", n, k, ell, best, len(reps))
    return res


def _lex_profile(n: int, k: int, ell: int, cap: int) -> list[int]:
    """``b_max(a) = |dual(L(n,k,a), ell)|`` for ``a = 0 .. binom(n,k)``."""
    if binom(n, ell) > cap or binom(n, k) > cap:
        raise CapExceeded(f"binom({n},{ell}) or binom({n},{k}) exceeds cap {cap}")
    left, right = _lex_list(n, k), _lex_list(n, ell)
    M = len(right)
    union = 0
    out = [M]
    for a in left:
        m = 0
        for j, b in enumerate(right):
            if not a & b:
                m |= 1 << j
        union |= m
        out.append(M - union.bit_count())
    return out


def search_lex(n: int, k: int, ell: int, window: tuple[int, int] | None = None,
               cap: int = DEFAULT_ENUM_CAP) -> SearchResult:
    """Maximum of ``|A||B|`` over all cross-intersecting pairs, ``|A|`` optionally restricted to ``window``."""
    _validate(n, k, ell)
    prof = _lex_profile(n, k, ell, cap)
    lo, hi = window if window is not None else (0, len(prof) - 1)
    lo, hi = max(lo, 0), min(hi, len(prof) - 1)
    cons_ = SearchConstraints(False, window if window is not None and window[0] <= window[1] else None, False)
    best, arg = None, []
    for a in range(lo, hi + 1):
        p = a * prof[a]
        if best is None or p > best:
            best, arg = p, [a]
        elif p == best:
            arg.append(a)
    pairs = [(lex_segment(n, k, a), lex_segment(n, ell, prof[a])) for a in arg]
    return SearchResult(n, k, ell, cons_, best, pairs,
                        max(0, hi - lo + 1), True, "lex", [1] * len(pairs), False,
                        argmax_sizes=[(a, prof[a]) for a in arg])


# -- theorem verification ----------------------------------------------------


@dataclass
class VerifyReport:
    theorem: str
    records: list[dict] = field(default_factory=list)

    @property
    def mismatches(self) -> list[dict]:
        return [r for r in self.records if not r["match"]]

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> dict:
        return {"theorem": self.theorem, "points": len(self.records),
                "mismatch_count": len(self.mismatches), "ok": self.ok, "records": self.records}


def _key(pair: tuple[Family, Family]) -> tuple:
    return pair_canonical_key(pair[0], pair[1], pair[0].k == pair[1].k)


def _classes_match(res: SearchResult, constructions: list[tuple[Family, Family]]) -> bool:
    want = {_key(p) for p in constructions}
    got = {_key(p) for p in res.extremal_pairs}
    return got == want


def _main_constructions(n: int, k: int, ell: int) -> list[tuple[Family, Family]]:
    g = bd.gamma(n, k, ell)
    out = []
    if ell >= 2 and bd.main1_value(n, k, ell) == g:
        out.append(cons.extremal_main_1(n, k, ell))
    if bd.main2_value(n, k, ell) == g:
        out.append(cons.extremal_main_2(n, k, ell))
    return out


def _v_main(p: dict, opts: dict) -> dict:
    n, k, ell = p["n"], p["k"], p["ell"]
    res = search_exhaustive(n, k, ell, SearchConstraints(nontrivial=True), **opts)
    g = bd.gamma(n, k, ell)
    cls_ok = _classes_match(res, _main_constructions(n, k, ell))
    return {"params": p, "expected": str(g), "observed": str(res.max_product),
            "classes": len(res.extremal_pairs), "classes_match_constructions": cls_ok,
            "match": res.max_product == g and cls_ok and res.spot_check_failures == 0,
            "certificate": res.to_dict()}


def _v_fkwx(p: dict, opts: dict) -> dict:
    n, k = p["n"], p["k"]
    res = search_exhaustive(n, k, k, SearchConstraints(nontrivial=True), **opts)
    want = bd.bound("FKWX", {"n": n, "k": k}).value
    cls_ok = _classes_match(res, [cons.extremal_FKWX(n, k)])
    return {"params": p, "expected": str(want), "observed": str(res.max_product),
            "classes": len(res.extremal_pairs), "classes_match_constructions": cls_ok,
            "match": res.max_product == want and cls_ok, "certificate": res.to_dict()}


def _v_lex_bound(theorem: str):
    def run(p: dict, opts: dict) -> dict:
        n, k = p["n"], p["k"]
        ell = p.get("ell", k)
        res = search_lex(n, k, ell, cap=opts.get("lex_cap", DEFAULT_ENUM_CAP))
        rep = bd.bound(theorem, p)
        if not rep.hypotheses_met:
            raise bd.HypothesisError(f"{theorem} hypotheses fail at {p}")
        star_attains = binom(n - 1, k - 1) in [a for a, _ in res.argmax_sizes]
        return {"params": p, "expected": str(rep.value), "observed": str(res.max_product),
                "argmax_sizes": res.argmax_sizes, "star_attains": star_attains,
                "match": res.max_product == rep.value}
    return run


def _best_in_window(n: int, k: int, ell: int, window: tuple[int, int], opts: dict) -> SearchResult:
    return search_lex(n, k, ell, window, cap=opts.get("lex_cap", DEFAULT_ENUM_CAP))


def _prop_points(n: int, k: int, ell: int) -> list[tuple[str, dict, tuple[int, int]]]:
    pts = []
    for s in range(3, k + 1):
        pts.append(("PROP1", {"n": n, "k": k, "ell": ell, "s": s}, bd.proposition_window("PROP1", n, k, ell, s)))
    for prop in ("PROP2", "PROP3", "PROP4"):
        pts.append((prop, {"n": n, "k": k, "ell": ell}, bd.proposition_window(prop, n, k, ell)))
    for s in range(2, ell + 1):
        pts.append(("PROP5", {"n": n, "k": k, "ell": ell, "s": s}, bd.proposition_window("PROP5", n, k, ell, s)))
    return pts


def _v_props(p: dict, opts: dict) -> dict:
    n, k, ell = p["n"], p["k"], p["ell"]
    rows = []
    for prop, params, win in _prop_points(n, k, ell):
        rep = bd.bound(prop, params)
        if not rep.hypotheses_met or win[0] > win[1]:
            continue
        lex = _best_in_window(n, k, ell, win, opts)
        row = {"prop": prop, "params": params, "window": list(win), "bound": str(rep.value),
               "lex_max": None if lex.max_product is None else str(lex.max_product)}
        ok = lex.max_product is None or lex.max_product <= rep.value
        if binom(n, min(k, ell)) <= opts.get("cap", DEFAULT_SUBSET_CAP):
            ex = search_exhaustive(n, k, ell, SearchConstraints(size_window=win), **opts)
            row["maximal_max"] = None if ex.max_product is None else str(ex.max_product)
            ok = ok and (ex.max_product is None or ex.max_product <= rep.value)
        row["ok"] = ok
        rows.append(row)
    return {"params": p, "checked": len(rows), "match": all(r["ok"] for r in rows), "windows": rows}


def _coroa_windows(n: int, k: int, ell: int) -> list[tuple[str, tuple[int, int]]]:
    base = binom(n - 1, k - 1)
    s34 = sum(binom(n - i, k - 2) for i in (3, 4))
    s35 = s34 + binom(n - 5, k - 2)
    sl = sum(binom(n - i, k - 2) for i in range(3, ell + 2))
    out = [("i", (base + 1, base + s34))]
    if n < ell * ell:
        out.append(("ii", (base + s34, base + s35)))
    out.append(("iii", (base + sl, binom(n, k))))
    return out


def _v_coroa(p: dict, opts: dict) -> dict:
    n, k, ell = p["n"], p["k"], p["ell"]
    if not (n >= 2 * ell > 2 * k > 0):
        raise bd.HypothesisError(f"corollary needs n >= 2 ell > 2k > 0, got {p}")
    g = bd.gamma(n, k, ell)
    rows = []
    for tag, win in _coroa_windows(n, k, ell):
        if win[0] > win[1]:
            continue
        res = _best_in_window(n, k, ell, win, opts)
        rows.append({"condition": tag, "window": list(win),
                     "max": None if res.max_product is None else str(res.max_product),
                     "ok": res.max_product is None or res.max_product <= g})
    return {"params": p, "gamma": str(g), "match": all(r["ok"] for r in rows), "conditions": rows}


def _v_theo3(p: dict, opts: dict) -> dict:
    n, k, ell = p["n"], p["k"], p["ell"]
    rows = []
    for r in range(1, k + 1):
        for s in range(2, ell + 1):
            params = {"n": n, "k": k, "ell": ell, "r": r, "s": s}
            rep = bd.bound("THEO3", params)
            if not rep.hypotheses_met:
                continue
            thr = cons.size_upper(n, ell, r, s) if r <= ell and s <= ell and ell < n else None
            if thr is None:
                continue
            # window on |B|: run the sweep with the levels swapped
            res = search_lex(n, ell, k, (thr, binom(n, ell)), cap=opts.get("lex_cap", DEFAULT_ENUM_CAP))
            rows.append({"r": r, "s": s, "threshold": thr, "bound": str(rep.value),
                         "max": None if res.max_product is None else str(res.max_product),
                         "ok": res.max_product is None or res.max_product <= rep.value})
    return {"params": p, "match": all(r["ok"] for r in rows), "checked": len(rows), "cases": rows}


def _v_sharpness(p: dict, opts: dict) -> dict:
    n, k, ell = p["n"], p["k"], p["ell"]
    if n == 2 * ell - 1 and k == ell - 1:
        A, B = cons.sharpness_case1(ell)
    elif n == 2 * k and k == ell:
        A, B = cons.sharpness_case2(k)
    else:
        raise bd.HypothesisError(f"no sharpness construction at {p}")
    g = bd.gamma(n, k, ell)
    prod = len(A) * len(B)
    ci = is_cross_intersecting(A, B)
    nt = common_intersection([A, B]) == 0
    res = search_exhaustive(n, k, ell, SearchConstraints(nontrivial=True), **opts)
    relation = ">" if prod > g else ("=" if prod == g else "<")
    return {"params": p, "gamma": str(g), "construction_product": str(prod), "relation": relation,
            "cross_intersecting": ci, "nontrivial": nt, "oracle_max": str(res.max_product),
            "oracle_vs_gamma": ">" if res.max_product > g else ("=" if res.max_product == g else "<"),
            "match": ci and nt and res.max_product >= prod >= g}


def _v_kk(p: dict, opts: dict) -> dict:
    n, k, ell = p["n"], p["k"], p["ell"]
    rows = shadow_minimizers(n, k, ell, cap=opts.get("kk_cap", 24))
    for r in rows:
        r["ok"] = r["min_shadow"] == r["cascade_bound"] and (r["classes"] == 1) == r["mors_unique"]
    return {"params": p, "match": all(r["ok"] for r in rows), "sizes": rows}


_DEFAULT_GRIDS: dict[str, list[dict]] = {
    "KK": [{"n": 5, "k": 3, "ell": 2}],
    "MAIN": [{"n": 6, "k": 2, "ell": 2}, {"n": 7, "k": 2, "ell": 3}],
    "FKWX": [{"n": 5, "k": 2}],
    "MT": [{"n": n, "k": k, "ell": ell} for n in range(2, 11) for ell in range(1, n // 2 + 1)
           for k in range(1, ell + 1)],
    "PYBER1": [{"n": n, "k": k} for n in range(2, 11) for k in range(1, n // 2 + 1)],
    "SHARPNESS": [{"n": 5, "k": 2, "ell": 3}, {"n": 4, "k": 2, "ell": 2}],
    "PROPS": [{"n": 6, "k": 2, "ell": 3}, {"n": 7, "k": 2, "ell": 3}, {"n": 8, "k": 2, "ell": 3},
              {"n": 8, "k": 2, "ell": 4}],
    "COROA": [{"n": n, "k": k, "ell": ell} for n in range(4, 10) for ell in range(2, n // 2 + 1)
              for k in range(1, ell)],
    "THEO3": [{"n": n, "k": k, "ell": ell} for n in range(2, 10) for k in range(1, n)
              for ell in range(k, n - k + 1)],
}

VERIFIERS = {
    "MAIN": _v_main,
    "FKWX": _v_fkwx,
    "MT": _v_lex_bound("MT"),
    "PYBER1": _v_lex_bound("PYBER1"),
    "SHARPNESS": _v_sharpness,
    "PROPS": _v_props,
    "COROA": _v_coroa,
    "THEO3": _v_theo3,
    "KK": _v_kk,
}


def verify_theorem(theorem_id: str, param_grid: Sequence[dict] | None = None, cap: int = DEFAULT_SUBSET_CAP,
                   workers: int = 1, seed: int = 0) -> VerifyReport:
    """Compare oracle maxima with a theorem over a grid; mismatches are report content."""
    tid = theorem_id.upper()
    if tid not in VERIFIERS:
        raise KeyError(f"unknown theorem {theorem_id!r}; known: {', '.join(VERIFIERS)}")
    grid = list(param_grid) if param_grid is not None else _DEFAULT_GRIDS[tid]
    opts = {"cap": cap, "workers": workers, "seed": seed}
    report = VerifyReport(tid)
    for p in grid:
        t0 = time.perf_counter()
        try:
            rec = VERIFIERS[tid](dict(p), opts if tid in ("MAIN", "FKWX", "SHARPNESS", "PROPS")
                                 else {"lex_cap": DEFAULT_ENUM_CAP})
        except CapExceeded as exc:
            rec = {"params": p, "match": False, "error": f"cap exceeded: {exc}"}
        rec["elapsed_ms"] = int((time.perf_counter() - t0) * 1000)
        report.records.append(rec)
    return report


# -- shadow minimisers -------------------------------------------------------


def mors_unique(m: int, k: int, ell: int) -> bool:
    """Condition under which the colex family is the only shadow minimiser up to isomorphism."""
    rep = cascade(m, k)
    a1 = rep.tops[0]
    return ell >= rep.t or binom(a1 + 1, k) - 1 == m or m <= k + 1


def shadow_minimizers(n: int, k: int, ell: int, cap: int = DEFAULT_SUBSET_CAP) -> list[dict]:
    """For each size ``m``, the least ``ell``-shadow over all ``m``-families of k-sets and the minimisers.

    Every subset of ``binom([n], k)`` is enumerated; minimisers are grouped up
    to relabelling of ``[n]``.
    """
    N = binom(n, k)
    if N > cap:
        raise CapExceeded(f"binom({n},{k}) = {N} exceeds cap {cap}")
    lv = _Levels.build(n, k, ell)
    subs = [sum(1 << j for j, b in enumerate(lv.o_sets) if b & a == b) for a in lv.s_sets]
    sh = np.stack([_to_words(x, lv.W) for x in subs])
    U = np.zeros((1, lv.W), dtype=np.uint64)
    for i in range(N):
        U = np.concatenate([U, U | sh[i]])
    size = np.bitwise_count(np.arange(1 << N, dtype=np.uint64)).astype(np.int64)
    shad = _popcount_rows(U)
    out = []
    for m in range(1, N + 1):
        idx = np.flatnonzero(size == m)
        vals = shad[idx]
        best = int(vals.min())
        winners = idx[vals == best]
        keys = set()
        for x in winners.tolist():
            fam = Family.from_masks(n, k, [lv.s_sets[i] for i in _bits(int(x))])
            keys.add(_best_relabelling(n, [fam.members])[0])
        out.append({"m": m, "min_shadow": best, "cascade_bound": cascade_shadow_bound(m, k, ell),
                    "minimizers": int(len(winners)), "classes": len(keys),
                    "mors_unique": mors_unique(m, k, ell)})
    return out
