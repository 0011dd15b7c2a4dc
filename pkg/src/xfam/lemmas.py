"""Concrete-parameter checks of the auxiliary inequalities and binomial identities.

``check_lemma`` decides one instance exactly (integers only: every ratio
comparison is cross-multiplied).  ``sweep`` walks the full hypothesis region
up to ``max_n`` and collects counterexamples.  Points where a quantity is
undefined (a binomial with negative top index, or the comparison value ``Γ``
outside ``n >= k + ell``) are counted separately as domain exclusions.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterator

from .bounds import HypothesisError, gamma, mors2_thresholds, phi

__all__ = ["LEMMAS", "LemmaSweep", "check_lemma", "sweep", "sweep_all", "lemma_hypotheses"]

log = logging.getLogger(__name__)


class DomainError(HypothesisError):
    """A quantity in the statement is undefined at this point."""


@lru_cache(maxsize=4)
def _pascal(size: int) -> tuple[tuple[int, ...], ...]:
    rows = [(1,)]
    for m in range(1, size + 1):
        prev = rows[-1]
        rows.append(tuple([1] + [prev[j - 1] + prev[j] for j in range(1, m)] + [1]))
    return tuple(rows)


_TABLE = _pascal(256)


def _C(m: int, j: int) -> int:
    if m < 0:
        raise DomainError(f"binomial with negative top index {m}")
    if j < 0 or j > m:
        return 0
    if m < len(_TABLE):
        return _TABLE[m][j]
    from math import comb
    return comb(m, j)


C = _C


def _gamma(n: int, k: int, ell: int) -> int:
    if n < k + ell:
        raise DomainError("gamma needs n >= k + ell")
    return gamma(n, k, ell)


# -- the individual statements ---------------------------------------------


def _n5(n: int, k: int, ell: int) -> bool:
    if n - 5 < 0:
        raise DomainError("phi(n-5) needs n >= 5")
    return phi(n, k, ell, n - 5).value < _gamma(n, k, ell)


def _n4(n: int, k: int, ell: int) -> bool:
    return phi(n, k, ell, n - 4).value < _gamma(n, k, ell)


def _nl1(n: int, k: int, ell: int) -> bool:
    return phi(n, k, ell, n - ell - 1).value < _gamma(n, k, ell)


def _claim525(n: int, k: int, ell: int) -> bool:
    lhs = (C(n - 1, k - 1) + C(n - 2, k - 1)) * (C(n - 2, ell - 2) + C(n - 5, ell - 4))
    rhs = C(n - 1, k - 1) * (C(n - 1, ell - 1) - C(n - k - 1, ell - 1))
    return lhs < rhs


def _claim526(n: int, k: int, ell: int) -> bool:
    lhs = (C(n - 1, k - 1) + C(n - 2, k - 1)) * C(n - 5, ell - 4)
    return lhs < C(n - 5, k - 1) * C(n - 2, ell - 2)


def _ineq21_all_t(n: int, k: int, ell: int, r: int, s: int) -> Iterator[tuple[int, bool]]:
    """Yield ``(t, holds)`` for ``t = 0 .. k-r-1`` with running sums."""
    C = _tb if n < len(_TABLE) and n - k - s >= 0 else _C
    head = 0
    for i in range(1, r + 1):
        head += C(n - i, ell - 1)
    num = C(n - r, k - r) - C(n - r - s, k - r)
    base = n - r - s
    den = head + C(base, ell - s)
    top = bottom = 0
    for t in range(0, k - r):
        j = t + 1
        top += C(base - j, k - r - j)
        v = C(base - j, ell - s)
        bottom += v
        # num/den < top/bottom
        yield t, num * bottom < top * den
        den += v


def _ineq21(n: int, k: int, ell: int, r: int, s: int, t: int) -> bool:
    for tt, ok in _ineq21_all_t(n, k, ell, r, s):
        if tt == t:
            return ok
    raise HypothesisError("t out of range")


def _mors2_dichotomy(n: int, k: int, ell: int) -> bool:
    # With |A| <= C(n-1,k-1), |B| <= C(n-1,ell-1): either |A| < XA, or |B| < XB, or
    # one threshold is attained and then so is the other.
    xa, xb = mors2_thresholds(n, k, ell)
    worst = max((xa - 1) * C(n - 1, ell - 1), C(n - 1, k - 1) * (xb - 1), xa * xb)
    return worst <= _gamma(n, k, ell)


def _id3(m: int, j: int, s: int) -> bool:
    return C(m, j + 1) == sum(C(m - i, j) for i in range(1, s + 1)) + C(m - s, j + 1)


def _id4(m: int, j: int, s: int) -> bool:
    return C(m, j) == sum(C(m - i, j - i + 1) for i in range(1, s + 1)) + C(m - s, j - s)


def _id5(m: int, j: int) -> bool:
    return C(m, j) == sum(C(m - 1 - i, j - i) for i in range(0, j + 1))


def _tb(m: int, j: int) -> int:
    # table lookup for the hot loops; callers guarantee m >= 0
    return _TABLE[m][j] if 0 <= j <= m else 0


def _chain6(n: int, k: int, ell: int, s: int) -> bool:
    # C(n-i-s, k-i) / C(n-i-s, ell-s) strictly decreasing for i = 2 .. k
    if n - k - s < 0:
        raise DomainError("negative top index")
    b = ell - s
    pa = pb = None
    for i in range(2, k + 1):
        top = n - i - s
        ca, cb = _tb(top, k - i), _tb(top, b)
        if cb == 0:
            raise DomainError("zero denominator")
        if pa is not None and pa * cb <= ca * pb:
            return False
        pa, pb = ca, cb
    return True


def _chain7(n: int, k: int, ell: int, s: int) -> bool:
    # C(n-i, k-2) / C(n-i, ell-i+1) non-decreasing for i = 2 .. s
    if n - s < 0:
        raise DomainError("negative top index")
    pa = pb = None
    for i in range(2, s + 1):
        ca, cb = _tb(n - i, k - 2), _tb(n - i, ell - i + 1)
        if cb == 0:
            raise DomainError("zero denominator")
        if pa is not None and pa * cb > ca * pb:
            return False
        pa, pb = ca, cb
    return True


# -- hypothesis regions ------------------------------------------------------


def _main_range(n: int, k: int, ell: int) -> bool:
    return k > 0 and ((n >= 2 * ell and ell > k) or (n > 2 * ell and ell == k))


@dataclass(frozen=True)
class Lemma:
    params: tuple[str, ...]
    hypothesis: Callable[..., bool]
    check: Callable[..., bool]
    region: Callable[[int], Iterator[tuple[int, ...]]]
    statement: str


def _r_nkl(pred: Callable[[int, int, int], bool]) -> Callable[[int], Iterator[tuple[int, ...]]]:
    def gen(max_n: int) -> Iterator[tuple[int, ...]]:
        for n in range(1, max_n + 1):
            for ell in range(1, n + 1):
                for k in range(1, n + 1):
                    if pred(n, k, ell):
                        yield (n, k, ell)
    return gen


def _r_ineq21(max_n: int) -> Iterator[tuple[int, ...]]:
    # t is swept inside the check to reuse running sums; see sweep()
    for n in range(1, max_n + 1):
        for k in range(1, n):
            for ell in range(k, n - k + 1):
                for r in range(1, k):
                    for s in range(2, ell + 1):
                        yield (n, k, ell, r, s)


def _r_mjs(max_n: int) -> Iterator[tuple[int, ...]]:
    for m in range(1, max_n + 1):
        for j in range(1, m):
            for s in range(1, m - j + 1):
                yield (m, j, s)


def _r_mj(max_n: int) -> Iterator[tuple[int, ...]]:
    for m in range(1, max_n + 1):
        for j in range(1, m):
            yield (m, j)


def _r_chain(max_n: int) -> Iterator[tuple[int, ...]]:
    for n in range(1, max_n + 1):
        for k in range(1, n):
            for ell in range(1, n - k + 1):
                for s in range(1, ell + 1):
                    yield (n, k, ell, s)


def _h_ineq21(n, k, ell, r, s, t):
    return k > 0 and ell >= k and n >= k + ell and 1 <= r <= k - 1 and 0 <= t <= k - r - 1 and 2 <= s <= ell


LEMMAS: dict[str, Lemma] = {
    "N5": Lemma(("n", "k", "ell"), lambda n, k, ell: n >= 2 * ell >= 2 * k > 0, _n5,
                _r_nkl(lambda n, k, ell: n >= 2 * ell >= 2 * k > 0), "phi(n-5) < Gamma"),
    "N4": Lemma(("n", "k", "ell"), lambda n, k, ell: 0 < k < ell < ell * ell <= n, _n4,
                _r_nkl(lambda n, k, ell: 0 < k < ell < ell * ell <= n), "phi(n-4) < Gamma"),
    "NL1": Lemma(("n", "k", "ell"), lambda n, k, ell: n >= ell + 1 and ell > k >= 2, _nl1,
                 _r_nkl(lambda n, k, ell: n >= ell + 1 and ell > k >= 2), "phi(n-ell-1) < Gamma"),
    "INEQ21": Lemma(("n", "k", "ell", "r", "s", "t"), _h_ineq21, _ineq21, _r_ineq21,
                    "size-sensitive ratio inequality for the upper/lower families"),
    "CLAIM525": Lemma(("n", "k", "ell"), lambda n, k, ell: n >= 2 * ell >= 2 * k and 5 * k > 3 * ell and ell >= 5,
                      _claim525,
                      _r_nkl(lambda n, k, ell: n >= 2 * ell >= 2 * k and 5 * k > 3 * ell and ell >= 5),
                      "(C(n-1,k-1)+C(n-2,k-1))(C(n-2,l-2)+C(n-5,l-4)) < C(n-1,k-1)(C(n-1,l-1)-C(n-k-1,l-1))"),
    "CLAIM526": Lemma(("n", "k", "ell"),
                      lambda n, k, ell: k > 0 and n >= 2 * ell >= 2 * k and (ell == 4 or 5 * k <= 3 * ell),
                      _claim526,
                      _r_nkl(lambda n, k, ell: k > 0 and n >= 2 * ell >= 2 * k and (ell == 4 or 5 * k <= 3 * ell)),
                      "(C(n-1,k-1)+C(n-2,k-1)) C(n-5,l-4) < C(n-5,k-1) C(n-2,l-2)"),
    "MORS2_DICHOTOMY": Lemma(("n", "k", "ell"), lambda n, k, ell: ell >= 2 and _main_range(n, k, ell),
                             _mors2_dichotomy,
                             _r_nkl(lambda n, k, ell: ell >= 2 and _main_range(n, k, ell)),
                             "nontrivial size dichotomy with both families below the star sizes stays <= Gamma"),
    "ID3": Lemma(("m", "j", "s"), lambda m, j, s: min(m, j, s) > 0 and m >= j + s, _id3, _r_mjs,
                 "C(m,j+1) = sum_{i=1..s} C(m-i,j) + C(m-s,j+1)"),
    "ID4": Lemma(("m", "j", "s"), lambda m, j, s: min(m, j, s) > 0 and m >= j + s, _id4, _r_mjs,
                 "C(m,j) = sum_{i=1..s} C(m-i,j-i+1) + C(m-s,j-s)"),
    "ID5": Lemma(("m", "j"), lambda m, j: m > j > 0, _id5, _r_mj,
                 "C(m,j) = C(m-1,j) + C(m-2,j-1) + ... + C(m-j-1,0)"),
    "CHAIN6": Lemma(("n", "k", "ell", "s"), lambda n, k, ell, s: min(n, k, ell, s) > 0 and n >= k + ell and s <= ell,
                    _chain6, _r_chain, "C(n-i-s,k-i)/C(n-i-s,l-s) strictly decreasing in i = 2..k"),
    "CHAIN7": Lemma(("n", "k", "ell", "s"), lambda n, k, ell, s: min(n, k, ell, s) > 0 and n >= k + ell and s <= ell,
                    _chain7, _r_chain, "C(n-i,k-2)/C(n-i,l-i+1) non-decreasing in i = 2..s"),
}

LEMMA_IDS: tuple[str, ...] = tuple(LEMMAS)


def lemma_hypotheses(lemma_id: str, params: dict[str, int]) -> bool:
    lem = LEMMAS[lemma_id.upper()]
    return bool(lem.hypothesis(*(int(params[p]) for p in lem.params)))


def check_lemma(lemma_id: str, params: dict[str, int]) -> bool:
    """Decide one instance; raises :class:`HypothesisError` outside the hypotheses or domain."""
    lemma_id = lemma_id.upper()
    if lemma_id not in LEMMAS:
        raise KeyError(f"unknown lemma {lemma_id!r}; known: {', '.join(LEMMAS)}")
    lem = LEMMAS[lemma_id]
    args = tuple(int(params[p]) for p in lem.params)
    if not lem.hypothesis(*args):
        raise HypothesisError(f"{lemma_id}: hypotheses fail at {dict(zip(lem.params, args))}")
    return bool(lem.check(*args))


@dataclass
class LemmaSweep:
    lemma_id: str
    max_n: int
    checked: int = 0
    domain_excluded: int = 0
    counterexamples: list[tuple[int, ...]] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.counterexamples

    def merge(self, other: "LemmaSweep") -> None:
        self.checked += other.checked
        self.domain_excluded += other.domain_excluded
        self.counterexamples.extend(other.counterexamples)

    def to_dict(self, limit: int = 50) -> dict:
        params = LEMMAS[self.lemma_id].params
        return {
            "lemma": self.lemma_id,
            "statement": LEMMAS[self.lemma_id].statement,
            "max_n": self.max_n,
            "checked": self.checked,
            "domain_excluded": self.domain_excluded,
            "holds": self.holds,
            "counterexample_count": len(self.counterexamples),
            "counterexamples": [dict(zip(params, c)) for c in self.counterexamples[:limit]],
        }


def _sweep_part(lemma_id: str, max_n: int, part: int, parts: int) -> LemmaSweep:
    lem = LEMMAS[lemma_id]
    out = LemmaSweep(lemma_id, max_n)
    for point in lem.region(max_n):
        if point[0] % parts != part:
            continue
        if lemma_id == "INEQ21":
            try:
                for t, ok in _ineq21_all_t(*point):
                    out.checked += 1
                    if not ok:
                        out.counterexamples.append(point + (t,))
            except DomainError:
                out.domain_excluded += 1
            continue
        try:
            ok = lem.check(*point)
        except DomainError:
            out.domain_excluded += 1
            continue
        out.checked += 1
        if not ok:
            out.counterexamples.append(point)
    return out


def sweep(lemma_id: str, max_n: int = 100, workers: int = 1) -> LemmaSweep:
    """Check every hypothesis point with first parameter ``<= max_n``."""
    lemma_id = lemma_id.upper()
    if lemma_id not in LEMMAS:
        raise KeyError(f"unknown lemma {lemma_id!r}")
    result = LemmaSweep(lemma_id, max_n)
    if workers <= 1:
        result.merge(_sweep_part(lemma_id, max_n, 0, 1))
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_sweep_part, lemma_id, max_n, p, workers) for p in range(workers)]
            for f in futures:
                result.merge(f.result())
    result.counterexamples.sort()
    log.info("%s: %d checked, %d counterexamples", lemma_id, result.checked, len(result.counterexamples))
    return result


def sweep_all(max_n: int = 100, workers: int = 1, lemma_ids: tuple[str, ...] | None = None,
              progress: Callable[[LemmaSweep], None] | None = None) -> list[LemmaSweep]:
    out = []
    for lid in lemma_ids or LEMMA_IDS:
        res = sweep(lid, max_n, workers)
        if progress is not None:
            progress(res)
        out.append(res)
    return out
