"""Exact binomials, cascade representations and the real-valued binomial.

Python's ``int`` and ``fractions.Fraction`` carry all exact work; floats only
appear in :func:`real_binom` and :func:`inv_real_binom`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "binom",
    "CascadeRep",
    "cascade",
    "cascade_shadow_bound",
    "real_binom",
    "inv_real_binom",
    "ratio_equiv_check",
]


def binom(m: int, j: int) -> int:
    """Binomial coefficient with the convention ``binom(m, j) = 0`` outside ``0 <= j <= m``."""
    if j < 0 or m < 0 or j > m:
        return 0
    return math.comb(m, j)


@dataclass(frozen=True)
class CascadeRep:
    """``m = binom(a_1, k) + binom(a_2, k-1) + ... + binom(a_t, k-t+1)``.

    ``terms`` holds ``(a_i, k-i+1)`` pairs in order.
    """

    k: int
    terms: tuple[tuple[int, int], ...]

    @property
    def t(self) -> int:
        return len(self.terms)

    @property
    def tops(self) -> tuple[int, ...]:
        return tuple(a for a, _ in self.terms)

    def value(self) -> int:
        return sum(binom(a, j) for a, j in self.terms)

    def is_valid(self) -> bool:
        tops = self.tops
        if any(j != self.k - i for i, (_, j) in enumerate(self.terms)):
            return False
        if any(x <= y for x, y in zip(tops, tops[1:])):
            return False
        return bool(tops) and tops[-1] > self.k - self.t

    def as_lists(self) -> list[list[int]]:
        return [[a, j] for a, j in self.terms]


def cascade(m: int, k: int) -> CascadeRep:
    """Greedy k-cascade of ``m``.

    Each step takes the largest ``a`` with ``binom(a, j) <= remainder`` and
    stops when the remainder hits zero.
    """
    if m <= 0:
        raise ValueError(f"cascade requires m >= 1, got {m}")
    if k <= 0:
        raise ValueError(f"cascade requires k >= 1, got {k}")
    terms: list[tuple[int, int]] = []
    rest = m
    j = k
    while rest > 0:
        if j == 0:
            # cannot happen for m >= 1: binom(a, 1) = a absorbs any remainder
            raise AssertionError("cascade exhausted levels with remainder left")
        a = j
        while binom(a + 1, j) <= rest:
            a += 1
        terms.append((a, j))
        rest -= binom(a, j)
        j -= 1
    return CascadeRep(k=k, terms=tuple(terms))


def cascade_shadow_bound(m: int, k: int, ell: int) -> int:
    """Size of the ``ell``-shadow of the first ``m`` k-sets in colex order.

    Equals ``sum binom(a_i, ell - i + 1)`` over the k-cascade of ``m``.
    """
    if not 1 <= ell < k:
        raise ValueError(f"need 1 <= ell < k, got ell={ell}, k={k}")
    if m <= 0:
        return 0
    rep = cascade(m, k)
    return sum(binom(a, ell - i) for i, (a, _) in enumerate(rep.terms))


def real_binom(x: float, k: int) -> float:
    """Falling-factorial binomial ``x(x-1)...(x-k+1)/k!`` for real ``x >= k-1``."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if x < k - 1:
        raise ValueError(f"real_binom needs x >= k-1, got x={x}, k={k}")
    prod = 1.0
    for i in range(k):
        prod *= (x - i)
    return prod / math.factorial(k)


def inv_real_binom(m: int, k: int, rel_tol: float = 1e-12) -> float:
    """The unique ``x >= k`` with ``real_binom(x, k) == m``, by bisection on ``[k, k+m]``."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    lo, hi = float(k), float(k + m)
    if m == 1:
        return lo
    target = float(m)
    while hi - lo > rel_tol * hi:
        mid = 0.5 * (lo + hi)
        if real_binom(mid, k) < target:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def ratio_equiv_check(a: int, b: int, c: int, d: int) -> bool:
    """True iff ``(c-a)(d+b) <= cd`` and ``c/(d+b) <= a/b`` agree, compared exactly."""
    if min(a, b, c, d) <= 0:
        raise ValueError("ratio_equiv_check needs positive inputs")
    left = (c - a) * (d + b) <= c * d
    right = Fraction(c, d + b) <= Fraction(a, b)
    return left == right
