"""Bound formulas for cross-intersecting products, evaluated exactly.

Every bound checks its theorem's hypotheses first.  Outside them the report
carries ``hypotheses_met=False`` and no value: these bounds are false outside
their ranges, so extrapolating would be a bug.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping

from .exactmath import binom

__all__ = [
    "THEOREMS",
    "BoundReport",
    "HypothesisError",
    "bound",
    "theorem_params",
    "gamma",
    "main1_value",
    "main2_value",
    "mors2_thresholds",
    "PhiEval",
    "gen_binom",
    "phi",
    "phi_second",
    "proposition_window",
]


class HypothesisError(ValueError):
    """Parameters fall outside the hypotheses of the requested statement."""


@dataclass(frozen=True)
class BoundReport:
    theorem_id: str
    params: dict[str, int]
    hypotheses_met: bool
    value: int | tuple[int, int] | None = None
    note: str = ""

    def to_dict(self) -> dict:
        if isinstance(self.value, tuple):
            value: object = [str(v) for v in self.value]
        elif self.value is None:
            value = None
        else:
            value = str(self.value)
        out = {"theorem": self.theorem_id, "params": dict(self.params),
               "hypotheses_met": self.hypotheses_met, "value": value}
        if self.note:
            out["note"] = self.note
        return out


def _c(n: int, k: int) -> int:
    return binom(n, k)


def main1_value(n: int, k: int, ell: int) -> int:
    return (_c(n - 1, k - 1) + _c(n - 2, k - 1)) * _c(n - 2, ell - 2)


def main2_value(n: int, k: int, ell: int) -> int:
    return (_c(n - 1, k - 1) + 1) * (_c(n - 1, ell - 1) - _c(n - k - 1, ell - 1))


def mors2_thresholds(n: int, k: int, ell: int) -> tuple[int, int]:
    """Size thresholds of the nontrivial dichotomy: ``|A| <= first`` or ``|B| <= second``."""
    return (_c(n - 1, k - 1) - _c(n - ell - 1, k - 1) + 1,
            _c(n - 1, ell - 1) - _c(n - k - 1, ell - 1) + 1)


def _main_range(n: int, k: int, ell: int) -> bool:
    return k > 0 and ((n >= 2 * ell and ell > k) or (n > 2 * ell and ell == k))


# Each entry: (parameter names, hypothesis predicate, value function)
_Spec = tuple[tuple[str, ...], Callable[..., bool], Callable[..., object]]


def _theo3_value(n: int, k: int, ell: int, r: int, s: int) -> int:
    head = sum(_c(n - i, ell - 1) for i in range(1, r + 1))
    return (_c(n - r, k - r) - _c(n - r - s, k - r)) * (head + _c(n - r - s, ell - s))


def _prop1(n: int, k: int, ell: int, s: int) -> int:
    return (_c(n - 1, k - 1) + _c(n - s - 1, k - s)) * (_c(n - 1, ell - 1) - _c(n - s - 1, ell - 1))


def _prop2(n: int, k: int, ell: int) -> int:
    return (_c(n - 1, k - 1) + _c(n - 3, k - 2)) * (_c(n - 1, ell - 1) - _c(n - 3, ell - 1))


def _prop3(n: int, k: int, ell: int) -> int:
    a = _c(n - 1, k - 1) + _c(n - 3, k - 2) + _c(n - 4, k - 2)
    return a * (_c(n - 2, ell - 2) + _c(n - 4, ell - 3))


def _prop4(n: int, k: int, ell: int) -> int:
    return main1_value(n, k, ell)


def _prop5(n: int, k: int, ell: int, s: int) -> int:
    return sum(_c(n - i, k - 1) for i in range(1, s + 1)) * _c(n - s, ell - s)


_POS = lambda *xs: all(x > 0 for x in xs)  # noqa: E731

_SPECS: dict[str, _Spec] = {
    "EKR": (("n", "k"), lambda n, k: _POS(n, k) and n >= 2 * k,
            lambda n, k: _c(n - 1, k - 1)),
    "PYBER1": (("n", "k"), lambda n, k: _POS(n, k) and n >= 2 * k,
               lambda n, k: _c(n - 1, k - 1) ** 2),
    "PYBER2": (("n", "k", "ell"), lambda n, k, ell: _POS(n, k, ell) and k > ell and n >= 2 * k + ell - 2,
               lambda n, k, ell: _c(n - 1, k - 1) * _c(n - 1, ell - 1)),
    "MT": (("n", "k", "ell"), lambda n, k, ell: _POS(n, k, ell) and n >= 2 * ell >= 2 * k,
           lambda n, k, ell: _c(n - 1, k - 1) * _c(n - 1, ell - 1)),
    "FKWX": (("n", "k"), lambda n, k: _POS(n, k) and n >= 2 * k + 1,
             lambda n, k: (_c(n - 1, k - 1) - _c(n - k - 1, k - 1)) * (_c(n - 1, k - 1) + 1)),
    "MAIN1": (("n", "k", "ell"), _main_range, main1_value),
    "MAIN2": (("n", "k", "ell"), lambda n, k, ell: _main_range(n, k, ell), main2_value),
    "GAMMA": (("n", "k", "ell"), lambda n, k, ell: _POS(n, k, ell) and n >= k + ell,
              lambda n, k, ell: max(main1_value(n, k, ell), main2_value(n, k, ell))),
    "MORS2": (("n", "k", "ell"), lambda n, k, ell: _POS(n, k, ell) and n >= k + ell, mors2_thresholds),
    "THEO3": (("n", "k", "ell", "r", "s"),
              lambda n, k, ell, r, s: _POS(n, k, ell) and ell >= k and n >= k + ell and r >= 1 and 2 <= s <= ell,
              _theo3_value),
    "CTHEO3": (("n", "k", "ell"), lambda n, k, ell: _POS(n, k, ell) and ell >= k and n >= k + ell,
               lambda n, k, ell: (_c(n - 1, k - 1) - _c(n - ell - 1, k - 1)) * (_c(n - 1, ell - 1) + 1)),
    "FK": (("n", "k", "i"), lambda n, k, i: _POS(n, k) and n > 2 * k and 3 <= i <= k + 1,
           lambda n, k, i: (_c(n - 1, k - 1) + _c(n - i, k - i + 1)) * (_c(n - 1, k - 1) - _c(n - i, k - 1))),
    "PROP1": (("n", "k", "ell", "s"), lambda n, k, ell, s: _POS(k) and n >= 2 * ell >= 2 * k and 3 <= s <= k,
              _prop1),
    "PROP2": (("n", "k", "ell"), lambda n, k, ell: _POS(k) and n >= 2 * ell > 2 * k, _prop2),
    "PROP3": (("n", "k", "ell"), lambda n, k, ell: _POS(n, k) and n < ell * ell and ell >= k, _prop3),
    "PROP4": (("n", "k", "ell"), lambda n, k, ell: _POS(k) and n >= 2 * ell > 2 * k, _prop4),
    "PROP5": (("n", "k", "ell", "s"), lambda n, k, ell, s: _POS(k) and n >= 2 * ell > 2 * k and s >= 2, _prop5),
}

THEOREMS: tuple[str, ...] = tuple(_SPECS)


def bound(theorem_id: str, params: Mapping[str, int]) -> BoundReport:
    """Evaluate a named bound; hypothesis violations are flagged, not raised."""
    theorem_id = theorem_id.upper()
    if theorem_id not in _SPECS:
        raise KeyError(f"unknown theorem {theorem_id!r}; known: {', '.join(THEOREMS)}")
    names, hyp, fn = _SPECS[theorem_id]
    missing = [p for p in names if p not in params]
    if missing:
        raise ValueError(f"{theorem_id} needs parameters {names}, missing {missing}")
    args = [int(params[p]) for p in names]
    kept = dict(zip(names, args))
    if not hyp(*args):
        return BoundReport(theorem_id, kept, False)
    return BoundReport(theorem_id, kept, True, fn(*args))


def theorem_params(theorem_id: str) -> tuple[str, ...]:
    return _SPECS[theorem_id.upper()][0]


def gamma(n: int, k: int, ell: int) -> int:
    """Larger of the two candidate products of the nontrivial problem."""
    if min(k, ell) < 1 or n < k + ell:
        raise HypothesisError(f"gamma needs n >= k + ell with k, ell >= 1; got ({n}, {k}, {ell})")
    return max(main1_value(n, k, ell), main2_value(n, k, ell))


def proposition_window(prop: str, n: int, k: int, ell: int, s: int | None = None) -> tuple[int, int]:
    """Size range of ``|A|`` covered by a size-sensitive proposition (inclusive)."""
    base = _c(n - 1, k - 1)
    prop = prop.upper()
    if prop == "PROP1":
        return base + _c(n - s - 1, k - s), base + _c(n - 3, k - 2)
    if prop == "PROP2":
        return base + _c(n - 3, k - 2), base + _c(n - 3, k - 2) + _c(n - 4, k - 2)
    if prop == "PROP3":
        return (base + sum(_c(n - i, k - 2) for i in (3, 4)),
                base + sum(_c(n - i, k - 2) for i in (3, 4, 5)))
    if prop == "PROP4":
        return base + sum(_c(n - i, k - 2) for i in range(3, ell + 2)), base + _c(n - 2, k - 1)
    if prop == "PROP5":
        return sum(_c(n - i, k - 1) for i in range(1, s + 1)), _c(n, k)
    raise KeyError(prop)


# -- the comparison polynomial ----------------------------------------------


@dataclass(frozen=True)
class PhiEval:
    n: int
    k: int
    ell: int
    x: Fraction
    value: Fraction
    exact: bool = field(default=True)


def gen_binom(x: Fraction | int, j: int) -> Fraction:
    """Generalised binomial.  Integer ``x`` follows the zero convention of :func:`binom`."""
    if j < 0:
        return Fraction(0)
    x = Fraction(x)
    if x.denominator == 1:
        return Fraction(binom(int(x), j)) if x >= 0 else _falling(x, j)
    if x < j - 1:
        raise HypothesisError(f"generalised binomial undefined for x={x} < {j - 1}")
    return _falling(x, j)


def _falling(x: Fraction, j: int) -> Fraction:
    prod = Fraction(1)
    for i in range(j):
        prod *= x - i
    for i in range(2, j + 1):
        prod /= i
    return prod


def phi(n: int, k: int, ell: int, x: Fraction | int) -> PhiEval:
    """``(C(n-1,k-1)+C(n-2,k-1)) (C(n-2,ell-2) + C(x,n-ell-1)) - C(n-2,ell-2) C(x,k-1)``."""
    x = Fraction(x)
    if x < 0:
        raise HypothesisError(f"phi needs x >= 0, got {x}")
    lead = _c(n - 1, k - 1) + _c(n - 2, k - 1)
    mid = _c(n - 2, ell - 2)
    value = lead * (mid + gen_binom(x, n - ell - 1)) - mid * gen_binom(x, k - 1)
    return PhiEval(n, k, ell, x, value)


def _pair_sum(x: Fraction, j: int) -> Fraction:
    # 1/(x(x-1)) + 1/((x-1)(x-2)) + ... + 1/((x-j+2)(x-j+1))
    total = Fraction(0)
    for i in range(j - 1):
        den = (x - i) * (x - i - 1)
        if den == 0:
            raise HypothesisError(f"phi'' undefined at x={x}")
        total += 1 / den
    return total


def phi_second(n: int, k: int, ell: int, x: Fraction | int) -> Fraction:
    """Consecutive-pair harmonic expression used as the second derivative of ``phi``."""
    x = Fraction(x)
    lead = _c(n - 1, k - 1) + _c(n - 2, k - 1)
    j1, j2 = n - ell - 1, k - 1
    return (lead * gen_binom(x, j1) * _pair_sum(x, j1)
            - _c(n - 2, ell - 2) * gen_binom(x, j2) * _pair_sum(x, j2))
