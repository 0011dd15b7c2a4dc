"""Named families and the extremal / sharpness constructions.

``family_upper(n, u, r, s)`` is the family of u-sets meeting ``[r]`` or
containing ``[r+1, r+s]``; ``family_lower(n, u, r, s)`` holds u-sets containing
``[r]`` and meeting ``[r+1, r+s]``.  The slices split the differences between
consecutive ``s`` into pieces that the Kneser-graph arguments work on.
"""

from __future__ import annotations

from typing import Callable

from .exactmath import binom
from .setfamily import DEFAULT_ENUM_CAP, Family, all_sets, from_elements, lex_segment

__all__ = [
    "interval",
    "family_upper",
    "family_lower",
    "size_upper",
    "size_lower",
    "slice_lower",
    "slice_upper",
    "upper_slices",
    "lower_slices",
    "star",
    "extremal_MT",
    "extremal_main_1",
    "extremal_main_2",
    "extremal_FKWX",
    "sharpness_case1",
    "sharpness_case2",
    "CONSTRUCTIONS",
]


def interval(a: int, b: int) -> int:
    """Mask of ``[a, b]``; empty when ``a > b``."""
    if a > b:
        return 0
    return from_elements(range(a, b + 1))


def _filter(n: int, u: int, pred: Callable[[int], bool], cap: int = DEFAULT_ENUM_CAP) -> Family:
    return Family(n, u, tuple(m for m in all_sets(n, u, cap).members if pred(m)))


def _check_params(n: int, u: int, r: int, s: int) -> None:
    if r < 0 or s < 0 or r > u or s > u or u >= n:
        raise ValueError(f"need r, s <= u < n with r, s >= 0; got n={n}, u={u}, r={r}, s={s}")


def family_upper(n: int, u: int, r: int, s: int) -> Family:
    _check_params(n, u, r, s)
    head, window = interval(1, r), interval(r + 1, r + s)
    return _filter(n, u, lambda m: bool(m & head) or (m & window) == window)


def family_lower(n: int, u: int, r: int, s: int) -> Family:
    _check_params(n, u, r, s)
    head, window = interval(1, r), interval(r + 1, r + s)
    return _filter(n, u, lambda m: (m & head) == head and bool(m & window))


def size_upper(n: int, u: int, r: int, s: int) -> int:
    _check_params(n, u, r, s)
    return sum(binom(n - i, u - 1) for i in range(1, r + 1)) + binom(n - r - s, u - s)


def size_lower(n: int, u: int, r: int, s: int) -> int:
    _check_params(n, u, r, s)
    # the window is truncated at n
    return binom(n - r, u - r) - binom(max(n - r - s, 0), u - r)


def slice_lower(n: int, k: int, r: int, s: int, i: int) -> Family:
    """k-sets containing ``[r]`` whose trace on ``[r+1, r+s+i]`` is exactly ``[r+s, r+s+i-1]``."""
    if r < 0 or s < 1 or i < 1 or k >= n:
        raise ValueError(f"bad slice parameters n={n}, k={k}, r={r}, s={s}, i={i}")
    head = interval(1, r)
    window = interval(r + 1, r + s + i) & ((1 << n) - 1)
    trace = interval(r + s, r + s + i - 1) & ((1 << n) - 1)
    if r + s + i - 1 > n:
        return Family(n, k, ())
    return _filter(n, k, lambda m: (m & head) == head and (m & window) == trace)


def slice_upper(n: int, ell: int, r: int, s: int, j: int) -> Family:
    """The j-th slice of ``family_upper(n, ell, r, s-1) - family_upper(n, ell, r, s)``.

    ell-sets avoiding ``[r]`` whose trace on ``[r+1, r+s+j]`` is
    ``[r+1, r+s-1]`` plus the single element ``r+s+j``.
    """
    if r < 0 or s < 1 or j < 1 or ell >= n:
        raise ValueError(f"bad slice parameters n={n}, ell={ell}, r={r}, s={s}, j={j}")
    if r + s + j > n:
        return Family(n, ell, ())
    head = interval(1, r)
    window = interval(r + 1, r + s + j)
    trace = interval(r + 1, r + s - 1) | (1 << (r + s + j - 1))
    return _filter(n, ell, lambda m: not (m & head) and (m & window) == trace)


def lower_slices(n: int, k: int, r: int, s: int) -> list[Family]:
    """Slices ``i = 1 .. k-r``."""
    return [slice_lower(n, k, r, s, i) for i in range(1, k - r + 1)]


def upper_slices(n: int, ell: int, r: int, s: int) -> list[Family]:
    """Slices ``j = 1, 2, ...`` up to the last nonempty one."""
    out = []
    for j in range(1, n + 1):
        sl = slice_upper(n, ell, r, s, j)
        if not len(sl):
            break
        out.append(sl)
    return out


def star(n: int, u: int, x: int) -> Family:
    if not 1 <= x <= n:
        raise ValueError(f"element {x} outside [1, {n}]")
    bit = 1 << (x - 1)
    return _filter(n, u, lambda m: bool(m & bit))


def extremal_MT(n: int, k: int, ell: int, x: int = 1) -> tuple[Family, Family]:
    """Both stars at ``x``."""
    return star(n, k, x), star(n, ell, x)


def _check_main(n: int, k: int, ell: int) -> None:
    if min(k, ell) < 1 or n < k + ell:
        raise ValueError(f"need k, ell >= 1 and n >= k + ell; got n={n}, k={k}, ell={ell}")


def extremal_main_1(n: int, k: int, ell: int) -> tuple[Family, Family]:
    """A: k-sets meeting {1, 2};  B: ell-sets containing {1, 2}."""
    _check_main(n, k, ell)
    if ell < 2:
        raise ValueError("case 1 needs ell >= 2")
    two = 0b11
    A = _filter(n, k, lambda m: bool(m & two))
    B = _filter(n, ell, lambda m: (m & two) == two)
    return A, B


def extremal_main_2(n: int, k: int, ell: int) -> tuple[Family, Family]:
    """A: star at 1 plus ``[2, k+1]``;  B: ell-sets through 1 meeting ``[2, k+1]``."""
    _check_main(n, k, ell)
    D = interval(2, k + 1)
    A = Family.from_masks(n, k, set(star(n, k, 1).members) | {D})
    B = _filter(n, ell, lambda m: bool(m & 1) and bool(m & D))
    return A, B


def extremal_FKWX(n: int, k: int, x: int = 1, D: tuple[int, ...] | None = None) -> tuple[Family, Family]:
    """A: k-sets through ``x`` meeting ``D``;  B: star at ``x`` plus ``D``."""
    if n < 2 * k + 1 or k < 1:
        raise ValueError(f"need n >= 2k + 1, got n={n}, k={k}")
    if D is None:
        D = tuple(e for e in range(1, n + 1) if e != x)[:k]
    dmask = from_elements(D)
    xbit = 1 << (x - 1)
    if len(set(D)) != k or dmask & xbit or any(not 1 <= e <= n for e in D):
        raise ValueError(f"D must be a {k}-subset of [{n}] avoiding {x}")
    A = _filter(n, k, lambda m: bool(m & xbit) and bool(m & dmask))
    B = Family.from_masks(n, k, set(star(n, k, x).members) | {dmask})
    return A, B


def sharpness_case1(ell: int) -> tuple[Family, Family]:
    """``n = 2 ell - 1``, ``k = ell - 1``: half of the (ell-1)-sets against the complements they miss."""
    if ell < 2:
        raise ValueError("sharpness case 1 needs ell >= 2")
    n, k = 2 * ell - 1, ell - 1
    A = lex_segment(n, k, binom(n, k) // 2)
    full = (1 << n) - 1
    B = _filter(n, ell, lambda m: (full ^ m) not in A)
    return A, B


def sharpness_case2(k: int) -> tuple[Family, Family]:
    """``n = 2k``: star at 1 plus ``[2, k+1]`` minus ``{1, k+2, ..., 2k}``, used on both sides."""
    if k < 2:
        raise ValueError("sharpness case 2 needs k >= 2")
    n = 2 * k
    members = set(star(n, k, 1).members) | {interval(2, k + 1)}
    members.discard(1 | interval(k + 2, 2 * k))
    F = Family.from_masks(n, k, members)
    return F, F


# name -> (callable, parameter names); used by the CLI
CONSTRUCTIONS: dict[str, tuple[Callable, tuple[str, ...]]] = {
    "upper": (family_upper, ("n", "u", "r", "s")),
    "lower": (family_lower, ("n", "u", "r", "s")),
    "slice-lower": (slice_lower, ("n", "k", "r", "s", "i")),
    "slice-upper": (slice_upper, ("n", "ell", "r", "s", "j")),
    "star": (star, ("n", "u", "x")),
    "mt": (extremal_MT, ("n", "k", "ell", "x")),
    "main1": (extremal_main_1, ("n", "k", "ell")),
    "main2": (extremal_main_2, ("n", "k", "ell")),
    "fkwx": (extremal_FKWX, ("n", "k", "x")),
    "sharp1": (sharpness_case1, ("ell",)),
    "sharp2": (sharpness_case2, ("k",)),
}
