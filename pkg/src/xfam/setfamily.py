"""k-subsets of ``[n]`` as bitmasks, families, orders, shadows, duals and isomorphism.

Element ``i`` of ``[n]`` is bit ``i - 1``.  A :class:`Family` stores its
members sorted by lex rank and is never mutated after construction.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Sequence

import numpy as np

from .exactmath import binom

__all__ = [
    "MAX_N",
    "DEFAULT_ENUM_CAP",
    "MAX_ISO_N",
    "CapExceeded",
    "Family",
    "to_elements",
    "from_elements",
    "lex_order_iter",
    "colex_order_iter",
    "lex_segment",
    "colex_segment",
    "all_sets",
    "shadow",
    "complement_family",
    "is_cross_intersecting",
    "common_intersection",
    "dual",
    "is_maximal_pair",
    "lex_compress_pair",
    "canonical_form",
    "isomorphic",
    "canonical_key",
    "pair_canonical_key",
]

MAX_N = 30
DEFAULT_ENUM_CAP = 500_000
MAX_ISO_N = 9


class CapExceeded(ValueError):
    """An enumeration would exceed the configured size cap."""


def to_elements(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def from_elements(elements: Iterable[int]) -> int:
    mask = 0
    for e in elements:
        mask |= 1 << (e - 1)
    return mask


def _check_nk(n: int, k: int) -> None:
    if not 1 <= n <= MAX_N:
        raise ValueError(f"n must be in [1, {MAX_N}], got {n}")
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")


def _check_cap(n: int, k: int, cap: int) -> None:
    if binom(n, k) > cap:
        raise CapExceeded(f"binom({n},{k}) = {binom(n, k)} exceeds enumeration cap {cap}")


@lru_cache(maxsize=None)
def _lex_list(n: int, k: int) -> tuple[int, ...]:
    return tuple(sum(1 << (e - 1) for e in c) for c in itertools.combinations(range(1, n + 1), k))


@lru_cache(maxsize=None)
def _lex_rank(n: int, k: int) -> dict[int, int]:
    return {m: i for i, m in enumerate(_lex_list(n, k))}


@lru_cache(maxsize=None)
def _colex_list(n: int, k: int) -> tuple[int, ...]:
    # colex on equal-size sets is numeric order of the masks
    return tuple(sorted(_lex_list(n, k)))


@dataclass(frozen=True)
class Family:
    """A family of k-subsets of ``[n]``; ``members`` are masks in ascending lex rank."""

    n: int
    k: int
    members: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_nk(self.n, self.k)
        full = (1 << self.n) - 1
        for m in self.members:
            if m & ~full or m.bit_count() != self.k:
                raise ValueError(f"{to_elements(m)} is not a {self.k}-subset of [{self.n}]")
        if len(set(self.members)) != len(self.members):
            raise ValueError("duplicate members")

    @classmethod
    def from_masks(cls, n: int, k: int, masks: Iterable[int]) -> "Family":
        masks = set(masks)
        if not masks:
            return cls(n, k, ())
        _check_nk(n, k)
        if n <= 20 and binom(n, k) <= DEFAULT_ENUM_CAP:
            rank = _lex_rank(n, k)
            try:
                return cls(n, k, tuple(sorted(masks, key=rank.__getitem__)))
            except KeyError:
                pass  # invalid member, let __post_init__ report it
        return cls(n, k, tuple(sorted(masks, key=to_elements)))

    @classmethod
    def from_sets(cls, n: int, k: int, sets: Iterable[Iterable[int]]) -> "Family":
        masks = []
        for s in sets:
            s = list(s)
            if any(not 1 <= e <= n for e in s) or len(set(s)) != len(s):
                raise ValueError(f"{s} is not a subset of [{n}]")
            masks.append(from_elements(s))
        return cls.from_masks(n, k, masks)

    @cached_property
    def mask_set(self) -> frozenset[int]:
        return frozenset(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __contains__(self, mask: object) -> bool:
        return mask in self.mask_set

    def sets(self) -> list[list[int]]:
        return [list(to_elements(m)) for m in self.members]

    def union(self, other: "Family") -> "Family":
        self._same_space(other)
        return Family.from_masks(self.n, self.k, self.mask_set | other.mask_set)

    def difference(self, other: "Family") -> "Family":
        self._same_space(other)
        return Family.from_masks(self.n, self.k, self.mask_set - other.mask_set)

    def _same_space(self, other: "Family") -> None:
        if (self.n, self.k) != (other.n, other.k):
            raise ValueError("families live in different spaces")

    def to_dict(self) -> dict:
        return {"n": self.n, "k": self.k, "sets": self.sets()}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "Family":
        try:
            n, k, sets = int(data["n"]), int(data["k"]), data["sets"]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed family object: {exc}") from exc
        for s in sets:
            if list(s) != sorted(set(s)) or len(s) != k:
                raise ValueError(f"set {s} must be strictly increasing with {k} elements")
        return cls.from_sets(n, k, sets)

    @classmethod
    def from_json(cls, text: str) -> "Family":
        return cls.from_dict(json.loads(text))


def lex_order_iter(n: int, k: int) -> Iterator[int]:
    _check_nk(n, k)
    for c in itertools.combinations(range(1, n + 1), k):
        yield from_elements(c)


def colex_order_iter(n: int, k: int) -> Iterator[int]:
    """k-subsets of ``[n]`` in colex order: smallest maximum element first."""
    _check_nk(n, k)
    yield from _colex_gen(n, k)


def _colex_gen(n: int, k: int) -> Iterator[int]:
    if k == 0:
        yield 0
        return
    for top in range(k, n + 1):
        high = 1 << (top - 1)
        for rest in _colex_gen(top - 1, k - 1):
            yield rest | high


def all_sets(n: int, k: int, cap: int = DEFAULT_ENUM_CAP) -> Family:
    _check_nk(n, k)
    _check_cap(n, k, cap)
    return Family(n, k, _lex_list(n, k))


def lex_segment(n: int, k: int, m: int) -> Family:
    """``L(n, k, m)``: the first ``m`` k-sets in lex order."""
    _check_nk(n, k)
    if not 0 <= m <= binom(n, k):
        raise ValueError(f"m={m} outside [0, binom({n},{k})]")
    return Family(n, k, tuple(itertools.islice(lex_order_iter(n, k), m)))


def colex_segment(n: int, k: int, m: int) -> Family:
    """``C^(k)(m)`` inside ``[n]``: the first ``m`` k-sets in colex order."""
    _check_nk(n, k)
    if not 0 <= m <= binom(n, k):
        raise ValueError(f"m={m} outside [0, binom({n},{k})]")
    return Family.from_masks(n, k, itertools.islice(_colex_gen(n, k), m))


def _subsets_of_size(mask: int, ell: int) -> Iterator[int]:
    return (from_elements(c) for c in itertools.combinations(to_elements(mask), ell))


def shadow(F: Family, ell: int) -> Family:
    """``ell``-shadow: every ``ell``-subset of some member."""
    if not 1 <= ell < max(F.k, 1):
        raise ValueError(f"need 1 <= ell < k, got ell={ell}, k={F.k}")
    out: set[int] = set()
    for m in F.members:
        out.update(_subsets_of_size(m, ell))
    return Family.from_masks(F.n, ell, out)


def complement_family(F: Family) -> Family:
    full = (1 << F.n) - 1
    return Family.from_masks(F.n, F.n - F.k, (full ^ m for m in F.members))


def is_cross_intersecting(A: Family, B: Family) -> bool:
    if A.n != B.n:
        raise ValueError(f"ground sets differ: {A.n} vs {B.n}")
    bs = B.members
    return all(a & b for a in A.members for b in bs)


def common_intersection(families: Sequence[Family]) -> int:
    """Bitmask AND over all members of all families."""
    members = [m for F in families for m in F.members]
    if not members:
        raise ValueError("common intersection of an empty union is undefined")
    acc = members[0]
    for m in members[1:]:
        acc &= m
    return acc


def dual(A: Family, ell: int, cap: int = DEFAULT_ENUM_CAP) -> Family:
    """All ``ell``-sets meeting every member of ``A``: the maximal partner of ``A``."""
    _check_nk(A.n, ell)
    _check_cap(A.n, ell, cap)
    members = A.members
    return Family(A.n, ell, tuple(b for b in _lex_list(A.n, ell) if all(b & a for a in members)))


def is_maximal_pair(A: Family, B: Family, cap: int = DEFAULT_ENUM_CAP) -> bool:
    if A.n != B.n:
        raise ValueError(f"ground sets differ: {A.n} vs {B.n}")
    return dual(A, B.k, cap).mask_set == B.mask_set and dual(B, A.k, cap).mask_set == A.mask_set


def lex_compress_pair(A: Family, B: Family) -> tuple[Family, Family]:
    """Replace a cross-intersecting pair by the lex segments of the same sizes."""
    if not is_cross_intersecting(A, B):
        raise ValueError("lex compression needs a cross-intersecting pair")
    return lex_segment(A.n, A.k, len(A)), lex_segment(B.n, B.k, len(B))


# -- isomorphism ------------------------------------------------------------


@lru_cache(maxsize=None)
def _perms(n: int) -> np.ndarray:
    return np.array(list(itertools.permutations(range(n))), dtype=np.int64)


@lru_cache(maxsize=None)
def _rank_table(n: int) -> np.ndarray:
    """Lex rank within its level for every mask of ``[n]``."""
    table = np.zeros(1 << n, dtype=np.int64)
    for k in range(n + 1):
        for i, m in enumerate(_lex_list(n, k)):
            table[m] = i
    return table


def _images(n: int, masks: Sequence[int], perms: np.ndarray) -> np.ndarray:
    """``out[p, j]`` = member ``j`` relabelled by permutation ``p``."""
    out = np.zeros((len(perms), len(masks)), dtype=np.int64)
    for j, m in enumerate(masks):
        for e in to_elements(m):
            out[:, j] |= np.left_shift(1, perms[:, e - 1])
    return out


_CHUNK = 40320


def _best_relabelling(n: int, parts: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]:
    """Lex-minimal relabelling of several families at once.

    Returns the concatenated sorted rank vector and the relabelled member masks
    per part, for the permutation minimising that vector.
    """
    if n > MAX_ISO_N:
        raise ValueError(f"isomorphism search supports n <= {MAX_ISO_N}, got {n}")
    perms = _perms(n)
    ranks = _rank_table(n)
    best_key: tuple[int, ...] | None = None
    best_parts: tuple[tuple[int, ...], ...] = ()
    for start in range(0, len(perms), _CHUNK):
        chunk = perms[start:start + _CHUNK]
        keys, imgs = [], []
        for part in parts:
            img = _images(n, part, chunk)
            order = np.argsort(ranks[img], axis=1, kind="stable")
            img = np.take_along_axis(img, order, axis=1)
            imgs.append(img)
            keys.append(ranks[img])
        if not keys or sum(k.shape[1] for k in keys) == 0:
            return (), tuple(() for _ in parts)
        allkeys = np.concatenate(keys, axis=1)
        idx = int(np.lexsort(allkeys.T[::-1])[0])
        key = tuple(int(v) for v in allkeys[idx])
        if best_key is None or key < best_key:
            best_key = key
            best_parts = tuple(tuple(int(v) for v in img[idx]) for img in imgs)
    return best_key or (), best_parts


def canonical_key(F: Family) -> tuple:
    key, _ = _best_relabelling(F.n, [F.members])
    return (F.n, F.k, len(F), key)


def canonical_form(F: Family) -> Family:
    """The relabelling of ``F`` whose sorted lex-rank vector is smallest."""
    _, (members,) = _best_relabelling(F.n, [F.members])
    return Family(F.n, F.k, members)


def isomorphic(F: Family, G: Family) -> bool:
    if (F.n, F.k, len(F)) != (G.n, G.k, len(G)):
        return False
    return canonical_key(F) == canonical_key(G)


def pair_canonical_key(A: Family, B: Family, symmetric: bool | None = None) -> tuple:
    """Isomorphism key of an ordered pair under simultaneous relabelling.

    With ``symmetric`` (default: when both levels agree) the pair is treated
    as unordered, so ``(A, B)`` and ``(B, A)`` share a key.
    """
    if A.n != B.n:
        raise ValueError("pair lives on different ground sets")
    if symmetric is None:
        symmetric = A.k == B.k
    key, _ = _best_relabelling(A.n, [A.members, B.members])
    k1 = (len(A), len(B), key)
    if symmetric:
        key2, _ = _best_relabelling(A.n, [B.members, A.members])
        k1 = min(k1, (len(B), len(A), key2))
    return (A.n, A.k, B.k) + k1
