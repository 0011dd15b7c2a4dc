import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from xfam.setfamily import (
    CapExceeded,
    Family,
    all_sets,
    canonical_form,
    colex_order_iter,
    colex_segment,
    common_intersection,
    complement_family,
    dual,
    from_elements,
    is_cross_intersecting,
    is_maximal_pair,
    isomorphic,
    lex_compress_pair,
    lex_order_iter,
    lex_segment,
    pair_canonical_key,
    shadow,
    to_elements,
)

import refimpl as ref


def fs(family: Family) -> set[frozenset]:
    return {frozenset(s) for s in family.sets()}


def star(n, k, x=1):
    return Family.from_sets(n, k, [s for s in ref.ksets(n, k) if x in s])


def test_bit_encoding():
    assert from_elements([1, 3]) == 0b101
    assert to_elements(0b10110) == (2, 3, 5)


def test_lex_order_example():
    got = ["".join(map(str, to_elements(m))) for m in lex_order_iter(4, 2)]
    assert got == ["12", "13", "14", "23", "24", "34"]


def test_colex_first_five_from_the_text():
    got = [set(to_elements(m)) for m in list(colex_order_iter(6, 3))[:5]]
    assert got == [{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}, {1, 2, 5}]


def test_k_zero_orders():
    assert list(lex_order_iter(4, 0)) == [0]
    assert list(colex_order_iter(4, 0)) == [0]


def test_orders_agree_with_reference():
    for n in range(1, 9):
        for k in range(0, n + 1):
            lex = [frozenset(to_elements(m)) for m in lex_order_iter(n, k)]
            assert lex == ref.ksets(n, k)
            colex = [frozenset(to_elements(m)) for m in colex_order_iter(n, k)]
            assert colex == sorted(ref.ksets(n, k), key=ref.colex_key)


def test_lex_segment_star():
    seg = lex_segment(10, 3, ref.C(9, 2))
    assert fs(seg) == {s for s in ref.ksets(10, 3) if 1 in s}


@pytest.mark.parametrize("n", [5, 6, 9])
def test_colex_segment_same_for_any_n(n):
    assert fs(colex_segment(n, 3, 5)) == {frozenset(s) for s in ({1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}, {1, 2, 5})}


def test_segments_empty_and_range():
    assert len(lex_segment(6, 3, 0)) == 0
    assert len(colex_segment(6, 3, 0)) == 0
    with pytest.raises(ValueError):
        lex_segment(5, 2, 11)
    with pytest.raises(ValueError):
        colex_segment(5, 2, -1)


def test_shadow_examples():
    assert len(shadow(colex_segment(5, 3, 5), 2)) == 8
    assert len(shadow(Family(5, 3, ()), 2)) == 0
    assert fs(shadow(all_sets(5, 3), 2)) == set(ref.ksets(5, 2))
    with pytest.raises(ValueError):
        shadow(all_sets(5, 3), 3)


def test_shadow_matches_reference_random():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(3, 9)
        k = rng.randint(2, n)
        pool = ref.ksets(n, k)
        F = rng.sample(pool, rng.randint(0, len(pool)))
        ell = rng.randint(1, k - 1)
        assert fs(shadow(Family.from_sets(n, k, F), ell)) == ref.shadow(F, ell)


def test_complement_examples():
    for n, k in [(6, 2), (7, 3)]:
        c = complement_family(star(n, k))
        assert c.k == n - k
        assert fs(c) == {s for s in ref.ksets(n, n - k) if 1 not in s}
    assert len(complement_family(Family(5, 2, ()))) == 0
    rng = random.Random(3)
    for _ in range(50):
        F = Family.from_sets(8, 3, rng.sample(ref.ksets(8, 3), 10))
        assert complement_family(complement_family(F)) == F


def test_cross_intersecting_examples():
    assert is_cross_intersecting(star(6, 2), star(6, 3))
    assert not is_cross_intersecting(Family.from_sets(4, 2, [[1, 2]]), Family.from_sets(4, 2, [[3, 4]]))
    from xfam.constructions import family_lower, family_upper
    assert is_cross_intersecting(family_upper(7, 2, 1, 2), family_lower(7, 3, 1, 2))
    with pytest.raises(ValueError):
        is_cross_intersecting(star(5, 2), star(6, 2))


def test_common_intersection_examples():
    from xfam.constructions import extremal_main_2
    assert common_intersection([star(6, 3)]) == 0b1
    A, B = extremal_main_2(7, 2, 3)
    assert common_intersection([A, B]) == 0
    assert common_intersection([Family.from_sets(6, 1, [[5]])]) == from_elements([5])
    with pytest.raises(ValueError):
        common_intersection([Family(5, 2, ())])


def test_dual_examples():
    assert dual(Family(6, 2, ()), 3) == all_sets(6, 3)
    assert len(dual(all_sets(7, 3), 4)) == 0
    assert fs(dual(star(6, 2), 3)) == fs(star(6, 3))


def test_dual_cap():
    with pytest.raises(CapExceeded):
        dual(star(20, 2), 10, cap=1000)


def test_dual_matches_reference_random():
    rng = random.Random(11)
    for _ in range(100):
        n = rng.randint(3, 8)
        k, ell = rng.randint(1, n - 1), rng.randint(1, n - 1)
        A = rng.sample(ref.ksets(n, k), rng.randint(0, min(6, ref.C(n, k))))
        assert fs(dual(Family.from_sets(n, k, A), ell)) == ref.dual(A, n, ell)


def test_maximal_pair_examples():
    from xfam.constructions import family_lower, family_upper
    assert is_maximal_pair(star(7, 2), star(7, 3))
    assert is_maximal_pair(family_lower(9, 3, 1, 2), family_upper(9, 4, 1, 2))
    assert not is_maximal_pair(Family(6, 2, ()), star(6, 3))


def test_lex_compress_examples():
    A, B = lex_segment(7, 2, 6), lex_segment(7, 3, 15)
    assert lex_compress_pair(A, B) == (A, B)
    e = (Family(5, 2, ()), Family(5, 2, ()))
    assert lex_compress_pair(*e) == e
    with pytest.raises(ValueError):
        lex_compress_pair(Family.from_sets(4, 2, [[1, 2]]), Family.from_sets(4, 2, [[3, 4]]))


def test_isomorphism_examples():
    assert isomorphic(star(6, 2, 1), star(6, 2, 3))
    star4 = Family.from_sets(4, 2, [[1, 2], [1, 3], [1, 4]])
    tri = Family.from_sets(4, 2, [[1, 2], [1, 3], [2, 3]])
    assert not isomorphic(star4, tri)
    F = Family.from_sets(6, 3, [[2, 4, 6], [1, 5, 6], [3, 4, 5]])
    assert isomorphic(F, canonical_form(F))
    with pytest.raises(ValueError):
        canonical_form(star(10, 2))


def test_isomorphism_agrees_with_reference():
    rng = random.Random(5)
    for _ in range(40):
        n = rng.randint(3, 6)
        k = rng.randint(1, n - 1)
        pool = ref.ksets(n, k)
        F = rng.sample(pool, rng.randint(1, min(5, len(pool))))
        G = rng.sample(pool, len(F))
        want = ref.pair_isomorphic((F, []), (G, []), n)
        assert isomorphic(Family.from_sets(n, k, F), Family.from_sets(n, k, G)) == want


def test_pair_key_symmetric_when_levels_agree():
    A = Family.from_sets(5, 2, [[1, 2], [1, 3]])
    B = star(5, 2).union(Family.from_sets(5, 2, [[2, 3]]))
    assert pair_canonical_key(A, B) == pair_canonical_key(B, A)
    assert pair_canonical_key(A, B, symmetric=False) != pair_canonical_key(B, A, symmetric=False)


def test_json_round_trip_and_validation():
    F = Family.from_sets(6, 3, [[1, 2, 3], [2, 4, 6]])
    assert Family.from_json(F.to_json()) == F
    assert json.loads(F.to_json()) == {"n": 6, "k": 3, "sets": [[1, 2, 3], [2, 4, 6]]}
    for bad in ({"n": 6, "k": 3, "sets": [[3, 2, 1]]}, {"n": 6, "k": 3, "sets": [[1, 2]]},
                {"n": 6, "sets": []}, {"n": 4, "k": 2, "sets": [[1, 7]]}):
        with pytest.raises(ValueError):
            Family.from_dict(bad)


def test_family_rejects_bad_members():
    with pytest.raises(ValueError):
        Family(4, 2, (0b111,))
    with pytest.raises(ValueError):
        Family(31, 2, ())


def test_dual_of_lex_segment_is_lex_segment():
    # observed, not assumed by the library
    for n in range(2, 11):
        for k in range(1, n):
            for ell in range(1, n):
                if ref.C(n, k) * ref.C(n, ell) > 60000:
                    continue
                for m in range(ref.C(n, k) + 1):
                    d = dual(lex_segment(n, k, m), ell)
                    assert d == lex_segment(n, ell, len(d))


@st.composite
def families(draw, max_n=8):
    n = draw(st.integers(2, max_n))
    k = draw(st.integers(1, n - 1))
    pool = ref.ksets(n, k)
    picks = draw(st.lists(st.sampled_from(pool), max_size=8, unique=True))
    return Family.from_sets(n, k, picks)


@given(families(), st.integers(1, 7))
@settings(max_examples=150)
def test_triple_dual(A, ell):
    ell = min(ell, A.n - 1)
    B = dual(A, ell)
    assert dual(dual(B, A.k), ell) == B
