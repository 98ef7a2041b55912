import itertools

import pytest
from hypothesis import given, strategies as st

from moonfill.classical import (
    Matching,
    alpha_zero_count,
    all_matchings,
    catalan,
    catalan_by_recurrence,
    coinv,
    crossings,
    endpoint_classes,
    enumerate_matchings,
    ferrers_shape,
    filling_to_word,
    inv,
    inversion_distribution,
    matching_distribution,
    matching_h_vector,
    matching_to_filling,
    mixed_alpha_matching,
    nestings,
    rearrangements,
    rows_to_endpoints,
    word_distribution,
    word_mixed,
    word_to_filling,
)
from moonfill.errors import IndexOutOfRange, InvalidEndpointSets, LetterOutOfRange
from moonfill.fillings import mixed_pair, ne_count, se_count
from moonfill.polyomino import h_vector
from moonfill.pq import pq_binomial, pq_multinomial, product_formula

SAMPLE_MATCHING = Matching(((1, 7), (2, 3), (4, 8), (5, 6)))
KIND_SIDE = {"alpha": "top", "beta": "bottom", "gamma": "left", "delta": "right"}


def all_words(n, m):
    return itertools.product(range(1, m + 1), repeat=n)


def test_word_filling_round_trip():
    F = word_to_filling((1, 1, 2, 3))
    assert F.cols == (3, 2, 1, 1)
    assert filling_to_word(F) == (1, 1, 2, 3)
    assert word_to_filling((2,), m=3).shape.m == 3


def test_inversions():
    assert (inv((2, 1, 3, 1)), coinv((2, 1, 3, 1))) == (3, 2)
    assert inv(()) == coinv(()) == 0


def test_letter_out_of_range():
    with pytest.raises(LetterOutOfRange):
        word_to_filling((1, 4), m=3)
    with pytest.raises(LetterOutOfRange):
        word_to_filling((0, 1))


@pytest.mark.parametrize("n, m", [(1, 2), (2, 2), (3, 2), (3, 3), (4, 3)])
def test_word_statistics_match_fillings(n, m):
    for w in all_words(n, m):
        F = word_to_filling(w, m=m)
        assert (ne_count(F), se_count(F)) == (coinv(w), inv(w))
        for kind, side in KIND_SIDE.items():
            size = n if kind in ("alpha", "beta") else m
            for A in [set(), {1}, set(range(2, size + 1, 2))]:
                assert word_mixed(w, kind, A, m=m) == mixed_pair(F, side, A)[0]


def test_position_subsets_mirror_rows():
    w = (2, 1, 3, 1)
    assert word_mixed(w, "alpha", {1}, by="position") == word_mixed(w, "alpha", {4})
    with pytest.raises(IndexOutOfRange):
        word_mixed(w, "alpha", {5})
    with pytest.raises(ValueError):
        word_mixed(w, "epsilon", set())


@pytest.mark.parametrize("W", [(1, 1, 2, 3), (1, 2, 2), (1, 1, 2, 2), (1, 2, 3, 3, 3)])
def test_word_distributions_are_multinomial(W):
    m = max(W)
    parts = [W.count(k) for k in range(1, m + 1)]
    want = pq_multinomial(len(W), parts)
    assert inversion_distribution(W) == want
    for kind in KIND_SIDE:
        size = len(W) if kind in ("alpha", "beta") else m
        for r in range(size + 1):
            for A in itertools.combinations(range(1, size + 1), r):
                assert word_distribution(W, kind, A) == want


def test_rearrangements_lexicographic():
    assert rearrangements((2, 1, 1)) == [(1, 1, 2), (1, 2, 1), (2, 1, 1)]
    assert word_distribution((1, 1, 2, 2), "alpha", {1}) == pq_binomial(4, 2)


def test_sample_matching_filling():
    pi = SAMPLE_MATCHING
    assert pi.lefts == (1, 2, 4, 5)
    assert pi.rights == (3, 6, 7, 8)
    F = matching_to_filling(pi)
    assert F.shape == ferrers_shape(pi.lefts, pi.rights)
    assert sorted(F.ones) == [(1, 2), (2, 4), (3, 1), (4, 3)]
    assert (crossings(pi), nestings(pi)) == (1, 3)
    assert matching_h_vector(pi.lefts, pi.rights) == (2, 3, 2, 1)


def test_matching_validation():
    with pytest.raises(InvalidEndpointSets):
        Matching(((1, 2), (2, 3)))
    with pytest.raises(InvalidEndpointSets):
        Matching(((2, 1),))
    with pytest.raises(InvalidEndpointSets):
        list(enumerate_matchings((1, 4), (2, 3)))
    with pytest.raises(InvalidEndpointSets):
        list(enumerate_matchings((2, 3), (1, 4)))


def brute_matchings(n):
    """Perfect matchings of [2n] built by pairing the smallest point with every other one."""
    def rec(points):
        if not points:
            yield ()
            return
        a, rest = points[0], points[1:]
        for k, b in enumerate(rest):
            for tail in rec(rest[:k] + rest[k + 1:]):
                yield ((a, b),) + tail
    return [Matching(arcs) for arcs in rec(tuple(range(1, 2 * n + 1)))]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_matchings_and_fillings_agree(n):
    got = list(all_matchings(n))
    assert sorted(p.arcs for p in got) == sorted(p.arcs for p in brute_matchings(n))
    for pi in got:
        F = matching_to_filling(pi)
        assert (ne_count(F), se_count(F)) == (crossings(pi), nestings(pi))
        for r in range(n + 1):
            for rows in itertools.combinations(range(1, n + 1), r):
                S = rows_to_endpoints(pi, rows)
                assert mixed_alpha_matching(pi, S) == mixed_pair(F, "top", rows)[0]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_fillings_determine_matchings(n):
    for A, B in endpoint_classes(n):
        fills = [matching_to_filling(pi) for pi in enumerate_matchings(A, B)]
        assert len(set(fills)) == len(fills)
        M = ferrers_shape(A, B)
        e, s = (1,) * n, (1,) * n
        assert len(fills) == product_formula(M, e, s).evaluate(1, 1)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_matching_distribution_is_product(n):
    for A, B in endpoint_classes(n):
        M = ferrers_shape(A, B)
        want = product_formula(M, (1,) * n, (1,) * n)
        for r in range(n + 1):
            for S in itertools.combinations(A, r):
                assert matching_distribution(A, B, S) == want


def test_matching_h_vector_matches_polyomino():
    for A, B in endpoint_classes(4):
        M = ferrers_shape(A, B)
        assert sorted(matching_h_vector(A, B)) == sorted(h_vector(M, (1,) * 4, (1,) * 4))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_catalan_counts(n):
    assert catalan(n) == catalan_by_recurrence(n)
    for r in range(n + 1):
        for rows in itertools.combinations(range(1, n + 1), r):
            assert alpha_zero_count(n, rows) == catalan(n)


def test_catalan_values():
    assert [catalan(n) for n in range(7)] == [1, 1, 2, 5, 14, 42, 132]


def test_mixed_alpha_rejects_right_endpoint():
    with pytest.raises(IndexOutOfRange):
        mixed_alpha_matching(SAMPLE_MATCHING, {3})


@given(st.lists(st.integers(1, 3), min_size=0, max_size=6))
def test_word_round_trip(w):
    if not w:
        return
    F = word_to_filling(w, m=3)
    assert filling_to_word(F) == tuple(w)
    assert (ne_count(F), se_count(F)) == (coinv(w), inv(w))


def test_small_word_cases():
    assert (inv((1, 2, 1, 2)), coinv((1, 2, 1, 2))) == (1, 3)
    assert (inv((1, 1, 1)), coinv((1, 1, 1))) == (0, 0)
    assert sorted(word_to_filling((2, 1)).ones) == [(1, 1), (2, 2)]
    F = word_to_filling((2, 2, 2), m=3)
    assert ne_count(F) == se_count(F) == 0


@pytest.mark.parametrize("n, m", [(3, 3), (4, 3)])
def test_letter_complement_swaps_alpha_pair(n, m):
    for w in all_words(n, m):
        flipped = tuple(m + 1 - x for x in w)
        for A in [set(), {1}, {2, n}]:
            Ac = set(range(1, n + 1)) - A
            pair = (word_mixed(w, "alpha", A, m=m), word_mixed(w, "alpha", Ac, m=m))
            assert (word_mixed(flipped, "alpha", Ac, m=m), word_mixed(flipped, "alpha", A, m=m)) == pair


def test_h_vector_of_nested_and_noncrossing_classes():
    assert matching_h_vector((1, 2, 3), (4, 5, 6)) == (3, 2, 1)
    assert matching_h_vector((1, 3, 5), (2, 4, 6)) == (1, 1, 1)
