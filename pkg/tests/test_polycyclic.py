import math

import pytest
from hypothesis import given, strategies as st

from gisemi import ZERO
from gisemi.polycyclic import (ONE, Letter, PolyElement, all_letter_words, code_letters,
                               decode_p2_word, embed_omega_into_p2, enumerate_poly, gen, gen_inv,
                               letters_of, min_word_length, poly_multiply, poly_product,
                               poly_reduce, prefix_code, rewrite_steps)
from gisemi.suites import bicyclic_oracle, code_relation_failures, confluence_suite, rose_isomorphism_suite

P = lambda i: Letter(i)
Pi = lambda i: Letter(i, False)

letters2 = st.builds(Letter, st.integers(0, 1), st.booleans())
words2 = st.lists(letters2, max_size=12)


def test_identity_and_presentation():
    for z in enumerate_poly(2, 3):
        assert poly_multiply(2, ONE, z) == z == poly_multiply(2, z, ONE)
    assert poly_multiply(2, gen_inv(0), gen(0)) == ONE
    assert poly_multiply(2, gen_inv(1), gen(0)) is ZERO


def test_reduce_examples():
    assert poly_reduce(2, [Pi(0), P(0)]) == ONE
    assert poly_reduce(2, [P(0), P(1), Pi(1), Pi(0)]) == PolyElement((0, 1), (0, 1))
    assert poly_reduce(2, [Pi(0), P(1)]) is ZERO
    assert poly_reduce(2, []) == ONE


def test_rewrite_steps_trace():
    steps = list(rewrite_steps([P(1), Pi(0), P(0), Pi(1), P(1)]))
    assert steps == [(P(1), Pi(1), P(1)), (P(1),)]
    assert list(rewrite_steps([Pi(0), P(1)])) == [ZERO]


def test_arity_is_checked():
    with pytest.raises(ValueError):
        poly_reduce(2, [P(2)])
    with pytest.raises(ValueError):
        poly_multiply(2, gen(3), ONE)
    with pytest.raises(ValueError):
        poly_reduce(0, [P(0)])


def test_p0_is_two_element_semilattice():
    elems = enumerate_poly(0, 3)
    assert elems == [ZERO, ONE]
    table = {(a, b): poly_multiply(0, a, b) for a in elems for b in elems}
    assert table == {(ZERO, ZERO): ZERO, (ZERO, ONE): ZERO, (ONE, ZERO): ZERO, (ONE, ONE): ONE}


def test_min_word_length():
    assert min_word_length(ONE) == 0
    assert min_word_length(PolyElement((0, 1), (0,))) == 1
    assert min_word_length(ZERO) == math.inf


def test_letters_of_round_trip():
    for z in enumerate_poly(3, 4):
        if z is not ZERO:
            assert poly_reduce(3, letters_of(z)) == z


# P_omega -> P_2

def test_code_examples():
    assert embed_omega_into_p2(ONE) == ONE
    assert embed_omega_into_p2(ZERO) is ZERO
    assert embed_omega_into_p2(gen(3)) == PolyElement((1, 1, 1, 0), ())
    assert poly_reduce(2, code_letters(3, False) + code_letters(3)) == ONE
    assert poly_reduce(2, code_letters(2, False) + code_letters(5)) is ZERO


def test_code_is_prefix_free():
    codes = [prefix_code(i) for i in range(12)]
    for i, a in enumerate(codes):
        for j, b in enumerate(codes):
            if i != j:
                assert b[: len(a)] != a


def test_code_relations_up_to_8():
    assert code_relation_failures(8) == []


def test_decode_round_trip():
    for w in [(), (0,), (3, 0, 5), (1, 1, 1)]:
        assert decode_p2_word(embed_omega_into_p2(PolyElement(w, ())).x) == w
    assert decode_p2_word((1,)) is None
    assert decode_p2_word((2,)) is None


def test_omega_embedding_injective_and_multiplicative():
    elems = enumerate_poly(6, 3)
    images = {z: embed_omega_into_p2(z) for z in elems}
    assert len(set(images.values())) == len(elems) == 986
    for a in elems:
        ia = images[a]
        for b in elems:
            assert embed_omega_into_p2(poly_multiply(None, a, b)) == poly_multiply(2, ia, images[b])


@given(st.lists(st.tuples(st.integers(0, 40), st.booleans()), max_size=8))
def test_omega_embedding_on_long_words(letters):
    word = [Letter(i, s) for i, s in letters]
    z = poly_reduce(None, word)
    image_word = [a for i, s in letters for a in code_letters(i, s)]
    assert embed_omega_into_p2(z) == poly_reduce(2, image_word)


# Rewriting soundness

@given(words2)
def test_strategies_agree(w):
    assert poly_reduce(2, w, "leftmost") == poly_reduce(2, w, "rightmost")


@given(words2, words2)
def test_reduction_is_a_homomorphism(w1, w2):
    assert poly_reduce(2, w1 + w2) == poly_multiply(2, poly_reduce(2, w1), poly_reduce(2, w2))


@given(st.lists(st.builds(Letter, st.integers(0, 2), st.booleans()), max_size=6),
       st.lists(st.builds(Letter, st.integers(0, 2), st.booleans()), max_size=6),
       st.lists(st.builds(Letter, st.integers(0, 2), st.booleans()), max_size=6))
def test_poly_multiply_associative(w1, w2, w3):
    a, b, c = (poly_reduce(3, w) for w in (w1, w2, w3))
    assert poly_multiply(3, poly_multiply(3, a, b), c) == poly_multiply(3, a, poly_multiply(3, b, c))


def test_bicyclic_oracle_by_hand():
    # p0 p0^-1 (p0^-1 p0) = p0 p0^-1
    assert bicyclic_oracle([P(0), Pi(0), Pi(0), P(0)]) == (1, 1)
    assert bicyclic_oracle([Pi(0), P(0)]) == (0, 0)
    assert bicyclic_oracle([Pi(0), Pi(0), P(0), P(0), P(0)]) == (1, 0)


def test_p1_matches_bicyclic():
    for w in all_letter_words(1, 6):
        z = poly_reduce(1, w)
        assert z is not ZERO
        assert (len(z.x), len(z.y)) == bicyclic_oracle(w)


def test_confluence_suite_small_sample():
    res = confluence_suite(seed=7, samples=500, max_len=12, hom_len=4)
    assert res.ok, res.failures


def test_rose_isomorphism_small():
    res = rose_isomorphism_suite(arities=(1, 2), max_total=3)
    assert res.ok, res.failures
    assert res.details["pairs"] > 0


def test_product_helper():
    assert poly_product(2, [gen(0), gen(1), gen_inv(1)]) == PolyElement((0, 1), (1,))
    assert poly_product(2, []) == ONE
