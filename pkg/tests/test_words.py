from __future__ import annotations

import random

import pytest
from hypothesis import given

from strategies import words
from vsbraid.representation import rep_equal
from vsbraid.words import (
    BraidWord,
    Kind,
    Letter,
    WordError,
    concat,
    embed,
    format_word,
    free_reduce,
    gamma,
    gmu,
    inverse,
    mu,
    mu_inv,
    parse_letter,
    parse_word,
    random_word,
    sigma,
    sigma_inv,
    tau,
    v,
)


def test_parse_basic_tokens():
    assert parse_word("s1 v2 t1", 3).letters == (sigma(1), v(2), tau(1))
    assert parse_word("", 2) == BraidWord.identity(2)
    assert parse_word("u[2,1]", 3).letters == (gmu(2, 1),)


def test_parse_full_grammar():
    w = parse_word("s1 S2 v1 t2 u1 U2 g1 u[1,3] U[3,1] g[2,3]", 3)
    kinds = [x.kind for x in w]
    assert kinds == [
        Kind.SIGMA, Kind.SIGMA_INV, Kind.V, Kind.TAU, Kind.MU, Kind.MU_INV,
        Kind.GAMMA, Kind.GMU, Kind.GMU_INV, Kind.GGAMMA,
    ]
    assert format_word(w) == "s1 S2 v1 t2 u1 U2 g1 u[1,3] U[3,1] g[2,3]"


def test_parse_tolerates_extra_whitespace():
    assert parse_word("  s1\tv1\n", 2).letters == (sigma(1), v(1))


@pytest.mark.parametrize("text", ["x1", "s", "s01", "s0", "u[1,1]", "u[1]", "u[0,2]", "s-1", "S 1", "g[1,2,3]"])
def test_parse_rejects_bad_tokens(text):
    with pytest.raises(WordError):
        parse_word(text, 4)


def test_parse_error_names_token_position():
    with pytest.raises(WordError, match="token 2"):
        parse_word("s1 v1 q1", 3)


@pytest.mark.parametrize("text,n", [("s3", 3), ("v2", 2), ("u[1,4]", 3), ("g[4,2]", 3)])
def test_index_out_of_range(text, n):
    with pytest.raises(WordError, match=text.replace("[", r"\[").replace("]", r"\]")):
        parse_word(text, n)


def test_strand_count_lower_bound():
    with pytest.raises(WordError):
        BraidWord(1, ())


def test_letter_validation():
    with pytest.raises(WordError):
        Letter(Kind.SIGMA, (1, 2))
    with pytest.raises(WordError):
        Letter(Kind.GMU, 1)
    with pytest.raises(WordError):
        Letter(Kind.GGAMMA, (2, 2))
    with pytest.raises(WordError):
        Letter(Kind.V, 0)


def test_inverse_letters():
    assert sigma(2).inverse() == sigma_inv(2)
    assert mu_inv(1).inverse() == mu(1)
    assert v(1).inverse() == v(1)
    assert gmu(3, 1).inverse().kind is Kind.GMU_INV
    for letter in (tau(1), gamma(2), Letter(Kind.GGAMMA, (1, 2))):
        with pytest.raises(WordError):
            letter.inverse()


def test_inverse_word_reverses_and_inverts():
    w = parse_word("s1 v2 U1", 3)
    assert format_word(inverse(w)) == "u1 v2 S1"
    with pytest.raises(WordError):
        inverse(parse_word("s1 t1", 2))


def test_free_reduce_examples():
    assert free_reduce(parse_word("s1 S1", 2)) == BraidWord.identity(2)
    assert free_reduce(parse_word("v1 v1 v2", 3)).letters == (v(2),)
    assert free_reduce(parse_word("u1 v1 v1 U1", 2)) == BraidWord.identity(2)
    assert free_reduce(parse_word("u[1,3] U[1,3] t1", 3)).letters == (tau(1),)


def test_free_reduce_keeps_non_invertible_pairs():
    w = parse_word("t1 t1 g1 g1 u[1,2] U[2,1]", 2)
    assert free_reduce(w) == w


def test_concat_examples():
    w = parse_word("s1 v1", 2)
    assert concat(BraidWord.identity(2), w) == w
    assert concat(parse_word("s1", 2), parse_word("v1", 2)) == w
    assert concat(parse_word("u1", 2), parse_word("U1", 2)).letters == (mu(1), mu_inv(1))
    with pytest.raises(WordError):
        concat(parse_word("s1", 2), parse_word("s1", 3))


def test_embed_examples():
    assert embed(parse_word("s1", 2), 3) == parse_word("s1", 3)
    assert embed(BraidWord.identity(2), 5) == BraidWord.identity(5)
    w = parse_word("v2", 3)
    assert embed(w, 3) == w
    with pytest.raises(WordError):
        embed(w, 2)


def test_slicing_returns_words():
    w = parse_word("s1 v2 t1", 3)
    assert w[1:] == parse_word("v2 t1", 3)
    assert w[0] == sigma(1)


def test_random_word_respects_kinds():
    rng = random.Random(7)
    w = random_word(4, 50, rng, kinds=(Kind.V, Kind.GGAMMA))
    assert len(w) == 50 and w.kinds <= {Kind.V, Kind.GGAMMA}


@given(words())
def test_parse_format_round_trip(w):
    assert parse_word(format_word(w), w.n) == w
    assert format_word(parse_word(format_word(w), w.n)) == format_word(w)


def test_parse_letter_round_trip_on_canonical_text():
    for token in ("s12", "S3", "v1", "t9", "u4", "U2", "g1", "u[10,2]", "U[1,9]", "g[3,1]"):
        assert str(parse_letter(token)) == token


@given(words(max_len=20))
def test_free_reduce_idempotent_and_shrinking(w):
    once = free_reduce(w)
    assert free_reduce(once) == once
    assert len(once) <= len(w)
    assert (len(w) - len(once)) % 2 == 0


@given(words(max_n=5, max_len=30))
def test_free_reduce_preserves_representation(w):
    assert rep_equal(w, free_reduce(w), 3)
