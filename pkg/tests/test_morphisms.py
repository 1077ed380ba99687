from __future__ import annotations

import itertools

import pytest
from hypothesis import given

from strategies import FUSING, STANDARD, word_pairs, words
from vsbraid.morphisms import (
    Permutation,
    expand_generalized,
    is_pure,
    normalize_to,
    permutation_of,
    reduce_to_subscript_one,
    to_fusing,
    to_standard,
)
from vsbraid.representation import rep_equal
from vsbraid.schreier import representative_of, reverse_v_word
from vsbraid.words import BraidWord, Kind, Letter, WordError, free_reduce, parse_word


def W(text: str, n: int) -> BraidWord:
    return parse_word(text, n)


# --- permutations -------------------------------------------------------------


def test_permutation_examples():
    assert permutation_of(W("s1", 2)) == Permutation.transposition(1, 2)
    assert permutation_of(W("v1 v1", 3)).is_identity()
    assert permutation_of(expand_generalized(W("u[1,3]", 3))).is_identity()
    assert permutation_of(W("u[1,3] g[3,2] U[2,1]", 3)).is_identity()


def test_permutation_of_s1_v2_is_three_cycle():
    perm = permutation_of(W("s1 v2", 3))
    assert perm.images == (2, 3, 1)
    assert perm.cycles() == [(1, 2, 3)]
    assert str(perm) == "(1 2 3)"


def test_standard_letters_map_to_transpositions_and_fusing_strings_are_pure():
    for kind in STANDARD:
        assert permutation_of(BraidWord(4, (Letter(kind, 2),))) == Permutation.transposition(2, 4)
    for kind in (Kind.MU, Kind.MU_INV, Kind.GAMMA):
        assert permutation_of(BraidWord(4, (Letter(kind, 2),))).is_identity()


@given(words(max_n=5, max_len=10))
def test_permutation_invariant_under_translation(w):
    for target in ("standard", "fusing", "expanded"):
        assert permutation_of(normalize_to(w, target)) == permutation_of(w)


def test_permutation_algebra():
    p = Permutation((2, 3, 1))
    q = Permutation((1, 3, 2))
    assert (p * q)(2) == p(q(2))
    assert (p * p.inverse()).is_identity()
    assert p.act(("a", "b", "c")) == ("c", "a", "b")
    with pytest.raises(ValueError):
        Permutation((1, 1, 2))


@given(word_pairs(max_n=5, max_len=10))
def test_permutation_is_homomorphism(pair):
    w1, w2 = pair
    assert permutation_of(w1 * w2) == permutation_of(w1) * permutation_of(w2)


@given(words(max_n=5, max_len=10, kinds=STANDARD))
def test_permutation_convention_matches_coset_representatives(w):
    # the representative is a v-word with the same permutation, so w rep^-1 is pure
    rep = representative_of(w)
    assert permutation_of(rep) == permutation_of(w)
    assert is_pure(w * reverse_v_word(rep))


@given(words(max_n=4, max_len=8))
def test_state_permutation_matches_pi(w):
    from vsbraid.representation import BasisState, apply_word

    start = tuple(range(w.n))  # distinct entries, so positions are traceable
    image = apply_word(w, BasisState(5, start))
    assert image.state.k == permutation_of(w).act(start)


# --- F and G --------------------------------------------------------------------


def test_to_fusing_examples():
    assert to_fusing(W("s1", 2)) == W("u1 v1", 2)
    assert to_fusing(W("v2", 3)) == W("v2", 3)
    assert to_fusing(W("S1", 2)) == W("v1 U1", 2)
    assert to_fusing(W("t2", 3)) == W("g2 v2", 3)
    out = to_fusing(W("s1 S1", 2))
    assert out == W("u1 v1 v1 U1", 2)
    assert free_reduce(out) == BraidWord.identity(2)


def test_to_standard_examples():
    assert to_standard(W("u1", 2)) == W("s1 v1", 2)
    assert to_standard(W("g2", 3)) == W("t2 v2", 3)
    assert to_standard(W("U1", 2)) == W("v1 S1", 2)
    assert free_reduce(to_standard(to_fusing(W("s1", 2)))) == W("s1", 2)


@pytest.mark.parametrize("fn,text", [(to_fusing, "u1"), (to_fusing, "u[1,2]"), (to_standard, "s1"), (to_standard, "t1"), (to_standard, "g[1,2]")])
def test_translations_reject_foreign_letters(fn, text):
    with pytest.raises(WordError):
        fn(W(text, 3))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_f_and_g_mutually_inverse_on_generators(n):
    for i in range(1, n):
        for kind in STANDARD:
            x = BraidWord(n, (Letter(kind, i),))
            assert free_reduce(to_standard(to_fusing(x))) == x
        for kind in FUSING:
            y = BraidWord(n, (Letter(kind, i),))
            assert free_reduce(to_fusing(to_standard(y))) == y


@given(words(max_n=4, max_len=10, kinds=STANDARD))
def test_f_preserves_representation(w):
    assert rep_equal(w, to_fusing(w), 3)


@given(words(max_n=4, max_len=10, kinds=FUSING))
def test_g_preserves_representation(w):
    assert rep_equal(w, to_standard(w), 5)


# --- detour and expansion --------------------------------------------------------


def test_detour_examples():
    assert reduce_to_subscript_one(W("s2", 3)) == W("v1 v2 s1 v2 v1", 3)
    assert reduce_to_subscript_one(W("t3", 4)) == W("v2 v1 v3 v2 t1 v2 v3 v1 v2", 4)
    assert reduce_to_subscript_one(W("s1", 2)) == W("s1", 2)
    assert reduce_to_subscript_one(W("U3 v3", 4)) == W("v2 v1 v3 v2 U1 v2 v3 v1 v2 v3", 4)


def test_subscript_one_alphabet():
    out = reduce_to_subscript_one(W("s3 S2 t3 u2 U3 g2 v3 u[4,1]", 5))
    for letter in out:
        assert letter.kind is Kind.V or letter.index == 1


@given(words(max_n=4, max_len=10))
def test_detour_preserves_representation(w):
    assert rep_equal(w, reduce_to_subscript_one(w), 3)


def test_expansion_examples():
    assert expand_generalized(W("u[1,2]", 2)) == W("u1", 2)
    assert expand_generalized(W("u[2,1]", 2)) == W("v1 u1 v1", 2)
    assert expand_generalized(W("g[1,3]", 3)) == W("v2 g1 v2", 3)
    assert expand_generalized(W("u[4,2]", 4)) == W("v3 v2 u2 v2 v3", 4)
    assert expand_generalized(W("U[1,4]", 4)) == W("v3 v2 U1 v2 v3", 4)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_expansions_are_pure_and_inverse_pairs_cancel(n):
    for k, l in itertools.permutations(range(1, n + 1), 2):
        fwd = W(f"u[{k},{l}]", n)
        inv = W(f"U[{k},{l}]", n)
        assert is_pure(expand_generalized(fwd))
        assert is_pure(expand_generalized(W(f"g[{k},{l}]", n)))
        assert free_reduce(expand_generalized(fwd * inv)) == BraidWord.identity(n)
        assert free_reduce(expand_generalized(inv * fwd)) == BraidWord.identity(n)


def _conjugate(i: int, text: str, n: int) -> BraidWord:
    return W(f"v{i} {text} v{i}", n)


def _conjugation_identities(n: int):
    """Every conjugation identity v_i x v_i = y behind the index action on n strands."""
    out = []
    for i in range(1, n):
        for k, l in itertools.permutations(range(1, n + 1), 2):
            if abs(k - i) > 1 and abs(l - i) > 1:
                for head in "ug":
                    out.append(("far", _conjugate(i, f"{head}[{k},{l}]", n), W(f"{head}[{k},{l}]", n)))
    for i in range(2, n):
        for head in "ug":
            out.append(("down", _conjugate(i - 1, f"{head}[{i},{i + 1}]", n), W(f"{head}[{i - 1},{i + 1}]", n)))
            out.append(("down", _conjugate(i - 1, f"{head}[{i + 1},{i}]", n), W(f"{head}[{i + 1},{i - 1}]", n)))
    for i in range(1, n):
        for head in "ug":
            out.append(("swap", _conjugate(i, f"{head}[{i},{i + 1}]", n), W(f"{head}[{i + 1},{i}]", n)))
            out.append(("swap", _conjugate(i, f"{head}[{i + 1},{i}]", n), W(f"{head}[{i},{i + 1}]", n)))
    for i in range(1, n - 1):
        for head in "ug":
            out.append(("up", _conjugate(i + 1, f"{head}[{i},{i + 1}]", n), W(f"{head}[{i},{i + 2}]", n)))
            out.append(("up", _conjugate(i + 1, f"{head}[{i + 1},{i}]", n), W(f"{head}[{i + 2},{i}]", n)))
    return out


@pytest.mark.parametrize("n", [3, 4, 5])
def test_conjugation_identities_hold_in_representation(n):
    instances = _conjugation_identities(n)
    assert {case for case, _, _ in instances} >= {"down", "swap", "up"}
    for _, lhs, rhs in instances:
        assert rep_equal(lhs, rhs, 3), (lhs, rhs)
        assert rep_equal(lhs, rhs, 5), (lhs, rhs)


def test_normalize_to_targets():
    w = W("s2 u[3,1] t1", 3)
    assert normalize_to(w, "expanded") == W("s2 v2 v1 u1 v1 v2 t1", 3)
    assert normalize_to(w, "standard").kinds <= {Kind.SIGMA, Kind.SIGMA_INV, Kind.V, Kind.TAU}
    assert normalize_to(w, "fusing").kinds <= {Kind.MU, Kind.MU_INV, Kind.V, Kind.GAMMA}
    with pytest.raises(ValueError):
        normalize_to(w, "braid")


@given(words(max_n=4, max_len=8))
def test_normalize_preserves_representation(w):
    for target in ("expanded", "standard", "fusing", "subscript-one"):
        assert rep_equal(w, normalize_to(w, target), 3)
