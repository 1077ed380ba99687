"""Reidemeister-Schreier rewriting of pure braids into generalized fusing strings.

The right coset representatives of the pure monoid are the v-words

    lambda = m_{2,j_2} m_{3,j_3} ... m_{n,j_n},    1 <= j_k <= k,

with ``m_{k,l} = v_{k-1} v_{k-2} ... v_l`` for ``l < k`` and ``m_{k,k} = 1``.
Conjugating a generalized fusing string by a v-word with permutation
``alpha`` permutes its indices: ``alpha mu_{kl} alpha^-1 = mu_{alpha(k) alpha(l)}``
under the composition convention of :mod:`vsbraid.morphisms`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .morphisms import Permutation, descending, normalize_to, permutation_of
from .words import (
    STANDARD_KINDS,
    BraidWord,
    Kind,
    Letter,
    WordError,
    concat,
)

TABLE_LIMIT = 8


@dataclass(frozen=True, slots=True)
class SchreierIndex:
    """The exponent data (j_2, ..., j_n) of a coset representative."""

    j: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "j", tuple(self.j))
        for k, jk in enumerate(self.j, start=2):
            if not 1 <= jk <= k:
                raise ValueError(f"j_{k} = {jk} violates 1 <= j_k <= {k}")

    @property
    def n(self) -> int:
        return len(self.j) + 1

    @classmethod
    def identity(cls, n: int) -> SchreierIndex:
        return cls(tuple(range(2, n + 1)))


def m_word(k: int, l: int) -> tuple[Letter, ...]:
    return descending(k - 1, l) if l < k else ()


def lambda_word(idx: SchreierIndex, n: int) -> BraidWord:
    if idx.n != n:
        raise ValueError(f"index {idx.j} has {idx.n} strands, expected {n}")
    letters = []
    for k, jk in enumerate(idx.j, start=2):
        letters.extend(m_word(k, jk))
    return BraidWord(n, tuple(letters))


def schreier_system(n: int):
    """Every SchreierIndex for ``n`` strands, in lexicographic order."""
    for j in itertools.product(*(range(1, k + 1) for k in range(2, n + 1))):
        yield SchreierIndex(j)


@lru_cache(maxsize=None)
def schreier_table(n: int) -> dict[Permutation, SchreierIndex]:
    """Memoized bijection S_n -> Lambda_n built by exhaustive enumeration."""
    if n > TABLE_LIMIT:
        raise ValueError(f"table only built for n <= {TABLE_LIMIT}")
    return {permutation_of(lambda_word(idx, n)): idx for idx in schreier_system(n)}


def index_of_permutation(alpha: Permutation) -> SchreierIndex:
    """The representative index with permutation ``alpha``."""
    if alpha.n <= TABLE_LIMIT:
        return schreier_table(alpha.n)[alpha]
    return peel_index(alpha)


def peel_index(alpha: Permutation) -> SchreierIndex:
    """Table-free inverse of ``permutation_of(lambda_word(.))``.

    pi(m_{k,j}) sends j to k and fixes everything above k, so j_k is the
    preimage of k once the factors for strands above k have been stripped.
    """
    n = alpha.n
    images = list(alpha.images)
    js = []
    for k in range(n, 1, -1):
        jk = images.index(k) + 1
        js.append(jk)
        # strip m_{k,jk} from the right: alpha <- alpha o pi(m_{k,jk})^-1
        images[jk - 1 : k] = images[jk:k] + [images[jk - 1]]
    return SchreierIndex(tuple(reversed(js)))


def representative_of(w: BraidWord) -> BraidWord:
    """The coset representative lambda in Lambda_n with pi(lambda) = pi(w)."""
    return lambda_word(index_of_permutation(permutation_of(w)), w.n)


def reverse_v_word(w: BraidWord) -> BraidWord:
    """Inverse of a v-only word."""
    if any(letter.kind is not Kind.V for letter in w.letters):
        raise WordError("not a v-only word")
    return BraidWord(w.n, tuple(reversed(w.letters)))


_CONJUGABLE = {Kind.GMU, Kind.GMU_INV, Kind.GGAMMA}


def act_on_generalized(alpha: Permutation, letter: Letter) -> Letter:
    """Conjugation ``alpha x alpha^-1`` of a generalized fusing string."""
    if letter.kind not in _CONJUGABLE:
        raise WordError(f"{letter} is not a generalized fusing string")
    k, l = letter.index
    return Letter(letter.kind, (alpha(k), alpha(l)))


def _generator_letter(alpha: Permutation, a: Letter) -> Letter | None:
    """s_{lambda,a} for pi(lambda) = alpha, as a single generalized letter."""
    i = a.index
    if a.kind is Kind.V:
        return None
    if a.kind is Kind.SIGMA:
        return Letter(Kind.GMU, (alpha(i), alpha(i + 1)))
    if a.kind is Kind.TAU:
        return Letter(Kind.GGAMMA, (alpha(i), alpha(i + 1)))
    if a.kind is Kind.SIGMA_INV:
        # lambda mu_{i+1,i}^-1 lambda^-1
        return Letter(Kind.GMU_INV, (alpha(i + 1), alpha(i)))
    raise WordError(f"{a} is not a standard generator")


def schreier_generator(lam: SchreierIndex, a: Letter) -> BraidWord:
    """The Schreier generator s_{lambda,a} = lambda a (overline{lambda a})^-1."""
    n = lam.n
    if a.kind not in STANDARD_KINDS:
        raise WordError(f"{a} is not a standard generator")
    if a.max_strand > n:
        raise WordError(f"{a} out of range for n={n}")
    alpha = permutation_of(lambda_word(lam, n))
    letter = _generator_letter(alpha, a)
    return BraidWord(n, () if letter is None else (letter,))


def rewrite_pure(w: BraidWord) -> BraidWord:
    """The rewriting process R on a pure word over the standard generators.

    The coset of each prefix is tracked as a permutation updated in place,
    so a t-letter word costs O(t) after the O(n) setup.
    """
    for pos, letter in enumerate(w.letters):
        if letter.kind not in STANDARD_KINDS:
            raise WordError(f"letter {letter} at position {pos} is not a standard generator")
    if not permutation_of(w).is_identity():
        raise WordError(f"word is not pure: permutation {permutation_of(w)}")
    images = list(range(1, w.n + 1))
    out = []
    for a in w.letters:
        i = a.index
        if a.kind is Kind.SIGMA:
            out.append(Letter(Kind.GMU, (images[i - 1], images[i])))
        elif a.kind is Kind.TAU:
            out.append(Letter(Kind.GGAMMA, (images[i - 1], images[i])))
        elif a.kind is Kind.SIGMA_INV:
            out.append(Letter(Kind.GMU_INV, (images[i], images[i - 1])))
        images[i - 1], images[i] = images[i], images[i - 1]
    return BraidWord(w.n, tuple(out))


def decompose(w: BraidWord) -> tuple[BraidWord, BraidWord]:
    """Split ``w`` as (pure part) * (coset representative).

    Non-standard letters are translated to the standard alphabet first.
    """
    w = normalize_to(w, "standard")
    rep = representative_of(w)
    pure = rewrite_pure(concat(w, reverse_v_word(rep)))
    return pure, rep
