"""Generator letters and free-monoid words for virtual singular braids.

Word order: the first letter of a word is the top of the braid, so
``concat(w1, w2)`` stacks ``w1`` on top of ``w2``.  Every other module (the
permutation homomorphism, the linear representation) composes letters so
that the *last* letter acts first; see :mod:`vsbraid.morphisms`.

Token grammar (whitespace separated)::

    s<i>  sigma_i          S<i>  sigma_i^-1       v<i>  v_i       t<i>  tau_i
    u<i>  mu_i             U<i>  mu_i^-1          g<i>  gamma_i
    u[k,l] mu_kl           U[k,l] mu_kl^-1        g[k,l] gamma_kl
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence


class Kind(str, Enum):
    SIGMA = "s"
    SIGMA_INV = "S"
    V = "v"
    TAU = "t"
    MU = "u"
    MU_INV = "U"
    GAMMA = "g"
    GMU = "u[]"
    GMU_INV = "U[]"
    GGAMMA = "g[]"

    @property
    def generalized(self) -> bool:
        return self in GENERALIZED_KINDS


GENERALIZED_KINDS = frozenset({Kind.GMU, Kind.GMU_INV, Kind.GGAMMA})
STANDARD_KINDS = frozenset({Kind.SIGMA, Kind.SIGMA_INV, Kind.V, Kind.TAU})
FUSING_KINDS = frozenset({Kind.MU, Kind.MU_INV, Kind.GAMMA, Kind.V})

_INVERSE_KIND = {
    Kind.SIGMA: Kind.SIGMA_INV,
    Kind.SIGMA_INV: Kind.SIGMA,
    Kind.V: Kind.V,
    Kind.MU: Kind.MU_INV,
    Kind.MU_INV: Kind.MU,
    Kind.GMU: Kind.GMU_INV,
    Kind.GMU_INV: Kind.GMU,
}

# stable order used for deterministic tie-breaking
_KIND_RANK = {kind: rank for rank, kind in enumerate(Kind)}


class WordError(ValueError):
    """Malformed token text or out-of-range indices."""


@dataclass(frozen=True, slots=True)
class Letter:
    """One generator symbol.

    ``index`` is an int ``i`` for single-index kinds (acting on strands i, i+1)
    and an ordered pair ``(k, l)`` with ``k != l`` for generalized kinds.
    """

    kind: Kind
    index: int | tuple[int, int]

    def __post_init__(self):
        if self.kind.generalized:
            if not (isinstance(self.index, tuple) and len(self.index) == 2):
                raise WordError(f"{self.kind.name} needs an index pair, got {self.index!r}")
            k, l = self.index
            if k == l or k < 1 or l < 1:
                raise WordError(f"bad index pair {self.index!r} for {self.kind.name}")
        elif not isinstance(self.index, int) or isinstance(self.index, bool) or self.index < 1:
            raise WordError(f"{self.kind.name} needs a positive integer index, got {self.index!r}")

    @property
    def max_strand(self) -> int:
        """Largest strand this letter touches."""
        if self.kind.generalized:
            return max(self.index)
        return self.index + 1

    @property
    def invertible(self) -> bool:
        return self.kind in _INVERSE_KIND

    def inverse(self) -> Letter:
        try:
            return Letter(_INVERSE_KIND[self.kind], self.index)
        except KeyError:
            raise WordError(f"{self} is not invertible") from None

    def sort_key(self) -> tuple:
        idx = self.index if isinstance(self.index, tuple) else (self.index,)
        return (_KIND_RANK[self.kind], idx)

    def __str__(self) -> str:
        if self.kind.generalized:
            k, l = self.index
            return f"{self.kind.value[0]}[{k},{l}]"
        return f"{self.kind.value}{self.index}"


def sigma(i: int) -> Letter:
    return Letter(Kind.SIGMA, i)


def sigma_inv(i: int) -> Letter:
    return Letter(Kind.SIGMA_INV, i)


def v(i: int) -> Letter:
    return Letter(Kind.V, i)


def tau(i: int) -> Letter:
    return Letter(Kind.TAU, i)


def mu(i: int) -> Letter:
    return Letter(Kind.MU, i)


def mu_inv(i: int) -> Letter:
    return Letter(Kind.MU_INV, i)


def gamma(i: int) -> Letter:
    return Letter(Kind.GAMMA, i)


def gmu(k: int, l: int) -> Letter:
    return Letter(Kind.GMU, (k, l))


def gmu_inv(k: int, l: int) -> Letter:
    return Letter(Kind.GMU_INV, (k, l))


def ggamma(k: int, l: int) -> Letter:
    return Letter(Kind.GGAMMA, (k, l))


@dataclass(frozen=True, slots=True)
class BraidWord:
    """A word in the free monoid on the generator letters, on ``n`` strands.

    The empty word is the identity braid 1_n.
    """

    n: int
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise WordError(f"strand count must be an integer >= 2, got {self.n!r}")
        if not isinstance(self.letters, tuple):
            object.__setattr__(self, "letters", tuple(self.letters))
        for pos, letter in enumerate(self.letters):
            if letter.max_strand > self.n:
                raise WordError(f"letter {letter} at position {pos} out of range for n={self.n}")

    @classmethod
    def identity(cls, n: int) -> BraidWord:
        return cls(n, ())

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return BraidWord(self.n, self.letters[item])
        return self.letters[item]

    def __mul__(self, other: BraidWord) -> BraidWord:
        return concat(self, other)

    def __str__(self) -> str:
        return format_word(self)

    @property
    def kinds(self) -> frozenset[Kind]:
        return frozenset(letter.kind for letter in self.letters)

    def sort_key(self) -> tuple:
        return (len(self.letters), tuple(letter.sort_key() for letter in self.letters))


_TOKEN = re.compile(r"^([sSvtuUg])(?:(0|[1-9][0-9]*)|\[(0|[1-9][0-9]*),(0|[1-9][0-9]*)\])$")
_SINGLE = {
    "s": Kind.SIGMA,
    "S": Kind.SIGMA_INV,
    "v": Kind.V,
    "t": Kind.TAU,
    "u": Kind.MU,
    "U": Kind.MU_INV,
    "g": Kind.GAMMA,
}
_PAIRED = {"u": Kind.GMU, "U": Kind.GMU_INV, "g": Kind.GGAMMA}


def parse_letter(token: str) -> Letter:
    m = _TOKEN.match(token)
    if m is None:
        raise WordError(f"cannot parse token {token!r}")
    head, single, k, l = m.groups()
    if single is not None:
        return Letter(_SINGLE[head], int(single))
    if head not in _PAIRED:
        raise WordError(f"token {token!r}: {head!r} takes no index pair")
    return Letter(_PAIRED[head], (int(k), int(l)))


def parse_word(text: str, n: int) -> BraidWord:
    """Parse whitespace-separated tokens into a word on ``n`` strands."""
    letters = []
    for pos, token in enumerate(text.split()):
        try:
            letter = parse_letter(token)
        except WordError as exc:
            raise WordError(f"syntax error at token {pos}: {exc}") from None
        if letter.max_strand > n:
            raise WordError(f"token {pos} ({token!r}) out of range for n={n}")
        letters.append(letter)
    return BraidWord(n, tuple(letters))


def format_word(w: BraidWord) -> str:
    return " ".join(str(letter) for letter in w.letters)


def word(n: int, letters: Iterable[Letter]) -> BraidWord:
    return BraidWord(n, tuple(letters))


def concat(w1: BraidWord, w2: BraidWord) -> BraidWord:
    """Stack ``w1`` on top of ``w2``.  No reduction is performed."""
    if w1.n != w2.n:
        raise WordError(f"strand count mismatch: {w1.n} vs {w2.n}")
    return BraidWord(w1.n, w1.letters + w2.letters)


def embed(w: BraidWord, n_new: int) -> BraidWord:
    """Add ``n_new - n`` straight strands on the right."""
    if n_new < w.n:
        raise WordError(f"cannot embed a {w.n}-strand word into {n_new} strands")
    return BraidWord(n_new, w.letters)


def inverse(w: BraidWord) -> BraidWord:
    """Group inverse; fails on tau/gamma letters."""
    return BraidWord(w.n, tuple(letter.inverse() for letter in reversed(w.letters)))


def cancels(a: Letter, b: Letter) -> bool:
    """True when ``a b`` is a free-reduction redex (sigma, v, mu and mu_kl pairs)."""
    return a.index == b.index and _INVERSE_KIND.get(a.kind) is b.kind


def free_reduction_steps(letters: Sequence[Letter]) -> list[int]:
    """Positions of the successive pair deletions that free-reduce ``letters``.

    Each position refers to the word as it stands just before that deletion.
    """
    stack: list[Letter] = []
    steps = []
    for letter in letters:
        if stack and cancels(stack[-1], letter):
            steps.append(len(stack) - 1)
            stack.pop()
        else:
            stack.append(letter)
    return steps


def free_reduce_letters(letters: Sequence[Letter]) -> tuple[Letter, ...]:
    stack: list[Letter] = []
    for letter in letters:
        if stack and cancels(stack[-1], letter):
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


def free_reduce(w: BraidWord) -> BraidWord:
    """Delete invertible pairs (sigma, v, mu, mu_kl) until none remain.

    Every rule shrinks the length and overlapping redexes delete the same
    letters, so the result is the unique free normal form.
    """
    return BraidWord(w.n, free_reduce_letters(w.letters))


def random_word(
    n: int,
    length: int,
    rng: random.Random,
    kinds: Sequence[Kind] = (Kind.SIGMA, Kind.SIGMA_INV, Kind.V, Kind.TAU),
) -> BraidWord:
    letters = []
    for _ in range(length):
        kind = rng.choice(kinds)
        if kind.generalized:
            k, l = rng.sample(range(1, n + 1), 2)
            letters.append(Letter(kind, (k, l)))
        else:
            letters.append(Letter(kind, rng.randint(1, n - 1)))
    return BraidWord(n, tuple(letters))
