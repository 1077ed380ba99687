"""Homomorphisms out of the virtual singular braid monoid.

Composition convention (shared with :mod:`vsbraid.representation`): a word
``a_1 a_2 ... a_t`` acts as the composite ``a_1 o a_2 o ... o a_t``, i.e. the
last letter acts first.  Accordingly ``permutation_of(w1 * w2)`` equals
``permutation_of(w1) * permutation_of(w2)`` where ``p * q`` is the function
composition ``p o q``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .words import (
    FUSING_KINDS,
    STANDARD_KINDS,
    BraidWord,
    Kind,
    Letter,
    WordError,
    gamma,
    mu,
    mu_inv,
    sigma,
    sigma_inv,
    tau,
    v,
)


@dataclass(frozen=True, slots=True)
class Permutation:
    """A bijection of {1..n}; ``images[x - 1]`` is the image of ``x``."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"{self.images!r} is not a permutation of 1..{len(self.images)}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, i: int, n: int) -> Permutation:
        """The transposition (i, i+1), written v_i."""
        images = list(range(1, n + 1))
        images[i - 1], images[i] = images[i], images[i - 1]
        return cls(tuple(images))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        """Function composition: ``(p * q)(x) == p(q(x))``."""
        if self.n != other.n:
            raise ValueError("degree mismatch")
        return Permutation(tuple(self.images[y - 1] for y in other.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for x, y in enumerate(self.images, start=1):
            inv[y - 1] = x
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(x == y for x, y in enumerate(self.images, start=1))

    def act(self, state: Sequence) -> tuple:
        """Move the entry at position j to position ``self(j)``."""
        out = [None] * self.n
        for j, y in enumerate(self.images):
            out[y - 1] = state[j]
        return tuple(out)

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, each starting at its smallest point."""
        seen = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                cycle.append(x)
                seen.add(x)
                x = self(x)
            if len(cycle) > 1:
                out.append(tuple(cycle))
        return out

    def __str__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)


def permutation_of(w: BraidWord) -> Permutation:
    """The homomorphism pi onto S_n.

    sigma_i^{+-1}, v_i and tau_i map to the transposition (i, i+1).  Fusing
    strings are pure (mu_i = sigma_i v_i, gamma_i = tau_i v_i), so mu_i^{+-1},
    gamma_i and every generalized string map to the identity.
    """
    images = list(range(1, w.n + 1))
    for letter in w.letters:
        if letter.kind not in STANDARD_KINDS:
            continue
        i = letter.index
        # right-multiplying by (i, i+1) swaps the images of i and i+1
        images[i - 1], images[i] = images[i], images[i - 1]
    return Permutation(tuple(images))


def is_pure(w: BraidWord) -> bool:
    return permutation_of(w).is_identity()


def _check_alphabet(w: BraidWord, allowed: frozenset[Kind], name: str) -> None:
    for pos, letter in enumerate(w.letters):
        if letter.kind not in allowed:
            raise WordError(f"letter {letter} at position {pos} is not in the {name} alphabet")


def _fusing_image(letter: Letter) -> tuple[Letter, ...]:
    i = letter.index
    if letter.kind is Kind.SIGMA:
        return (mu(i), v(i))
    if letter.kind is Kind.SIGMA_INV:
        return (v(i), mu_inv(i))
    if letter.kind is Kind.TAU:
        return (gamma(i), v(i))
    return (letter,)


def _standard_image(letter: Letter) -> tuple[Letter, ...]:
    i = letter.index
    if letter.kind is Kind.MU:
        return (sigma(i), v(i))
    if letter.kind is Kind.MU_INV:
        return (v(i), sigma_inv(i))
    if letter.kind is Kind.GAMMA:
        return (tau(i), v(i))
    return (letter,)


def to_fusing(w: BraidWord) -> BraidWord:
    """The isomorphism F: sigma -> mu v, sigma^-1 -> v mu^-1, tau -> gamma v."""
    _check_alphabet(w, STANDARD_KINDS, "standard")
    return BraidWord(w.n, tuple(x for letter in w.letters for x in _fusing_image(letter)))


def to_standard(w: BraidWord) -> BraidWord:
    """The inverse isomorphism G: mu -> sigma v, mu^-1 -> v sigma^-1, gamma -> tau v."""
    _check_alphabet(w, FUSING_KINDS, "fusing")
    return BraidWord(w.n, tuple(x for letter in w.letters for x in _standard_image(letter)))


def descending(start: int, stop: int) -> tuple[Letter, ...]:
    """v_start v_{start-1} ... v_stop (empty when start < stop)."""
    return tuple(v(k) for k in range(start, stop - 1, -1))


def ascending(start: int, stop: int) -> tuple[Letter, ...]:
    """v_start v_{start+1} ... v_stop (empty when start > stop)."""
    return tuple(v(k) for k in range(start, stop + 1))


def detour(letter: Letter) -> tuple[Letter, ...]:
    """Rewrite a subscript-(i+1) crossing through the subscript-1 crossing.

    (v_i..v_1)(v_{i+1}..v_2) x_1 (v_2..v_{i+1})(v_1..v_i)
    """
    if letter.kind in (Kind.V,) or letter.kind.generalized or letter.index == 1:
        return (letter,)
    i = letter.index - 1
    left = descending(i, 1) + descending(i + 1, 2)
    right = ascending(2, i + 1) + ascending(1, i)
    return left + (Letter(letter.kind, 1),) + right


def reduce_to_subscript_one(w: BraidWord) -> BraidWord:
    """Replace every non-virtual crossing by its detour through subscript 1.

    Generalized fusing strings are expanded first, so the output only uses
    sigma_1^{+-1}, tau_1, mu_1^{+-1}, gamma_1 and the v_i.
    """
    w = expand_generalized(w)
    return BraidWord(w.n, tuple(x for letter in w.letters for x in detour(letter)))


def _expand_pair(k: int, l: int, core: Letter) -> tuple[Letter, ...]:
    i, j = min(k, l), max(k, l)
    left = descending(j - 1, i + 1)
    right = ascending(i + 1, j - 1)
    if k < l:
        middle = (core,)
    else:
        middle = (v(i), core, v(i))
    return left + middle + right


def expand_letter(letter: Letter) -> tuple[Letter, ...]:
    """Defining word of a generalized fusing string over mu_i^{+-1}, gamma_i, v_i."""
    if not letter.kind.generalized:
        return (letter,)
    k, l = letter.index
    i = min(k, l)
    if letter.kind is Kind.GMU:
        return _expand_pair(k, l, mu(i))
    if letter.kind is Kind.GGAMMA:
        return _expand_pair(k, l, gamma(i))
    # the conjugating v-word is its own reverse, so the inverse only flips the core
    return _expand_pair(k, l, mu_inv(i))


def expand_generalized(w: BraidWord) -> BraidWord:
    return BraidWord(w.n, tuple(x for letter in w.letters for x in expand_letter(letter)))


NORMAL_FORMS = ("standard", "fusing", "subscript-one", "expanded")


def normalize_to(w: BraidWord, target: str) -> BraidWord:
    """Translate a mixed-alphabet word into a single alphabet.

    ``standard`` and ``fusing`` translate letter by letter (mixed input is
    fine); ``subscript-one`` applies the detour rewriting; ``expanded`` only
    expands generalized fusing strings.
    """
    w = expand_generalized(w)
    if target == "expanded":
        return w
    if target == "standard":
        return BraidWord(w.n, _flat(_standard_image(x) for x in w.letters))
    if target == "fusing":
        return BraidWord(w.n, _flat(_fusing_image(x) for x in w.letters))
    if target == "subscript-one":
        return reduce_to_subscript_one(w)
    raise ValueError(f"unknown target alphabet {target!r}; expected one of {NORMAL_FORMS}")


def _flat(chunks: Iterable[tuple[Letter, ...]]) -> tuple[Letter, ...]:
    return tuple(x for chunk in chunks for x in chunk)
