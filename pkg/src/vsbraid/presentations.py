"""Relation catalogs for the presentations of VSB_n and VSP_n.

Each catalog is a list of named relation families that can be instantiated
for any strand count.  Relations are stored lhs -> rhs in their usual orientation; double
equalities such as ``s s^-1 = s^-1 s = 1`` become two relations against the
identity.  Families marked ``derived`` are not defining relations
but follow from them (they let the verifier cover inverse
letters in the commuting relations).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from .words import (
    FUSING_KINDS,
    GENERALIZED_KINDS,
    STANDARD_KINDS,
    BraidWord,
    Kind,
    Letter,
    gamma,
    ggamma,
    gmu,
    gmu_inv,
    mu,
    mu_inv,
    sigma,
    sigma_inv,
    tau,
    v,
)

Letters = tuple[Letter, ...]
Instance = tuple[dict, Letters, Letters]


@dataclass(frozen=True)
class Relation:
    lhs: BraidWord
    rhs: BraidWord
    family: str
    params: tuple[tuple[str, object], ...] = ()
    derived: bool = False

    def __post_init__(self):
        if self.lhs.n != self.rhs.n:
            raise ValueError("relation sides have different strand counts")

    def __str__(self) -> str:
        return f"{self.lhs or '1'} = {self.rhs or '1'}"

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "params": dict(self.params),
            "derived": self.derived,
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
        }


@dataclass(frozen=True)
class Family:
    name: str
    build: Callable[[int], Iterable[Instance]]
    derived: bool = False
    description: str = ""


@dataclass(frozen=True)
class PresentationCatalog:
    name: str
    kinds: frozenset[Kind]
    families: tuple[Family, ...]
    subscript_one: bool = False

    def accepts(self, letter: Letter) -> bool:
        if letter.kind not in self.kinds:
            return False
        if self.subscript_one and letter.kind is not Kind.V:
            return letter.index == 1
        return True

    def accepts_word(self, w: BraidWord) -> bool:
        return all(self.accepts(x) for x in w.letters)

    def instantiate(self, n: int) -> list[Relation]:
        return instantiate_relations(self, n)


def instantiate_relations(catalog: PresentationCatalog, n: int) -> list[Relation]:
    """Every relation instance of ``catalog`` on ``n`` strands, in a fixed order."""
    if n < 2:
        raise ValueError(f"strand count must be >= 2, got {n}")
    out = []
    for fam in catalog.families:
        for params, lhs, rhs in fam.build(n):
            rel = Relation(
                BraidWord(n, lhs),
                BraidWord(n, rhs),
                fam.name,
                tuple(params.items()),
                fam.derived,
            )
            out.append(rel)
    return out


# --- index helpers -------------------------------------------------------------


def _singles(n: int) -> range:
    return range(1, n)


def _adjacent(n: int) -> Iterator[tuple[int, int]]:
    """Ordered pairs (i, j) of generator indices with |i - j| = 1."""
    for i in range(1, n):
        for j in range(1, n):
            if abs(i - j) == 1:
                yield i, j


def _distant(n: int) -> Iterator[tuple[int, int]]:
    """Ordered pairs (i, j) of generator indices with |i - j| > 1."""
    for i in range(1, n):
        for j in range(1, n):
            if abs(i - j) > 1:
                yield i, j


def _distinct(n: int, r: int) -> Iterator[tuple[int, ...]]:
    """Ordered r-tuples of pairwise distinct strands."""
    return itertools.permutations(range(1, n + 1), r)


def _commuting(kinds: dict[str, Callable[[int], Letter]], pairs) -> Callable[[int], Iterator[Instance]]:
    def build(n):
        for (gname, g), (hname, h) in pairs(kinds):
            for i, j in _distant(n):
                yield {"g": gname, "h": hname, "i": i, "j": j}, (g(i), h(j)), (h(j), g(i))

    return build


def _all_pairs(kinds):
    return itertools.product(kinds.items(), repeat=2)


def _pairs_touching(name):
    def pairs(kinds):
        return [(g, h) for g, h in _all_pairs(kinds) if name in (g[0], h[0])]

    return pairs


# --- standard presentation --------------------------------------------------------

_STD_COMMUTING = {"s": sigma, "t": tau, "v": v}
_STD_COMMUTING_INV = {"s": sigma, "S": sigma_inv, "t": tau, "v": v}


def _std_r2(n):
    for i in _singles(n):
        yield {"i": i, "side": 1}, (sigma(i), sigma_inv(i)), ()
        yield {"i": i, "side": 2}, (sigma_inv(i), sigma(i)), ()


def _std_v2(n):
    for i in _singles(n):
        yield {"i": i}, (v(i), v(i)), ()


def _std_r3(n):
    for i, j in _adjacent(n):
        yield {"i": i, "j": j}, (sigma(i), sigma(j), sigma(i)), (sigma(j), sigma(i), sigma(j))


def _std_v3(n):
    for i, j in _adjacent(n):
        yield {"i": i, "j": j}, (v(i), v(j), v(i)), (v(j), v(i), v(j))


def _std_vr3(n):
    for i, j in _adjacent(n):
        yield {"i": i, "j": j}, (v(i), sigma(j), v(i)), (v(j), sigma(i), v(j))


def _std_vs3(n):
    for i, j in _adjacent(n):
        yield {"i": i, "j": j}, (v(i), tau(j), v(i)), (v(j), tau(i), v(j))


def _std_rs3(n):
    for i, j in _adjacent(n):
        yield {"i": i, "j": j}, (sigma(i), sigma(j), tau(i)), (tau(j), sigma(i), sigma(j))


def _std_rs1(n):
    for i in _singles(n):
        yield {"i": i}, (sigma(i), tau(i)), (tau(i), sigma(i))


STANDARD = PresentationCatalog(
    "standard",
    STANDARD_KINDS,
    (
        Family("R2", _std_r2, description="s_i S_i = S_i s_i = 1"),
        Family("V2", _std_v2, description="v_i v_i = 1"),
        Family("R3", _std_r3, description="s_i s_j s_i = s_j s_i s_j, |i-j|=1"),
        Family("V3", _std_v3, description="v_i v_j v_i = v_j v_i v_j, |i-j|=1"),
        Family("VR3", _std_vr3, description="v_i s_j v_i = v_j s_i v_j, |i-j|=1"),
        Family("VS3", _std_vs3, description="v_i t_j v_i = v_j t_i v_j, |i-j|=1"),
        Family("RS3", _std_rs3, description="s_i s_j t_i = t_j s_i s_j, |i-j|=1"),
        Family("RS1", _std_rs1, description="s_i t_i = t_i s_i"),
        Family(
            "C",
            _commuting(_STD_COMMUTING, _all_pairs),
            description="g_i h_j = h_j g_i, |i-j|>1, g, h in {s, t, v}",
        ),
        Family(
            "C-inv",
            _commuting(_STD_COMMUTING_INV, _pairs_touching("S")),
            derived=True,
            description="commuting relations involving S_i",
        ),
    ),
)


# --- reduced standard presentation (generators s_1^{+-1}, t_1, v_i) -------------

# sigma_2 and tau_2 / sigma_3 and tau_3 written through the detour
def _via_2(x: Letter) -> Letters:
    return (v(1), v(2), x, v(2), v(1))


def _via_3(x: Letter) -> Letters:
    return (v(2), v(1), v(3), v(2), x, v(2), v(3), v(1), v(2))


def _rs_v2(n):
    for i in _singles(n):
        yield {"i": i}, (v(i), v(i)), ()


def _rs_r2(n):
    yield {"side": 1}, (sigma(1), sigma_inv(1)), ()
    yield {"side": 2}, (sigma_inv(1), sigma(1)), ()


def _rs_rs1(n):
    yield {}, (sigma(1), tau(1)), (tau(1), sigma(1))


def _rs_v3(n):
    yield from _std_v3(n)


def _rs_r3(n):
    if n >= 3:
        s2 = _via_2(sigma(1))
        yield {}, (sigma(1),) + s2 + (sigma(1),), s2 + (sigma(1),) + s2


def _rs_rs3(n):
    if n >= 3:
        s2 = _via_2(sigma(1))
        yield {}, (tau(1),) + s2 + (sigma(1),), s2 + (sigma(1),) + _via_2(tau(1))


def _rs_far(n):
    for i in range(3, n):
        yield {"g": "t", "i": i}, (tau(1), v(i)), (v(i), tau(1))
        yield {"g": "s", "i": i}, (sigma(1), v(i)), (v(i), sigma(1))


def _rs_vcomm(n):
    for i, j in _distant(n):
        yield {"i": i, "j": j}, (v(i), v(j)), (v(j), v(i))


def _far_pair(first: Letter, second: Letter):
    def build(n):
        if n >= 4:
            far = _via_3(second)
            yield {}, (first,) + far, far + (first,)

    return build


REDUCED_STANDARD = PresentationCatalog(
    "reduced-standard",
    STANDARD_KINDS,
    (
        Family("rs-V2", _rs_v2, description="v_i^2 = 1"),
        Family("rs-R2", _rs_r2, description="s_1 S_1 = S_1 s_1 = 1"),
        Family("rs-RS1", _rs_rs1, description="s_1 t_1 = t_1 s_1"),
        Family("rs-V3", _rs_v3, description="v_i v_j v_i = v_j v_i v_j, |i-j|=1"),
        Family("rs-R3", _rs_r3, description="s_1 s_2 s_1 = s_2 s_1 s_2 via detour"),
        Family("rs-RS3", _rs_rs3, description="t_1 s_2 s_1 = s_2 s_1 t_2 via detour"),
        Family("rs-far", _rs_far, description="t_1 v_i = v_i t_1, s_1 v_i = v_i s_1, i >= 3"),
        Family("rs-Vcomm", _rs_vcomm, description="v_i v_j = v_j v_i, |i-j|>1"),
        Family("rs-tt", _far_pair(tau(1), tau(1)), description="t_1 t_3 = t_3 t_1 via detour"),
        Family("rs-ts", _far_pair(tau(1), sigma(1)), description="t_1 s_3 = s_3 t_1 via detour"),
        Family("rs-ss", _far_pair(sigma(1), sigma(1)), description="s_1 s_3 = s_3 s_1 via detour"),
    ),
    subscript_one=True,
)


# --- fusing-string presentation M_n -----------------------------------------------

_MN_COMMUTING = {"u": mu, "g": gamma, "v": v}
_MN_COMMUTING_INV = {"u": mu, "U": mu_inv, "g": gamma, "v": v}


def _mn_id(n):
    for i in _singles(n):
        yield {"i": i, "rel": "vv"}, (v(i), v(i)), ()
        yield {"i": i, "rel": "uU"}, (mu(i), mu_inv(i)), ()
        yield {"i": i, "rel": "Uu"}, (mu_inv(i), mu(i)), ()


def _mn_v3(n):
    yield from _std_v3(n)


def _mn_vr3(n):
    for i, j in _adjacent(n):
        yield {"i": i, "j": j}, (v(i), mu(j), v(i)), (v(j), mu(i), v(j))


def _mn_vs3(n):
    for i, j in _adjacent(n):
        yield {"i": i, "j": j}, (v(i), gamma(j), v(i)), (v(j), gamma(i), v(j))


def _mn_r3(n):
    for i, j in _adjacent(n):
        mid = (v(j), mu(i), v(j))
        yield {"i": i, "j": j}, (mu(j),) + mid + (mu(i),), (mu(i),) + mid + (mu(j),)


def _mn_rs3(n):
    for i, j in _adjacent(n):
        mid = (v(j), mu(i), v(j))
        yield {"i": i, "j": j}, (mu(j),) + mid + (gamma(i),), (gamma(i),) + mid + (mu(j),)


def _mn_r1(n):
    for i in _singles(n):
        yield {"i": i}, (mu(i), v(i), gamma(i)), (gamma(i), v(i), mu(i))


FUSING = PresentationCatalog(
    "fusing",
    FUSING_KINDS,
    (
        Family("mn-id", _mn_id, description="v_i^2 = 1, u_i U_i = 1 = U_i u_i"),
        Family("mn-v3", _mn_v3, description="v_i v_j v_i = v_j v_i v_j, |i-j|=1"),
        Family("mn-vr3", _mn_vr3, description="v_i u_j v_i = v_j u_i v_j, |i-j|=1"),
        Family("mn-vs3", _mn_vs3, description="v_i g_j v_i = v_j g_i v_j, |i-j|=1"),
        Family("mn-r3", _mn_r3, description="u_j (v_j u_i v_j) u_i = u_i (v_j u_i v_j) u_j"),
        Family("mn-rs3", _mn_rs3, description="u_j (v_j u_i v_j) g_i = g_i (v_j u_i v_j) u_j"),
        Family("mn-r1", _mn_r1, description="u_i v_i g_i = g_i v_i u_i"),
        Family(
            "mn-fc",
            _commuting(_MN_COMMUTING, _all_pairs),
            description="a_i b_j = b_j a_i, |i-j|>1, a, b in {u, g, v}",
        ),
        Family(
            "mn-fc-inv",
            _commuting(_MN_COMMUTING_INV, _pairs_touching("U")),
            derived=True,
            description="commuting relations involving U_i",
        ),
    ),
)


# --- reduced fusing-string presentation (generators u_1^{+-1}, g_1, v_i) --------


def _rf_id(n):
    for i in _singles(n):
        yield {"i": i, "rel": "vv"}, (v(i), v(i)), ()
    yield {"rel": "uU"}, (mu(1), mu_inv(1)), ()
    yield {"rel": "Uu"}, (mu_inv(1), mu(1)), ()


def _rf_yb(last: Letter):
    def build(n):
        if n >= 3:
            u2 = _via_2(mu(1))
            u13 = (v(2), mu(1), v(2))
            yield {}, u2 + u13 + (last,), (last,) + u13 + u2

    return build


def _rf_r1(n):
    yield {}, (mu(1), v(1), gamma(1)), (gamma(1), v(1), mu(1))


def _rf_far(n):
    for i in range(3, n):
        yield {"g": "u", "i": i}, (mu(1), v(i)), (v(i), mu(1))
        yield {"g": "g", "i": i}, (gamma(1), v(i)), (v(i), gamma(1))


REDUCED_FUSING = PresentationCatalog(
    "reduced-fusing",
    FUSING_KINDS,
    (
        Family("rf-id", _rf_id, description="v_i^2 = 1, u_1 U_1 = 1 = U_1 u_1"),
        Family("rf-v3", _rs_v3, description="v_i v_j v_i = v_j v_i v_j, |i-j|=1"),
        Family("rf-r3", _rf_yb(mu(1)), description="u_2 (v_2 u_1 v_2) u_1 = u_1 (v_2 u_1 v_2) u_2 via detour"),
        Family("rf-rs3", _rf_yb(gamma(1)), description="u_2 (v_2 u_1 v_2) g_1 = g_1 (v_2 u_1 v_2) u_2 via detour"),
        Family("rf-r1", _rf_r1, description="u_1 v_1 g_1 = g_1 v_1 u_1"),
        Family("rf-Vcomm", _rs_vcomm, description="v_i v_j = v_j v_i, |i-j|>1"),
        Family("rf-far", _rf_far, description="u_1 v_i = v_i u_1, g_1 v_i = v_i g_1, i >= 3"),
        Family("rf-gg", _far_pair(gamma(1), gamma(1)), description="g_1 g_3 = g_3 g_1 via detour"),
        Family("rf-gu", _far_pair(gamma(1), mu(1)), description="g_1 u_3 = u_3 g_1 via detour"),
        Family("rf-uu", _far_pair(mu(1), mu(1)), description="u_1 u_3 = u_3 u_1 via detour"),
    ),
    subscript_one=True,
)


# --- pure monoid VSP_n on generalized fusing strings -----------------------------


def _pure_inv(n):
    for k, l in _distinct(n, 2):
        yield {"k": k, "l": l, "side": 1}, (gmu(k, l), gmu_inv(k, l)), ()
        yield {"k": k, "l": l, "side": 2}, (gmu_inv(k, l), gmu(k, l)), ()


def _pure_yb(n):
    for i, j, k in _distinct(n, 3):
        yield (
            {"i": i, "j": j, "k": k},
            (gmu(i, j), gmu(i, k), gmu(j, k)),
            (gmu(j, k), gmu(i, k), gmu(i, j)),
        )


def _pure_yb_mixed(n):
    for i, j, k in _distinct(n, 3):
        yield (
            {"i": i, "j": j, "k": k},
            (gmu(i, j), gmu(i, k), ggamma(j, k)),
            (ggamma(j, k), gmu(i, k), gmu(i, j)),
        )


def _pure_yb_mixed_two(n):
    for i, j, k in _distinct(n, 3):
        yield (
            {"i": i, "j": j, "k": k},
            (ggamma(i, j), gmu(i, k), gmu(j, k)),
            (gmu(j, k), gmu(i, k), ggamma(i, j)),
        )


def _pure_twist(n):
    for k, l in _distinct(n, 2):
        yield {"k": k, "l": l}, (gmu(k, l), ggamma(l, k)), (ggamma(k, l), gmu(l, k))


def _pure_commuting(first, second):
    def build(n):
        for i, j, k, l in _distinct(n, 4):
            a, b = first(i, j), second(k, l)
            yield {"i": i, "j": j, "k": k, "l": l}, (a, b), (b, a)

    return build


PURE = PresentationCatalog(
    "pure",
    GENERALIZED_KINDS,
    (
        Family("pure-inv", _pure_inv, description="u_kl U_kl = U_kl u_kl = 1"),
        Family("pure-YB", _pure_yb, description="u_ij u_ik u_jk = u_jk u_ik u_ij"),
        Family("pure-YB-mixed", _pure_yb_mixed, description="u_ij u_ik g_jk = g_jk u_ik u_ij"),
        Family("pure-YB-mixed-2", _pure_yb_mixed_two, description="g_ij u_ik u_jk = u_jk u_ik g_ij"),
        Family("pure-twist", _pure_twist, description="u_kl g_lk = g_kl u_lk"),
        Family("pure-comm-uu", _pure_commuting(gmu, gmu), description="u_ij u_kl = u_kl u_ij"),
        Family("pure-comm-gg", _pure_commuting(ggamma, ggamma), description="g_ij g_kl = g_kl g_ij"),
        Family("pure-comm-ug", _pure_commuting(gmu, ggamma), description="u_ij g_kl = g_kl u_ij"),
    ),
)


CATALOGS: dict[str, PresentationCatalog] = {
    c.name: c for c in (STANDARD, REDUCED_STANDARD, FUSING, REDUCED_FUSING, PURE)
}


def get_catalog(name: str) -> PresentationCatalog:
    try:
        return CATALOGS[name]
    except KeyError:
        raise ValueError(f"unknown catalog {name!r}; expected one of {sorted(CATALOGS)}") from None
