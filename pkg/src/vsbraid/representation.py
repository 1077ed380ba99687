"""A monomial representation of VSB_n over Z[xi], xi = exp(2 pi i / p).

On V = span{b_k : k in Z_p} the generators act on neighbouring tensor
factors by

    T(b_k x b_l) = b_l x b_k                          (v)
    R(b_k x b_l) = xi^(kl) b_k x b_l                  (mu)
    S(b_k x b_l) = (xi^(kl) + xi^(-kl)) b_k x b_l     (gamma)

so every word sends a basis state to a scalar multiple of another basis
state.  A word acts as the composite of its letters with the last letter
acting first, the convention shared with :func:`vsbraid.morphisms.permutation_of`.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from .cyclotomic import CycInt, cyc_arith, is_prime, reduce_cyclic
from .morphisms import normalize_to
from .words import BraidWord, Kind

# int64 is exact while each gamma at most doubles the coefficient mass
_INT64_GAMMA_LIMIT = 60


@dataclass(frozen=True, slots=True)
class BasisState:
    p: int
    k: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "k", tuple(int(x) % self.p for x in self.k))

    @property
    def n(self) -> int:
        return len(self.k)


@dataclass(frozen=True, slots=True)
class MonomialImage:
    scalar: CycInt
    state: BasisState

    def to_json(self) -> dict:
        return {"scalar": list(self.scalar.coeffs), "state": list(self.state.k)}


def _check_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")


def _fusing(w: BraidWord) -> BraidWord:
    return normalize_to(w, "fusing")


def apply_word(w: BraidWord, b: BasisState) -> MonomialImage:
    """Image of one basis state under a word, evaluated letter by letter."""
    p = b.p
    _check_prime(p)
    if w.n != b.n:
        raise ValueError(f"word has {w.n} strands but state has {b.n} factors")
    state = list(b.k)
    exponent = 0
    poly = None
    for letter in reversed(_fusing(w).letters):
        i = letter.index - 1
        kind = letter.kind
        if kind is Kind.V:
            state[i], state[i + 1] = state[i + 1], state[i]
            continue
        a = state[i] * state[i + 1] % p
        if kind is Kind.MU:
            exponent += a
        elif kind is Kind.MU_INV:
            exponent -= a
        else:
            if poly is None:
                poly = [1] + [0] * (p - 1)
            poly = [poly[(y - a) % p] + poly[(y + a) % p] for y in range(p)]
    if poly is None:
        poly = [1] + [0] * (p - 1)
    e = exponent % p
    rolled = [poly[(y - e) % p] for y in range(p)]
    return MonomialImage(CycInt(p, reduce_cyclic(rolled, p)), BasisState(p, tuple(state)))


def all_states(n: int, p: int) -> np.ndarray:
    """Every basis state of V^{(x) n} as rows, lexicographic order."""
    return np.indices((p,) * n).reshape(n, -1).T.copy()


@dataclass(frozen=True)
class Fingerprint:
    """The full map basis state -> (scalar, image state) of a word.

    Row r of ``states`` / ``scalars`` is the image of ``all_states(n, p)[r]``;
    scalars are canonical coordinates in Z[xi].
    """

    n: int
    p: int
    states: np.ndarray
    scalars: np.ndarray

    def __eq__(self, other) -> bool:
        if not isinstance(other, Fingerprint):
            return NotImplemented
        return (
            self.n == other.n
            and self.p == other.p
            and np.array_equal(self.states, other.states)
            and np.array_equal(self.scalars, other.scalars)
        )

    def first_difference(self, other: Fingerprint) -> int | None:
        diff = np.any(self.states != other.states, axis=1) | np.any(self.scalars != other.scalars, axis=1)
        hits = np.flatnonzero(diff)
        return int(hits[0]) if hits.size else None

    def image(self, row: int) -> MonomialImage:
        coeffs = tuple(int(c) for c in self.scalars[row])
        return MonomialImage(CycInt(self.p, coeffs), BasisState(self.p, tuple(int(x) for x in self.states[row])))


def fingerprint(w: BraidWord, p: int) -> Fingerprint:
    """Evaluate ``w`` on all p^n basis states at once."""
    _check_prime(p)
    letters = _fusing(w).letters
    n = w.n
    states = all_states(n, p)
    rows = states.shape[0]
    n_gamma = sum(1 for x in letters if x.kind is Kind.GAMMA)
    dtype = np.int64 if n_gamma <= _INT64_GAMMA_LIMIT else object
    exponent = np.zeros(rows, dtype=np.int64)
    poly = None
    cols = np.arange(p)
    for letter in reversed(letters):
        i = letter.index - 1
        kind = letter.kind
        if kind is Kind.V:
            states[:, [i, i + 1]] = states[:, [i + 1, i]]
            continue
        a = states[:, i] * states[:, i + 1] % p
        if kind is Kind.MU:
            exponent += a
        elif kind is Kind.MU_INV:
            exponent -= a
        else:
            if poly is None:
                poly = np.zeros((rows, p), dtype=dtype)
                poly[:, 0] = 1
            lo = np.take_along_axis(poly, (cols[None, :] - a[:, None]) % p, axis=1)
            hi = np.take_along_axis(poly, (cols[None, :] + a[:, None]) % p, axis=1)
            poly = lo + hi
    if poly is None:
        poly = np.zeros((rows, p), dtype=dtype)
        poly[:, 0] = 1
    shift = (cols[None, :] - (exponent % p)[:, None]) % p
    poly = np.take_along_axis(poly, shift, axis=1)
    scalars = poly[:, : p - 1] - poly[:, p - 1 : p]
    return Fingerprint(n, p, states, scalars)


def rep_equal(w1: BraidWord, w2: BraidWord, p: int) -> bool:
    """Exact equality of the two words' images on every basis state.

    A necessary condition for equality in VSB_n; not known to be sufficient.
    """
    if w1.n != w2.n:
        raise ValueError(f"strand count mismatch: {w1.n} vs {w2.n}")
    return fingerprint(w1, p) == fingerprint(w2, p)


# --- relation verification ---------------------------------------------------


@dataclass(frozen=True)
class RelationFailure:
    relation: object
    state: BasisState
    lhs_image: MonomialImage
    rhs_image: MonomialImage

    def to_json(self) -> dict:
        return {
            "family": self.relation.family,
            "params": dict(self.relation.params),
            "lhs": str(self.relation.lhs),
            "rhs": str(self.relation.rhs),
            "state": list(self.state.k),
            "lhs_image": self.lhs_image.to_json(),
            "rhs_image": self.rhs_image.to_json(),
        }


@dataclass
class FamilyResult:
    family: str
    derived: bool = False
    instances: int = 0
    failures: list[RelationFailure] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


@dataclass
class VerificationReport:
    catalog: str
    n: int
    p: int
    families: list[FamilyResult]

    @property
    def passed(self) -> bool:
        return all(f.passed for f in self.families)

    @property
    def instances(self) -> int:
        return sum(f.instances for f in self.families)

    def to_json(self) -> dict:
        return {
            "catalog": self.catalog,
            "n": self.n,
            "p": self.p,
            "passed": self.passed,
            "instances": self.instances,
            "families": [
                {
                    "family": f.family,
                    "derived": f.derived,
                    "instances": f.instances,
                    "passed": f.passed,
                    "failures": [x.to_json() for x in f.failures],
                }
                for f in self.families
            ],
        }


def check_relation(rel, p: int) -> RelationFailure | None:
    """Compare both sides after translation to the standard alphabet."""
    lhs = fingerprint(normalize_to(rel.lhs, "standard"), p)
    rhs = fingerprint(normalize_to(rel.rhs, "standard"), p)
    row = lhs.first_difference(rhs)
    if row is None:
        return None
    state = BasisState(p, tuple(int(x) for x in all_states(rel.lhs.n, p)[row]))
    return RelationFailure(rel, state, lhs.image(row), rhs.image(row))


def verify_relation_list(
    relations: Sequence, p: int, *, catalog: str = "custom", threads: int = 1
) -> VerificationReport:
    _check_prime(p)
    relations = list(relations)
    n = relations[0].lhs.n if relations else 0
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            outcomes = list(pool.map(lambda r: check_relation(r, p), relations))
    else:
        outcomes = [check_relation(r, p) for r in relations]
    families: dict[str, FamilyResult] = {}
    for rel, failure in zip(relations, outcomes):
        result = families.setdefault(rel.family, FamilyResult(rel.family, rel.derived))
        result.instances += 1
        if failure is not None:
            result.failures.append(failure)
    return VerificationReport(catalog, n, p, list(families.values()))


def verify_relations(catalog, n: int, p: int, *, threads: int = 1) -> VerificationReport:
    """Check every relation instance of ``catalog`` on ``n`` strands at prime ``p``.

    Families with no instances for this ``n`` are still listed, with zero count.
    """
    _check_prime(p)
    report = verify_relation_list(catalog.instantiate(n), p, catalog=catalog.name, threads=threads)
    report.n = n
    present = {f.family for f in report.families}
    for fam in catalog.families:
        if fam.name not in present:
            report.families.append(FamilyResult(fam.name, fam.derived, 0))
    order = {fam.name: pos for pos, fam in enumerate(catalog.families)}
    report.families.sort(key=lambda f: order.get(f.family, len(order)))
    return report


# --- operator conditions on V (x) V and V (x) V (x) V -----------------------

Image = tuple[CycInt, tuple[int, ...]]
Operator = Callable[[tuple[int, ...]], Image]


def _local_ops(p: int) -> dict[str, Callable[[int, int], Image]]:
    ring = cyc_arith(p)

    def T(k, l):
        return ring.one(), (l, k)

    def R(k, l):
        return ring.from_power(k * l), (k, l)

    def R_inv(k, l):
        return ring.from_power(-k * l), (k, l)

    def S(k, l):
        return ring.from_power(k * l) + ring.from_power(-k * l), (k, l)

    return {"T": T, "R": R, "R_inv": R_inv, "S": S}


def placed(local: Callable[[int, int], Image], pos: int) -> Operator:
    """``local`` acting on tensor factors pos, pos+1 (0-based), identity elsewhere."""

    def op(state):
        scalar, (a, b) = local(state[pos], state[pos + 1])
        out = state[:pos] + (a, b) + state[pos + 2 :]
        return scalar, out

    return op


def compose(*ops: Operator) -> Operator:
    """Operator composite; the rightmost operator acts first."""

    def op(state):
        scalar = None
        for f in reversed(ops):
            s, state = f(state)
            scalar = s if scalar is None else scalar * s
        return scalar, state

    return op


@dataclass
class ConditionResult:
    number: int
    statement: str
    states_checked: int
    passed: bool
    witness: tuple[int, ...] | None = None
    detail: str = ""

    def to_json(self) -> dict:
        return {
            "condition": self.number,
            "statement": self.statement,
            "states_checked": self.states_checked,
            "passed": self.passed,
            "witness": None if self.witness is None else list(self.witness),
            "detail": self.detail,
        }


@dataclass
class OperatorReport:
    p: int
    conditions: list[ConditionResult]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.conditions)

    def to_json(self) -> dict:
        return {"p": self.p, "passed": self.passed, "conditions": [c.to_json() for c in self.conditions]}


def _check_identity(
    number: int,
    statement: str,
    lhs: Operator,
    rhs: Operator,
    factors: int,
    p: int,
    expected: Callable[[tuple[int, ...]], Image] | None = None,
) -> ConditionResult:
    count = 0
    for state in itertools.product(range(p), repeat=factors):
        count += 1
        left, right = lhs(state), rhs(state)
        if left != right:
            return ConditionResult(number, statement, count, False, state, f"lhs {left} != rhs {right}")
        if expected is not None and left != expected(state):
            return ConditionResult(number, statement, count, False, state, "differs from closed form")
    return ConditionResult(number, statement, count, True)


def verify_operator_conditions(p: int) -> OperatorReport:
    """Check the seven operator identities that make T, R, S a representation.

    Besides comparing both sides, conditions 2-7 are compared with their
    closed forms (e.g. xi^(kl) xi^(km) xi^(lm) on b_k b_l b_m for the
    Yang-Baxter condition).
    """
    _check_prime(p)
    ring = cyc_arith(p)
    ops = _local_ops(p)
    xi = ring.from_power

    def ident(state):
        return ring.one(), state

    T12, T23 = placed(ops["T"], 0), placed(ops["T"], 1)
    R12, R23 = placed(ops["R"], 0), placed(ops["R"], 1)
    S12, S23 = placed(ops["S"], 0), placed(ops["S"], 1)
    R13 = compose(T23, R12, T23)
    T, R, R_inv, S = (placed(ops[name], 0) for name in ("T", "R", "R_inv", "S"))

    def cos(a):
        return xi(a) + xi(-a)

    results = []
    first = [
        _check_identity(1, "T^2 = id", compose(T, T), ident, 2, p),
        _check_identity(1, "R R^-1 = id", compose(R, R_inv), ident, 2, p),
        _check_identity(1, "R^-1 R = id", compose(R_inv, R), ident, 2, p),
    ]
    bad = next((c for c in first if not c.passed), None)
    results.append(
        ConditionResult(
            1,
            "T and R are invertible, T^2 = id",
            sum(c.states_checked for c in first),
            bad is None,
            None if bad is None else bad.witness,
            "" if bad is None else f"{bad.statement}: {bad.detail}",
        )
    )
    results.append(
        _check_identity(
            2,
            "(T x 1)(1 x T)(T x 1) = (1 x T)(T x 1)(1 x T)",
            compose(T12, T23, T12),
            compose(T23, T12, T23),
            3,
            p,
            lambda s: (ring.one(), (s[2], s[1], s[0])),
        )
    )
    results.append(
        _check_identity(
            3,
            "(T x 1)(1 x R)(T x 1) = (1 x T)(R x 1)(1 x T)",
            compose(T12, R23, T12),
            compose(T23, R12, T23),
            3,
            p,
            lambda s: (xi(s[0] * s[2]), s),
        )
    )
    results.append(
        _check_identity(
            4,
            "(T x 1)(1 x S)(T x 1) = (1 x T)(S x 1)(1 x T)",
            compose(T12, S23, T12),
            compose(T23, S12, T23),
            3,
            p,
            lambda s: (cos(s[0] * s[2]), s),
        )
    )
    results.append(
        _check_identity(
            5,
            "R_23 R_13 R_12 = R_12 R_13 R_23",
            compose(R23, R13, R12),
            compose(R12, R13, R23),
            3,
            p,
            lambda s: (xi(s[0] * s[1]) * xi(s[0] * s[2]) * xi(s[1] * s[2]), s),
        )
    )
    results.append(
        _check_identity(
            6,
            "R_23 R_13 S_12 = S_12 R_13 R_23",
            compose(R23, R13, S12),
            compose(S12, R13, R23),
            3,
            p,
            lambda s: (cos(s[0] * s[1]) * xi(s[0] * s[2]) * xi(s[1] * s[2]), s),
        )
    )
    results.append(
        _check_identity(
            7,
            "R T S = S T R",
            compose(R, T, S),
            compose(S, T, R),
            2,
            p,
            lambda s: (xi(s[0] * s[1]) * cos(s[0] * s[1]), (s[1], s[0])),
        )
    )
    return OperatorReport(p, results)


def fingerprint_table(w: BraidWord, p: int) -> list[dict]:
    """JSON-ready rows {state, scalar, image} for every basis state."""
    fp = fingerprint(w, p)
    start = all_states(w.n, p)
    return [
        {
            "state": [int(x) for x in start[r]],
            "scalar": [int(c) for c in fp.scalars[r]],
            "image": [int(x) for x in fp.states[r]],
        }
        for r in range(start.shape[0])
    ]


def iter_states(n: int, p: int) -> Iterable[BasisState]:
    for k in itertools.product(range(p), repeat=n):
        yield BasisState(p, k)
