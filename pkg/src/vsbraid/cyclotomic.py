"""Exact arithmetic in Z[xi], xi a primitive p-th root of unity.

Elements are stored as integer coordinates on the basis 1, xi, ..., xi^(p-2);
xi^(p-1) is always eliminated through 1 + xi + ... + xi^(p-1) = 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def reduce_cyclic(poly: Sequence[int], p: int) -> tuple[int, ...]:
    """Canonical coordinates of sum poly[e] xi^e, for ``len(poly) == p``."""
    top = poly[p - 1]
    return tuple(int(poly[e]) - int(top) for e in range(p - 1))


@dataclass(frozen=True, slots=True)
class CycInt:
    p: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.p - 1:
            raise ValueError(f"need {self.p - 1} coordinates for p={self.p}")

    def _check(self, other: CycInt) -> None:
        if not isinstance(other, CycInt) or other.p != self.p:
            raise TypeError("operands live in different cyclotomic rings")

    def cyclic(self) -> list[int]:
        """Coefficients as an element of Z[x]/(x^p - 1) (length p)."""
        return list(self.coeffs) + [0]

    def __add__(self, other: CycInt) -> CycInt:
        self._check(other)
        return CycInt(self.p, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> CycInt:
        return CycInt(self.p, tuple(-a for a in self.coeffs))

    def __sub__(self, other: CycInt) -> CycInt:
        return self + (-other)

    def __mul__(self, other: CycInt) -> CycInt:
        self._check(other)
        p = self.p
        acc = [0] * p
        for e, a in enumerate(self.coeffs):
            if a:
                for f, b in enumerate(other.coeffs):
                    if b:
                        acc[(e + f) % p] += a * b
        return CycInt(p, reduce_cyclic(acc, p))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __str__(self) -> str:
        terms = []
        for e, a in enumerate(self.coeffs):
            if a == 0:
                continue
            base = "1" if e == 0 else ("xi" if e == 1 else f"xi^{e}")
            if e == 0:
                terms.append(str(a))
            elif a == 1:
                terms.append(base)
            elif a == -1:
                terms.append("-" + base)
            else:
                terms.append(f"{a}*{base}")
        return " + ".join(terms).replace("+ -", "- ") or "0"


class CyclotomicRing:
    """Z[xi]/Phi_p with canonical reduction."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"p must be prime, got {p}")
        self.p = p

    def __repr__(self) -> str:
        return f"CyclotomicRing({self.p})"

    def __eq__(self, other) -> bool:
        return isinstance(other, CyclotomicRing) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("CyclotomicRing", self.p))

    def from_cyclic(self, poly: Sequence[int]) -> CycInt:
        return CycInt(self.p, reduce_cyclic(poly, self.p))

    def from_power(self, e: int) -> CycInt:
        """xi^(e mod p)."""
        poly = [0] * self.p
        poly[e % self.p] = 1
        return self.from_cyclic(poly)

    def from_int(self, a: int) -> CycInt:
        return CycInt(self.p, (a,) + (0,) * (self.p - 2))

    def zero(self) -> CycInt:
        return self.from_int(0)

    def one(self) -> CycInt:
        return self.from_int(1)

    def add(self, a: CycInt, b: CycInt) -> CycInt:
        return a + b

    def mul(self, a: CycInt, b: CycInt) -> CycInt:
        return a * b

    def negate(self, a: CycInt) -> CycInt:
        return -a

    def equal(self, a: CycInt, b: CycInt) -> bool:
        return a == b


@lru_cache(maxsize=None)
def cyc_arith(p: int) -> CyclotomicRing:
    return CyclotomicRing(p)
