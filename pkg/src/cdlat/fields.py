"""GF(p) and GF(p^2) arithmetic.

GF(p^2) is modelled as GF(p)[t] / (t^2 - kappa) with kappa the smallest
quadratic non-residue mod p.  GF(p) sits inside as the elements with
``c1 == 0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import DivisionByZero, InvalidSpec


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _require_odd_prime(p: int) -> None:
    if p == 2 or not is_prime(p):
        raise InvalidSpec(f"p = {p} is not an odd prime")


@lru_cache(maxsize=None)
def smallest_nonresidue(p: int) -> int:
    _require_odd_prime(p)
    squares = {x * x % p for x in range(1, p)}
    return next(k for k in range(2, p) if k not in squares)


@dataclass(frozen=True)
class FieldElement:
    p: int
    c0: int
    c1: int = 0
    degree: int = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "c0", self.c0 % self.p)
        object.__setattr__(self, "c1", self.c1 % self.p)
        if self.degree == 1 and self.c1:
            raise ValueError("GF(p) element with a nonzero t-coefficient")

    @property
    def kappa(self) -> int | None:
        return smallest_nonresidue(self.p) if self.degree == 2 else None

    def _check(self, other: "FieldElement") -> int:
        if other.p != self.p:
            raise ValueError("elements of different characteristic")
        return max(self.degree, other.degree)

    def __add__(self, other: "FieldElement") -> "FieldElement":
        deg = self._check(other)
        return FieldElement(self.p, self.c0 + other.c0, self.c1 + other.c1, deg)

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.p, -self.c0, -self.c1, self.degree)

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        return self + (-other)

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        deg = self._check(other)
        p = self.p
        if deg == 1:
            return FieldElement(p, self.c0 * other.c0)
        k = smallest_nonresidue(p)
        # (x0 + x1 t)(y0 + y1 t) = x0 y0 + k x1 y1 + (x0 y1 + x1 y0) t
        return FieldElement(p, self.c0 * other.c0 + k * self.c1 * other.c1,
                            self.c0 * other.c1 + self.c1 * other.c0, 2)

    def norm(self) -> int:
        """x0^2 - kappa x1^2, an element of GF(p)."""
        k = smallest_nonresidue(self.p) if self.degree == 2 else 0
        return (self.c0 * self.c0 - k * self.c1 * self.c1) % self.p

    def inverse(self) -> "FieldElement":
        if self.c0 == 0 and self.c1 == 0:
            raise DivisionByZero(f"inverse of zero in GF({self.p}^{self.degree})")
        ninv = pow(self.norm(), -1, self.p)
        return FieldElement(self.p, self.c0 * ninv, -self.c1 * ninv, self.degree)

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        return self * other.inverse()

    def is_zero(self) -> bool:
        return self.c0 == 0 and self.c1 == 0

    def embed(self) -> "FieldElement":
        """The same element viewed in GF(p^2)."""
        return FieldElement(self.p, self.c0, self.c1, 2)

    def __repr__(self) -> str:
        if self.degree == 1:
            return f"GF({self.p})({self.c0})"
        return f"GF({self.p}^2)({self.c0} + {self.c1}t)"


def gf_make(p: int, value: int = 0) -> FieldElement:
    _require_odd_prime(p)
    return FieldElement(p, value)


def gf2_make(p: int, c0: int = 0, c1: int = 0) -> FieldElement:
    _require_odd_prime(p)
    return FieldElement(p, c0, c1, 2)


def gf_add(x: FieldElement, y: FieldElement) -> FieldElement:
    return x + y


def gf_mul(x: FieldElement, y: FieldElement) -> FieldElement:
    return x * y


def gf_inv(x: FieldElement) -> FieldElement:
    return x.inverse()


gf2_add = gf_add
gf2_mul = gf_mul
gf2_inv = gf_inv


def gf_elements(p: int) -> list[FieldElement]:
    return [FieldElement(p, c) for c in range(p)]


def gf2_elements(p: int) -> list[FieldElement]:
    """GF(p^2) in coefficient-lex order: code ``c0 * p + c1``."""
    return [FieldElement(p, c0, c1, 2) for c0 in range(p) for c1 in range(p)]
