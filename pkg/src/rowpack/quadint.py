"""Exact arithmetic on numbers of the form p + q*sqrt(3) with integer p, q.

Every rectangle width, height and area produced by the row-packing class
lives in this ring, so area minima and ties are decided bit-exactly, never
through floating point.  Because sqrt(3) is irrational the representation
is unique: two values are equal iff both components match.

Python integers are arbitrary precision, so the products used by the sign
test cannot overflow (the search never exceeds ~2^40 per component anyway).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

_SQRT3 = math.sqrt(3.0)


@dataclass(frozen=True, slots=True)
class QuadInt:
    """p + q*sqrt(3).  Immutable; safe for unrestricted concurrent use."""

    p: int
    q: int

    # ring arithmetic ------------------------------------------------------

    def __add__(self, other: "QuadInt") -> "QuadInt":
        return QuadInt(self.p + other.p, self.q + other.q)

    def __sub__(self, other: "QuadInt") -> "QuadInt":
        return QuadInt(self.p - other.p, self.q - other.q)

    def __neg__(self) -> "QuadInt":
        return QuadInt(-self.p, -self.q)

    def __mul__(self, other: "QuadInt | int") -> "QuadInt":
        if isinstance(other, QuadInt):
            # (p1 + q1*r)(p2 + q2*r) with r^2 = 3
            return QuadInt(
                self.p * other.p + 3 * self.q * other.q,
                self.p * other.q + self.q * other.p,
            )
        return QuadInt(self.p * other, self.q * other)

    __rmul__ = __mul__

    # ordering -------------------------------------------------------------

    def sign(self) -> int:
        """Sign of the real value p + q*sqrt(3), computed exactly.

        For mixed component signs, p + q*sqrt(3) and p^2 - 3q^2 have the
        same sign when p > 0, opposite when p < 0; p^2 = 3q^2 is impossible
        for nonzero integers.
        """
        p, q = self.p, self.q
        if p == 0 and q == 0:
            return 0
        if p >= 0 and q >= 0:
            return 1
        if p <= 0 and q <= 0:
            return -1
        if p > 0:  # q < 0
            return 1 if p * p > 3 * q * q else -1
        # p < 0, q > 0
        return 1 if 3 * q * q > p * p else -1

    def __lt__(self, other: "QuadInt") -> bool:
        return (self - other).sign() < 0

    def __le__(self, other: "QuadInt") -> bool:
        return (self - other).sign() <= 0

    def __gt__(self, other: "QuadInt") -> bool:
        return (self - other).sign() > 0

    def __ge__(self, other: "QuadInt") -> bool:
        return (self - other).sign() >= 0

    # conversions ----------------------------------------------------------

    def to_float(self) -> float:
        """Double-precision value; error is at most a few ulp."""
        return self.p + self.q * _SQRT3

    def __float__(self) -> float:
        return self.to_float()

    def __repr__(self) -> str:
        return f"QuadInt({self.p}, {self.q})"

    def __str__(self) -> str:
        if self.q == 0:
            return str(self.p)
        return f"{self.p}{self.q:+d}*sqrt(3)"

    def to_json(self) -> dict:
        return {"p": self.p, "q": self.q, "float": self.to_float()}

    @classmethod
    def from_json(cls, obj: dict) -> "QuadInt":
        return cls(int(obj["p"]), int(obj["q"]))


def compare(a: QuadInt, b: QuadInt) -> int:
    """-1, 0 or +1 as a <, ==, > b.  Total order consistent with the reals."""
    return (a - b).sign()


ZERO = QuadInt(0, 0)
ONE = QuadInt(1, 0)
SQRT3 = QuadInt(0, 1)
