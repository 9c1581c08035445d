"""Roots of unity e^{2 pi i k/d} kept as reduced fractions k/d in [0, 1)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


@dataclass(frozen=True, order=True)
class Eigenvalue:
    k: int
    d: int

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("eigenvalue denominator must be positive")
        k = self.k % self.d
        g = gcd(k, self.d)
        object.__setattr__(self, "k", k // g)
        object.__setattr__(self, "d", self.d // g)

    @classmethod
    def from_fraction(cls, q: Fraction) -> "Eigenvalue":
        q = Fraction(q)
        return cls(q.numerator, q.denominator)

    @classmethod
    def one(cls) -> "Eigenvalue":
        return cls(0, 1)

    @property
    def order(self) -> int:
        return self.d

    @property
    def angle(self) -> Fraction:
        return Fraction(self.k, self.d)

    def is_one(self) -> bool:
        return self.d == 1

    def kills(self, m: int) -> bool:
        """True iff lambda^m == 1."""
        return m % self.d == 0

    def __mul__(self, other: "Eigenvalue") -> "Eigenvalue":
        return Eigenvalue.from_fraction(self.angle + other.angle)

    def __pow__(self, e: int) -> "Eigenvalue":
        return Eigenvalue(self.k * e, self.d)

    def inverse(self) -> "Eigenvalue":
        return Eigenvalue(-self.k, self.d)

    def __str__(self) -> str:
        return "1" if self.d == 1 else f"e(2pi i {self.k}/{self.d})"
