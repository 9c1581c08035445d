"""Exact arithmetic in the cyclotomic fields Q(zeta_m) = Q[u]/(Phi_m(u))."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Optional, Union

from .poly import PolyQ, poly_extended_gcd

_ZERO = Fraction(0)
_ONE = Fraction(1)


def totient(n: int) -> int:
    if n < 1:
        raise ValueError("totient needs n >= 1")
    result, p, k = n, 2, n
    while p * p <= k:
        if k % p == 0:
            while k % p == 0:
                k //= p
            result -= result // p
        p += 1
    if k > 1:
        result -= result // k
    return result


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> PolyQ:
    """Phi_n, by exact division of x^n - 1 by the Phi_d with d | n, d < n."""
    if n < 1:
        raise ValueError("cyclotomic polynomial needs n >= 1")
    num = PolyQ.monomial(n) - 1
    for d in divisors(n)[:-1]:
        q, r = divmod(num, cyclotomic_polynomial(d))
        assert r.is_zero()
        num = q
    return num


@lru_cache(maxsize=None)
def _reduction_table(order: int) -> tuple[tuple[int, ...], ...]:
    # row k holds u^k mod Phi_order for 0 <= k <= 2*(phi-1)
    phi = cyclotomic_polynomial(order)
    n = phi.degree
    # Phi is monic with integer coefficients, so the reductions stay integral
    tail = [-int(c) for c in phi.coeffs[:n]]
    rows: list[list[int]] = []
    for k in range(max(2 * n - 1, 1)):
        if k < n:
            row = [0] * n
            row[k] = 1
        else:
            prev = rows[k - 1]
            top = prev[n - 1]
            row = [0] + prev[: n - 1]
            if top:
                row = [r + top * t for r, t in zip(row, tail)]
        rows.append(row)
    return tuple(tuple(r) for r in rows)


Scalar = Union[int, Fraction]


class CycloElement:
    """An element of Q(zeta_m), stored as its residue modulo Phi_m.

    The residue is kept as integer numerators over one positive common
    denominator, reduced so the gcd of everything is 1; ``key`` is therefore
    canonical.  ``coeffs`` gives the residue as phi(m) Fractions (trailing
    zeros kept).  Arithmetic between elements needs equal orders; use
    :meth:`lift` to move to a common multiple first.  Plain ``int`` and
    ``Fraction`` operands are coerced to the element's order.
    """

    __slots__ = ("order", "num", "den")

    def __init__(self, order: int, coeffs: Iterable[Scalar]):
        coeffs = [Fraction(c) for c in coeffs]
        n = totient(order)
        if len(coeffs) > n:
            coeffs = list((PolyQ(coeffs) % cyclotomic_polynomial(order)).coeffs)
        coeffs += [_ZERO] * (n - len(coeffs))
        den = 1
        for c in coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        self.order = order
        self.num, self.den = _normal(tuple(int(c * den) for c in coeffs), den)

    @classmethod
    def _raw(cls, order: int, num: tuple[int, ...], den: int) -> "CycloElement":
        obj = object.__new__(cls)
        obj.order = order
        obj.num, obj.den = _normal(num, den)
        return obj

    @classmethod
    def from_poly(cls, order: int, p: PolyQ) -> "CycloElement":
        return cls(order, (p % cyclotomic_polynomial(order)).coeffs)

    @classmethod
    def constant(cls, order: int, c: Scalar) -> "CycloElement":
        c = Fraction(c)
        n = totient(order)
        return cls._raw(order, (c.numerator,) + (0,) * (n - 1), c.denominator)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(a, self.den) for a in self.num)

    @property
    def key(self) -> tuple:
        return (self.num, self.den)

    @property
    def residue(self) -> PolyQ:
        return PolyQ(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.num)

    def __bool__(self) -> bool:
        return any(self.num)

    def is_rational(self) -> Optional[Fraction]:
        """The rational value if the residue is constant, else ``None``."""
        if any(self.num[1:]):
            return None
        return Fraction(self.num[0], self.den)

    def _coerce(self, other) -> "CycloElement":
        if isinstance(other, CycloElement):
            if other.order != self.order:
                raise ValueError(
                    f"cyclotomic order mismatch: {self.order} vs {other.order}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return CycloElement.constant(self.order, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        da, db = self.den, other.den
        if da == db:
            return CycloElement._raw(
                self.order, tuple(a + b for a, b in zip(self.num, other.num)), da
            )
        return CycloElement._raw(
            self.order,
            tuple(a * db + b * da for a, b in zip(self.num, other.num)),
            da * db,
        )

    __radd__ = __add__

    def __neg__(self) -> "CycloElement":
        obj = object.__new__(CycloElement)
        obj.order, obj.num, obj.den = self.order, tuple(-a for a in self.num), self.den
        return obj

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        da, db = self.den, other.den
        if da == db:
            return CycloElement._raw(
                self.order, tuple(a - b for a, b in zip(self.num, other.num)), da
            )
        return CycloElement._raw(
            self.order,
            tuple(a * db - b * da for a, b in zip(self.num, other.num)),
            da * db,
        )

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return CycloElement._raw(
                self.order, tuple(a * q.numerator for a in self.num), self.den * q.denominator
            )
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.num, other.num
        den = self.den * other.den
        if not any(a[1:]):
            c = a[0]
            return CycloElement._raw(self.order, tuple(c * y for y in b), den)
        if not any(b[1:]):
            c = b[0]
            return CycloElement._raw(self.order, tuple(c * y for y in a), den)
        n = len(a)
        conv = [0] * (2 * n - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        table = _reduction_table(self.order)
        out = conv[:n]
        for k in range(n, 2 * n - 1):
            c = conv[k]
            if c:
                row = table[k]
                for i in range(n):
                    if row[i]:
                        out[i] += c * row[i]
        return CycloElement._raw(self.order, tuple(out), den)

    __rmul__ = __mul__

    def inverse(self) -> "CycloElement":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        if not any(self.num[1:]):
            n = len(self.num)
            a = self.num[0]
            sign = -1 if a < 0 else 1
            return CycloElement._raw(self.order, (sign * self.den,) + (0,) * (n - 1), abs(a))
        inv = _inverse(self.order, self.num)
        return inv * self.den

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / Fraction(other))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k: int) -> "CycloElement":
        if k < 0:
            return self.inverse() ** (-k)
        result = CycloElement.constant(self.order, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def lift(self, order: int) -> "CycloElement":
        """Re-express in Q(zeta_order) via zeta_m = zeta_order^(order/m)."""
        if order % self.order:
            raise ValueError(f"cannot lift order {self.order} to {order}")
        if order == self.order:
            return self
        step = order // self.order
        out = [_ZERO] * (step * (len(self.num) - 1) + 1)
        for i, c in enumerate(self.coeffs):
            out[i * step] = c
        return CycloElement(order, out)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_rational() == other
        if not isinstance(other, CycloElement):
            return NotImplemented
        if other.order == self.order:
            return self.num == other.num and self.den == other.den
        n = self.order * other.order // gcd(self.order, other.order)
        return self.lift(n).key == other.lift(n).key

    def __hash__(self) -> int:
        # rational values hash like Fraction so 1 == CycloElement(m, [1]) stays consistent;
        # irrational keys should share one order
        q = self.is_rational()
        if q is not None:
            return hash(q)
        return hash((self.order, self.num, self.den))

    def __repr__(self) -> str:
        q = self.is_rational()
        if q is not None:
            return f"CycloElement({self.order}, {q})"
        body = str(self.residue)[6:-1].replace("x", "u")
        return f"CycloElement({self.order}, {body})"

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "coeffs": [[str(c.numerator), str(c.denominator)] for c in self.coeffs],
        }


def _normal(num: tuple[int, ...], den: int) -> tuple[tuple[int, ...], int]:
    if den == 1:
        return num, 1
    g = den
    for a in num:
        if a:
            g = gcd(g, a)
            if g == 1:
                return num, den
    if g == den and not any(num):
        return num, 1
    return tuple(a // g for a in num), den // g


@lru_cache(maxsize=65536)
def _inverse(order: int, num: tuple[int, ...]) -> CycloElement:
    # inverse of the integral residue num(u); callers rescale by the denominator
    g, s, _ = poly_extended_gcd(PolyQ(num), cyclotomic_polynomial(order))
    # Phi_m is irreducible over Q, so any nonzero residue is coprime to it
    assert g == PolyQ.constant(1)
    return CycloElement.from_poly(order, s)


def cyclo_add(a: CycloElement, b: CycloElement) -> CycloElement:
    return a + b


def cyclo_mul(a: CycloElement, b: CycloElement) -> CycloElement:
    return a * b


def cyclo_inv(a: CycloElement) -> CycloElement:
    return a.inverse()


def root_of_unity(m: int, k: int = 1) -> CycloElement:
    """zeta_m^k as an element of Q(zeta_m)."""
    if m < 1:
        raise ValueError("root of unity order must be positive")
    return CycloElement.from_poly(m, PolyQ.monomial(k % m))


def is_rational(a: CycloElement) -> Optional[Fraction]:
    return a.is_rational()


def parse_rational(value) -> Fraction:
    """Parse ``[num, den]`` (ints or decimal strings) or a bare int."""
    if isinstance(value, bool):
        raise ValueError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    if isinstance(value, (list, tuple)) and len(value) == 2:
        num, den = (int(v) for v in value)
        if den == 0:
            raise ValueError("zero denominator")
        return Fraction(num, den)
    raise ValueError(f"not a rational: {value!r}")


def rational_to_json(q: Fraction) -> list[str]:
    q = Fraction(q)
    return [str(q.numerator), str(q.denominator)]


def cyclo_from_json(value, order: Optional[int] = None) -> CycloElement:
    """Parse a coefficient; rationals become constants at ``order`` (default 1)."""
    if isinstance(value, dict):
        m = int(value["order"])
        el = CycloElement(m, [parse_rational(c) for c in value["coeffs"]])
        return el if order is None else el.lift(order)
    return CycloElement.constant(order or 1, parse_rational(value))
