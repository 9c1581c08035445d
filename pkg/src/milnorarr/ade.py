"""Intersection matrices, spectral numbers and det(I - T) for surface ADE singularities.

Three independent routes to det(-S): exact elimination on the Dynkin
matrix, the path-recursion f(k) = 2 f(k-1) - f(k-2) (and its D and E
variants), and the product of (1 - u^{p_j}) over the spectrum computed in
Q[u]/(Phi_m).  The identity holds up to sign in general; absolute values
are compared.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import lcm
from typing import Optional

from .exactmath import CycloElement, PolyQ, cyclotomic_polynomial, det_exact


@dataclass(frozen=True)
class AdeType:
    family: str
    rank: int

    def __post_init__(self):
        fam = self.family.upper()
        object.__setattr__(self, "family", fam)
        if fam == "A" and self.rank >= 1:
            return
        if fam == "D" and self.rank >= 4:
            return
        if fam == "E" and self.rank in (6, 7, 8):
            return
        raise ValueError(f"invalid ADE type {self.family}{self.rank}")

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    @classmethod
    def parse(cls, text: str) -> "AdeType":
        text = text.strip()
        return cls(text[0], int(text[1:]))


def dynkin_edges(t: AdeType) -> list[tuple[int, int]]:
    """Edges on nodes 1..k.

    A: the path.  D: nodes 1 and 2 both attached to 3, then the path 3..k.
    E: the path 2..k with node 1 attached to node 4.
    """
    k = t.rank
    if t.family == "A":
        return [(i, i + 1) for i in range(1, k)]
    if t.family == "D":
        return [(1, 3), (2, 3)] + [(i, i + 1) for i in range(3, k)]
    return [(1, 4)] + [(i, i + 1) for i in range(2, k)]


def dynkin_matrix(t: AdeType) -> list[list[int]]:
    """-S: 2 on the diagonal, -1 for each diagram edge."""
    k = t.rank
    m = [[2 if i == j else 0 for j in range(k)] for i in range(k)]
    for a, b in dynkin_edges(t):
        m[a - 1][b - 1] = m[b - 1][a - 1] = -1
    return m


def path_det(k: int) -> int:
    """f(0) = 1, f(1) = 2, f(k) = 2 f(k-1) - f(k-2)."""
    if k < 0:
        raise ValueError("negative path length")
    prev, cur = 1, 2
    if k == 0:
        return prev
    for _ in range(k - 1):
        prev, cur = cur, 2 * cur - prev
    return cur


def det_recursive(t: AdeType) -> int:
    k = t.rank
    if t.family == "A":
        return path_det(k)
    if t.family == "D":
        return 2 * path_det(k - 1) - 2 * path_det(k - 3)
    return 2 * path_det(k - 1) - 3 * path_det(k - 4)


@dataclass(frozen=True)
class SpectralData:
    alphas: tuple[Fraction, ...]

    @property
    def denominator(self) -> int:
        return reduce(lcm, (a.denominator for a in self.alphas), 1)

    def exponents(self) -> list[int]:
        """p_j = m alpha_j mod m; needs m alpha_j integral."""
        m = self.denominator
        out = []
        for a in self.alphas:
            x = a * m
            if x.denominator != 1:
                raise ValueError(f"m*alpha = {x} is not integral")
            out.append(int(x) % m)
        return out


_E_SPECTRA = {
    6: (12, (13, 16, 19, 17, 20, 23)),  # x^4 + y^3 + z^2
    7: (18, (19, 23, 25, 27, 29, 31, 35)),  # x^3 + x y^3 + z^2
    8: (30, (31, 37, 43, 49, 41, 47, 53, 59)),  # x^5 + y^3 + z^2
}


def spectral_numbers(t: AdeType) -> SpectralData:
    k = t.rank
    if t.family == "A":
        # x^{k+1} + y^2 + z^2
        return SpectralData(tuple(Fraction(i, k + 1) + 1 for i in range(1, k + 1)))
    if t.family == "D":
        # x^{k-1} + x y^2 + z^2
        vals = [Fraction(2 * i - 1, 2 * (k - 1)) + 1 for i in range(1, k)]
        return SpectralData(tuple(vals) + (Fraction(3, 2),))
    den, nums = _E_SPECTRA[k]
    return SpectralData(tuple(Fraction(n, den) for n in nums))


def monodromy_det(s: SpectralData, order: Optional[int] = None) -> Fraction:
    """prod_j (1 - u^{p_j}) computed in Q(zeta_m); must come out rational."""
    m = order or s.denominator
    if m % s.denominator:
        raise ValueError("order must be a multiple of the spectral denominator")
    scale = m // s.denominator
    one = CycloElement.constant(m, 1)
    acc = one
    for p in s.exponents():
        acc = acc * (one - CycloElement.from_poly(m, PolyQ.monomial(p * scale)))
    q = acc.is_rational()
    if q is None:
        raise ValueError(f"product is not rational ({acc}); spectral data inconsistent")
    return q


def monodromy_product_mod(s: SpectralData, modulus: PolyQ) -> PolyQ:
    """Same product, reduced modulo an arbitrary polynomial; no rationality check."""
    acc = PolyQ.constant(1)
    for p in s.exponents():
        acc = (acc * (PolyQ.constant(1) - PolyQ.monomial(p))) % modulus
    return acc


def naive_modulus(m: int) -> PolyQ:
    """(u^m - 1)/(u - 1), the tempting but wrong replacement for Phi_m."""
    q, r = divmod(PolyQ.monomial(m) - 1, PolyQ.x() - 1)
    assert r.is_zero()
    return q


def negative_control(t: AdeType) -> dict:
    """Compare the product modulo Phi_m with the product modulo (u^m-1)/(u-1)."""
    s = spectral_numbers(t)
    m = s.denominator
    good = monodromy_product_mod(s, cyclotomic_polynomial(m))
    naive = monodromy_product_mod(s, naive_modulus(m))
    return {
        "type": str(t),
        "m": m,
        "moduli_equal": naive_modulus(m) == cyclotomic_polynomial(m),
        "cyclotomic": str(good),
        "naive": str(naive),
        "naive_rational": naive.degree <= 0,
        "differs": good != naive,
    }


def verify_coincidence(t: AdeType) -> dict:
    det_s = det_exact(dynkin_matrix(t))
    rec = det_recursive(t)
    mono = monodromy_det(spectral_numbers(t))
    return {
        "type": str(t),
        "det_S": int(det_s),
        "det_recursive": rec,
        "det_monodromy": int(mono) if mono.denominator == 1 else str(mono),
        "agree": abs(det_s) == abs(rec) == abs(mono),
    }
