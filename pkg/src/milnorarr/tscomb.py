"""Eigenvalue bookkeeping for Thom-Sebastiani sums and monomial joins.

Spectra are multisets of roots of unity.  The rank formulas for
x^a + y^b type cones and for f = x1^a1 x2^a2 + y1^b1 y2^b2 are reproduced
twice: by closed form and by explicit counting over eigen-pairs.  The
geometric hypotheses behind those formulas (irreducibility, normal crossings
away from the singular locus) are not checked here; outputs are arithmetic
consequences conditional on them.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product
from math import gcd
from typing import Iterable, Iterator

from .exactmath import Eigenvalue


class EigenSpectrum:
    """Finite multiset of roots of unity."""

    __slots__ = ("_counts",)

    def __init__(self, items: Iterable[Eigenvalue] | dict = ()):
        c = Counter(items) if not isinstance(items, dict) else Counter(items)
        self._counts = Counter({k: v for k, v in c.items() if v > 0})

    def multiplicity(self, lam: Eigenvalue) -> int:
        return self._counts.get(lam, 0)

    def mult_one(self) -> int:
        return self.multiplicity(Eigenvalue.one())

    def total(self) -> int:
        return sum(self._counts.values())

    def __len__(self) -> int:
        return self.total()

    def items(self) -> list[tuple[Eigenvalue, int]]:
        return sorted(self._counts.items())

    def __iter__(self) -> Iterator[Eigenvalue]:
        for lam, n in self.items():
            for _ in range(n):
                yield lam

    def __eq__(self, other) -> bool:
        return isinstance(other, EigenSpectrum) and self._counts == other._counts

    def __repr__(self) -> str:
        body = ", ".join(f"{lam.k}/{lam.d}" + (f"^{n}" if n > 1 else "") for lam, n in self.items())
        return f"EigenSpectrum({{{body}}})"

    def to_json(self) -> list:
        return [[lam.k, lam.d, n] for lam, n in self.items()]


def one_var_spectrum(a: int) -> EigenSpectrum:
    """Reduced H^0 of the fiber of x^a: zeta_a^k for 1 <= k < a."""
    if a < 1:
        raise ValueError("exponent must be >= 1")
    return EigenSpectrum(Eigenvalue(k, a) for k in range(1, a))


def roots_spectrum(a: int) -> EigenSpectrum:
    """Unreduced H^0 of a points: every a-th root of unity once."""
    if a < 1:
        raise ValueError("exponent must be >= 1")
    return EigenSpectrum(Eigenvalue(k, a) for k in range(a))


def ts_tensor(s1: EigenSpectrum, s2: EigenSpectrum) -> EigenSpectrum:
    """Spectrum of T' (x) T'': all products, multiplicities multiplied."""
    c: Counter = Counter()
    for (l1, n1), (l2, n2) in product(s1.items(), s2.items()):
        c[l1 * l2] += n1 * n2
    return EigenSpectrum(dict(c))


def total_rank_sum_of_two(a: int, b: int) -> int:
    """Milnor number (a-1)(b-1) of x^a + y^b, checked against the tensor count."""
    if a < 2 or b < 2:
        raise ValueError("exponents must be >= 2")
    closed = (a - 1) * (b - 1)
    counted = ts_tensor(one_var_spectrum(a), one_var_spectrum(b)).total()
    if closed != counted:
        raise AssertionError(f"rank mismatch for ({a},{b}): {closed} vs {counted}")
    return closed


@dataclass(frozen=True)
class MonomialPairConfig:
    """Exponents of f = x1^a1 x2^a2 + y1^b1 y2^b2."""

    a1: int
    a2: int
    b1: int
    b2: int

    def __post_init__(self):
        if min(self.a1, self.a2, self.b1, self.b2) < 1:
            raise ValueError("exponents must be >= 1")

    @property
    def a0(self) -> int:
        return gcd(self.a1, self.a2)

    @property
    def b0(self) -> int:
        return gcd(self.b1, self.b2)

    def a(self, i: int) -> int:
        return (self.a1, self.a2)[i - 1]

    def b(self, j: int) -> int:
        return (self.b1, self.b2)[j - 1]


GEN_X, GEN_Y = "T_x", "T_y"


def _check_component(i: int, j: int) -> None:
    if i not in (1, 2) or j not in (1, 2):
        raise ValueError(f"component indices must be 1 or 2, got ({i},{j})")


def invariant_rank_brute(
    cfg: MonomialPairConfig, component: tuple[int, int], generators: Iterable[str] = ()
) -> int:
    """Count pairs (k, l) fixed by the chosen local-system monodromies.

    On L_{i,j} the pairs range over 1 <= k < a_{i'}, 1 <= l < b_{j'}; T_{x_i}
    acts on the k-th factor by zeta^{-k a_i} with zeta a primitive a_{i'}-th
    root, so it fixes the pair iff a_{i'} | k a_i, and symmetrically for y.
    """
    i, j = component
    _check_component(i, j)
    gens = set(generators)
    if gens - {GEN_X, GEN_Y}:
        raise ValueError(f"unknown generators {sorted(gens - {GEN_X, GEN_Y})}")
    ai, aip = cfg.a(i), cfg.a(3 - i)
    bj, bjp = cfg.b(j), cfg.b(3 - j)
    count = 0
    for k in range(1, aip):
        if GEN_X in gens and (k * ai) % aip:
            continue
        for l in range(1, bjp):
            if GEN_Y in gens and (l * bj) % bjp:
                continue
            count += 1
    return count


def invariant_rank_closed(
    cfg: MonomialPairConfig, component: tuple[int, int], generators: Iterable[str] = ()
) -> int:
    i, j = component
    _check_component(i, j)
    gens = set(generators)
    x = cfg.a0 if GEN_X in gens else cfg.a(3 - i)
    y = cfg.b0 if GEN_Y in gens else cfg.b(3 - j)
    return (x - 1) * (y - 1)


def invariant_rank(
    cfg: MonomialPairConfig, component: tuple[int, int], generators: Iterable[str] = ()
) -> int:
    """Invariant rank by counting; raises if the closed form disagrees."""
    gens = tuple(generators)
    brute = invariant_rank_brute(cfg, component, gens)
    closed = invariant_rank_closed(cfg, component, gens)
    if brute != closed:
        raise AssertionError(f"invariant rank mismatch {cfg} {component} {gens}: {brute} vs {closed}")
    return brute


def h1_rank_monomial_pair(cfg: MonomialPairConfig) -> int:
    """rk H^1 of the fiber of x1^a1 x2^a2 + y1^b1 y2^b2: (a0-1)(b0-1)."""
    return (cfg.a0 - 1) * (cfg.b0 - 1)


def h1_rank_via_tensor(cfg: MonomialPairConfig) -> int:
    """Same rank by Thom-Sebastiani: reduced H^0 of x1^a1 x2^a2 is one_var_spectrum(a0)."""
    return ts_tensor(one_var_spectrum(cfg.a0), one_var_spectrum(cfg.b0)).total()


def product_with_linear_rank(
    h0_spec: EigenSpectrum, h1_spec: EigenSpectrum, homogeneous: bool = True
) -> int:
    """rk H^1 of the fiber of g*w for a new variable w.

    Uses the long exact sequence with connecting map T - id on the fiber of
    g: for finite-order (so semisimple) monodromy, the kernel and cokernel of
    T - id both have dimension equal to the eigenvalue-1 multiplicity.  The
    spectra are the unreduced H^0 and H^1 of the fiber of g.
    """
    if not homogeneous:
        raise ValueError("only homogeneous g is supported: semisimplicity is not known otherwise")
    return h1_spec.mult_one() + h0_spec.mult_one()


def lines_h1_spectrum(a: int) -> EigenSpectrum:
    """H^1 of the fiber of x^a + y^a (a lines): tensor of two reduced x^a spectra."""
    return ts_tensor(one_var_spectrum(a), one_var_spectrum(a))


def transversal_eigen_dim(a: int, lam: Eigenvalue) -> int:
    """dim H^1(F_h)_lambda for h = x^a + y^a, from the tensor spectrum."""
    return lines_h1_spectrum(a).multiplicity(lam)


def cone_pair_rank(a: int, b: int) -> tuple[int, int, int]:
    """(Milnor rank (a-1)(b-1), unipotent rank e-1, final rank e) with e = gcd(a, b)."""
    if a < 2 or b < 2:
        raise ValueError("exponents must be >= 2")
    e = gcd(a, b)
    unip = ts_tensor(one_var_spectrum(a), one_var_spectrum(b)).mult_one()
    if unip != e - 1:
        raise AssertionError(f"unipotent rank mismatch for ({a},{b})")
    # unipotent part e-1 plus the e coming from the linear factor, minus the e-1 cancelled by T - id
    return total_rank_sum_of_two(a, b), unip, (e - 1) + e - (e - 1)


def global_sections_rank(a: int, d: int) -> int:
    """e'(a-2) + 1 with e' = gcd(a, d)."""
    if a < 2 or d < 1:
        raise ValueError("need a >= 2 and d >= 1")
    return gcd(a, d) * (a - 2) + 1


def verify_monomial_pair(cfg: MonomialPairConfig) -> dict:
    """Closed forms against brute force for all four components and generator sets."""
    rows = []
    agree = True
    for comp in ((1, 1), (1, 2), (2, 1), (2, 2)):
        for gens in ((), (GEN_X,), (GEN_Y,), (GEN_X, GEN_Y)):
            b = invariant_rank_brute(cfg, comp, gens)
            c = invariant_rank_closed(cfg, comp, gens)
            agree &= b == c
            rows.append({"component": list(comp), "generators": list(gens), "closed_form": c, "brute_force": b})
    h1 = h1_rank_monomial_pair(cfg)
    via = h1_rank_via_tensor(cfg)
    both = invariant_rank_brute(cfg, (1, 1), (GEN_X, GEN_Y))
    agree &= h1 == via == both
    return {
        "exponents": [cfg.a1, cfg.a2, cfg.b1, cfg.b2],
        "h1_rank": {"closed_form": h1, "brute_force": via, "invariant_count": both},
        "invariant_ranks": rows,
        "agree": agree,
    }
