"""Reflection arrangements G(m,m,n), G(m,1,n) and G31, plus small test fixtures."""

from __future__ import annotations

from itertools import combinations, product

from ..exactmath import CycloElement, root_of_unity
from .core import Arrangement, make_arrangement


def _zero(m: int) -> CycloElement:
    return CycloElement.constant(m, 0)


def _one(m: int) -> CycloElement:
    return CycloElement.constant(m, 1)


def coordinate_forms(m: int, dim: int) -> list[list[CycloElement]]:
    out = []
    for j in range(dim):
        f = [_zero(m)] * dim
        f[j] = _one(m)
        out.append(f)
    return out


def root_difference_forms(m: int, dim: int) -> list[list[CycloElement]]:
    """x_j - eta^p x_k for j < k and p in Z/m, eta = zeta_m."""
    out = []
    for j, k in combinations(range(dim), 2):
        for p in range(m):
            f = [_zero(m)] * dim
            f[j] = _one(m)
            f[k] = -root_of_unity(m, p)
            out.append(f)
    return out


def build_gmm(m: int, dim: int) -> Arrangement:
    """Reflection arrangement of G(m,m,dim): prod_{j<k} (x_j^m - x_k^m)."""
    if m < 1 or dim < 2:
        raise ValueError("G(m,m,n) needs m >= 1 and n >= 2")
    return make_arrangement(
        dim, m, root_difference_forms(m, dim), f"G({m},{m},{dim})", f"G(m,m,{dim})"
    )


def build_gm1(m: int, dim: int) -> Arrangement:
    """Reflection arrangement of G(m,1,dim): coordinate planes plus the G(m,m,dim) planes."""
    if m < 1 or dim < 2:
        raise ValueError("G(m,1,n) needs m >= 1 and n >= 2")
    forms = coordinate_forms(m, dim) + root_difference_forms(m, dim)
    return make_arrangement(dim, m, forms, f"G({m},1,{dim})", f"G(m,1,{dim})")


def build_g31() -> Arrangement:
    """Candidate hyperplane list for the G31 reflection arrangement in C^4 over Q(i).

    4 coordinate planes, the 24 forms x_j - i^k x_l, and the 32 forms
    x_1 + i^a x_2 + i^b x_3 + i^c x_4 with a + b + c even.  The data is not
    trusted on its own: the acceptance suite checks its codimension-3
    multiplicities.
    """
    m = 4
    forms = coordinate_forms(m, 4) + root_difference_forms(m, 4)
    for a, b, c in product(range(4), repeat=3):
        if (a + b + c) % 2:
            continue
        forms.append(
            [_one(m), root_of_unity(m, a), root_of_unity(m, b), root_of_unity(m, c)]
        )
    return make_arrangement(4, m, forms, "G31", "G31")


def build_boolean(dim: int) -> Arrangement:
    return make_arrangement(dim, 1, coordinate_forms(1, dim), f"Boolean({dim})", "Boolean")


BUILDERS = {
    "gmm": build_gmm,
    "gm1": build_gm1,
    "g31": build_g31,
}
