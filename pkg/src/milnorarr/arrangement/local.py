"""Local arrangements at codimension-3 flats and their identification.

The local arrangement at a rank-3 flat is the set of member hyperplanes,
written in the coordinates of the flat's rref basis.  Only one family needs
recognising for the vanishing oracle, the G(m',m',3) reflection
arrangements, and that is done by an explicit projective isomorphism search
rather than by comparing combinatorial fingerprints.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd
from typing import Optional, Sequence

from ..exactmath import CycloElement
from .builders import root_difference_forms
from .core import normalize_form
from .lattice import Lattice, _det3

LocalForm = tuple[CycloElement, ...]


@dataclass(frozen=True)
class LocalType:
    """Rank-3 local arrangement at the codim-3 edge ``point``."""

    point: int
    degree: int
    profile: Optional[tuple[int, ...]]
    forms: tuple[LocalForm, ...]
    line_multiplicities: tuple[int, ...]
    pair_multiplicity: dict
    support_size: int
    label: str = ""

    @property
    def order(self) -> int:
        return self.forms[0][0].order

    def fingerprint(self) -> dict:
        return {
            "degree": self.degree,
            "profile": list(self.profile) if self.profile is not None else None,
            "label": self.label,
        }


def local_type(lattice: Lattice, j: int) -> LocalType:
    """Local type of codim-3 edge ``j``, labelled ``G(m',m',3)`` when it is one."""
    edge = lattice.edges3[j]
    H = lattice.arrangement.hyperplanes
    forms = tuple(edge.local_coordinates(H[h]) for h in edge.members)
    pos = {h: k for k, h in enumerate(edge.members)}
    pair_mult: dict[tuple[int, int], int] = {}
    mults = []
    for i in lattice.lines_of.get(j, ()):
        line = lattice.edges2[i]
        mults.append(line.multiplicity)
        idx = [pos[h] for h in line.members]
        for a, b in combinations(sorted(idx), 2):
            pair_mult[(a, b)] = line.multiplicity
    lt = LocalType(
        j,
        edge.multiplicity,
        edge.profile,
        forms,
        tuple(sorted(mults)),
        pair_mult,
        edge.support_size,
    )
    mp = identify_gmm3(lt)
    if mp is not None:
        lt = LocalType(
            lt.point, lt.degree, lt.profile, lt.forms, lt.line_multiplicities,
            lt.pair_multiplicity, lt.support_size, f"G({mp},{mp},3)",
        )
    return lt


def gmm3_line_multiplicities(mp: int) -> tuple[int, ...]:
    """Rank-2 flat sizes of G(m',m',3): three of size m' and m'^2 triple lines."""
    return tuple(sorted([mp] * 3 + [3] * (mp * mp)))


def _solve3(rows: Sequence[LocalForm], v: LocalForm) -> Optional[tuple]:
    # coordinates of v in the basis rows (Cramer), or None if rows are dependent
    r0, r1, r2 = rows
    det = _det3(r0, r1, r2)
    if not det:
        return None
    inv = det.inverse()
    return (
        _det3(v, r1, r2) * inv,
        _det3(r0, v, r2) * inv,
        _det3(r0, r1, v) * inv,
    )


def _pair_table(forms: Sequence[LocalForm]) -> dict[tuple[int, int], int]:
    n = len(forms)
    table = {}
    for a, b in combinations(range(n), 2):
        table[(a, b)] = 2 + sum(
            1 for c in range(n) if c not in (a, b) and not _det3(forms[a], forms[b], forms[c])
        )
    return table


def _pm(table: dict, a: int, b: int) -> int:
    return table[(a, b) if a < b else (b, a)]


def projective_isomorphism(
    source: Sequence[LocalForm],
    target: Sequence[LocalForm],
    source_pairs: Optional[dict] = None,
    transitive: bool = False,
) -> Optional[tuple[int, ...]]:
    """A bijection target -> source induced by a linear change of coordinates.

    Returns ``perm`` with ``target[k]`` carried onto ``source[perm[k]]`` up to
    a scalar, or ``None``.  Both lists must share one cyclotomic order.  With
    ``transitive=True`` the first frame form is sent only to ``source[0]``,
    which is valid when the target's symmetry group is transitive on its
    hyperplanes.
    """
    n = len(source)
    if n != len(target) or n < 4:
        return None
    src = [normalize_form(f) for f in source]
    keys = {tuple(c.key for c in f): k for k, f in enumerate(src)}
    if len(keys) != n:
        return None
    sp = source_pairs if source_pairs is not None else _pair_table(src)
    tp = _pair_table(target)

    # frame in the target: an independent triple plus a form off all three planes
    tf = None
    for t in combinations(range(n), 3):
        if _det3(*(target[k] for k in t)):
            for d in range(n):
                if d in t:
                    continue
                beta = _solve3([target[k] for k in t], target[d])
                if all(beta):
                    tf = (t, d, beta)
                    break
        if tf:
            break
    if tf is None:
        return None
    (t1, t2, t3), t4, beta = tf
    tbasis = [target[t1], target[t2], target[t3]]
    tcoords = [_solve3(tbasis, f) for f in target]

    firsts = [0] if transitive else range(n)
    for a in firsts:
        for b in range(n):
            if b == a or sp_mismatch(sp, tp, (a, t1), (b, t2)):
                continue
            for c in range(n):
                if c in (a, b):
                    continue
                if sp_mismatch(sp, tp, (a, t1), (c, t3)) or sp_mismatch(sp, tp, (b, t2), (c, t3)):
                    continue
                sbasis = [src[a], src[b], src[c]]
                if not _det3(*sbasis):
                    continue
                for d in range(n):
                    if d in (a, b, c):
                        continue
                    if any(
                        sp_mismatch(sp, tp, (x, tx), (d, t4))
                        for x, tx in ((a, t1), (b, t2), (c, t3))
                    ):
                        continue
                    alpha = _solve3(sbasis, src[d])
                    if alpha is None or not all(alpha):
                        continue
                    gamma = beta[0] / alpha[0]
                    scale = [gamma * alpha[k] / beta[k] for k in range(3)]
                    perm = _try_map(tcoords, sbasis, scale, keys)
                    if perm is not None:
                        return perm
    return None


def sp_mismatch(sp: dict, tp: dict, x: tuple[int, int], y: tuple[int, int]) -> bool:
    """True if source pair (x0, y0) and target pair (x1, y1) lie on lines of different size."""
    return _pm(sp, x[0], y[0]) != _pm(tp, x[1], y[1])


def _try_map(tcoords, sbasis, scale, keys) -> Optional[tuple[int, ...]]:
    out = []
    seen = set()
    for tau in tcoords:
        img = [sum((tau[k] * scale[k] * sbasis[k][c] for k in range(3)), 0 * tau[0]) for c in range(3)]
        key = tuple(x.key for x in normalize_form(img))
        k = keys.get(key)
        if k is None or k in seen:
            return None
        seen.add(k)
        out.append(k)
    return tuple(out)


def gmm3_forms(mp: int, order: int) -> list[LocalForm]:
    """G(m',m',3) forms with coefficients lifted to Q(zeta_order), m' | order."""
    return [tuple(c.lift(order) for c in f) for f in root_difference_forms(mp, 3)]


def identify_gmm3(lt: LocalType) -> Optional[int]:
    """m' if the local type is projectively G(m',m',3) with m' >= 2, else None."""
    if lt.degree % 3 or lt.degree < 6:
        return None
    mp = lt.degree // 3
    if lt.line_multiplicities and lt.line_multiplicities != gmm3_line_multiplicities(mp):
        return None
    src_order = lt.order
    order = src_order * mp // gcd(src_order, mp)
    source = [tuple(c.lift(order) for c in f) for f in lt.forms]
    target = gmm3_forms(mp, order)
    pairs = None
    if lt.pair_multiplicity and len(lt.pair_multiplicity) == lt.degree * (lt.degree - 1) // 2:
        # pair sizes are unchanged by normalisation; reuse the lattice data
        pairs = lt.pair_multiplicity
    perm = projective_isomorphism(source, target, pairs, transitive=True)
    return mp if perm is not None else None
