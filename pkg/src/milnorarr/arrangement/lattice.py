"""Codimension-2 and -3 flats of a central arrangement.

A flat is identified by the reduced row echelon basis of the linear forms
vanishing on it, so two flats are equal exactly when their keys agree,
independently of which hyperplanes produced them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from itertools import combinations
from math import gcd
from typing import Optional, Sequence

from ..exactmath import CycloElement
from .core import Arrangement, Form

DEFAULT_PROFILE_LIMIT = 24


class ProfileUnavailable(ValueError):
    """Decomposition search refused: too many member hyperplanes."""


# -- row-space helpers on rref bases ---------------------------------------


def reduce_against(basis: Sequence[Form], pivots: Sequence[int], v: Sequence) -> list:
    v = list(v)
    for row, p in zip(basis, pivots):
        c = v[p]
        if c:
            v = [x - c * y for x, y in zip(v, row)]
    return v


def in_span(basis: Sequence[Form], pivots: Sequence[int], v: Sequence) -> bool:
    return not any(reduce_against(basis, pivots, v))


def extend_basis(
    basis: Sequence[Form], pivots: Sequence[int], v: Sequence
) -> Optional[tuple[tuple[Form, ...], tuple[int, ...]]]:
    """RREF basis of span(basis, v), or ``None`` if v is already in the span."""
    r = reduce_against(basis, pivots, v)
    q = next((i for i, x in enumerate(r) if x), None)
    if q is None:
        return None
    inv = 1 / r[q]
    r = tuple(x * inv for x in r)
    rows = []
    for row in basis:
        c = row[q]
        rows.append(tuple(x - c * y for x, y in zip(row, r)) if c else tuple(row))
    rows.append(r)
    piv = list(pivots) + [q]
    order = sorted(range(len(rows)), key=lambda k: piv[k])
    return tuple(rows[k] for k in order), tuple(piv[k] for k in order)


def span_basis(forms: Sequence[Form]) -> tuple[tuple[Form, ...], tuple[int, ...]]:
    basis: tuple = ()
    pivots: tuple = ()
    for f in forms:
        ext = extend_basis(basis, pivots, f)
        if ext is not None:
            basis, pivots = ext
    return basis, pivots


def basis_key(basis: Sequence[Form]) -> tuple:
    return tuple(tuple(c.key for c in row) for row in basis)


def null_vectors(basis: Sequence[Form], pivots: Sequence[int], dim: int) -> list[list]:
    """Sparse kernel basis of an rref basis, one vector per free column.

    Each vector is a list of (column, coefficient) pairs; a form lies in the
    row space iff it pairs to zero with all of them.
    """
    pset = set(pivots)
    out = []
    for f in range(dim):
        if f in pset:
            continue
        vec = [(f, None)]
        for row, p in zip(basis, pivots):
            if row[f]:
                vec.append((p, -row[f]))
        out.append(vec)
    return out


def _annihilates(null, form: Sequence) -> bool:
    for vec in null:
        acc = form[vec[0][0]]
        for c, x in vec[1:]:
            y = form[c]
            if y:
                acc = acc + y * x
        if acc:
            return False
    return True


# -- data types ------------------------------------------------------------


@dataclass(frozen=True)
class Edge:
    """A flat of codimension 2 or 3 with its member hyperplanes."""

    codim: int
    basis: tuple[Form, ...]
    pivots: tuple[int, ...]
    members: tuple[int, ...]
    support_size: int
    profile: Optional[tuple[int, ...]] = None

    @property
    def multiplicity(self) -> int:
        return len(self.members)

    @property
    def key(self) -> tuple:
        return basis_key(self.basis)

    def contains_form(self, form: Sequence) -> bool:
        return in_span(self.basis, self.pivots, form)

    def local_coordinates(self, form: Sequence) -> tuple:
        """Coordinates of a form of the flat's row space in the rref basis."""
        return tuple(form[p] for p in self.pivots)


@dataclass(frozen=True)
class Incidence:
    """Pairs (j, i) of a codim-3 edge j on the closure of a codim-2 edge i."""

    pairs: tuple[tuple[int, int], ...]
    transversal: dict = field(default_factory=dict, compare=False)

    def transversal_count(self, j: int, i: int) -> int:
        return self.transversal[(j, i)]


@dataclass
class Lattice:
    arrangement: Arrangement
    edges2: list[Edge]
    edges3: list[Edge]
    incidence: Incidence
    points_of: dict[int, tuple[int, ...]]
    lines_of: dict[int, tuple[int, ...]]

    def incident_points(self, i: int) -> tuple[int, ...]:
        return self.points_of.get(i, ())

    def e_gcd(self, i: int) -> int:
        return e_gcd(self, i)


def _support(basis: Sequence[Form]) -> int:
    return sum(1 for c in range(len(basis[0])) if any(row[c] for row in basis))


def _sorted_edges(found: dict[tuple, Edge]) -> list[Edge]:
    return [found[k] for k in sorted(found)]


def _finish(arr: Arrangement, codim: int, basis, pivots, profile_limit) -> Edge:
    null = null_vectors(basis, pivots, arr.ambient_dim)
    members = tuple(c for c, h in enumerate(arr.hyperplanes) if _annihilates(null, h))
    edge = Edge(codim, basis, pivots, members, _support(basis))
    try:
        prof = decomposition_profile(edge, arr, profile_limit)
    except ProfileUnavailable:
        prof = None
    return Edge(codim, basis, pivots, members, edge.support_size, prof)


def codim2_edges(arr: Arrangement, profile_limit: int = DEFAULT_PROFILE_LIMIT) -> list[Edge]:
    """All rank-2 flats, each once, ordered by canonical basis."""
    if arr.ambient_dim < 2:
        return []
    H = arr.hyperplanes
    found: dict[tuple, Edge] = {}
    for a in range(len(H)):
        b1, p1 = span_basis([H[a]])
        covered = {a}
        for b in range(a + 1, len(H)):
            if b in covered:
                continue
            basis, pivots = extend_basis(b1, p1, H[b])
            key = basis_key(basis)
            edge = found.get(key)
            if edge is None:
                edge = found[key] = _finish(arr, 2, basis, pivots, profile_limit)
            covered.update(edge.members)
    return _sorted_edges(found)


def codim3_edges(
    arr: Arrangement,
    edges2: Optional[list[Edge]] = None,
    profile_limit: int = DEFAULT_PROFILE_LIMIT,
) -> list[Edge]:
    """All rank-3 flats, found by extending every rank-2 flat by one hyperplane."""
    if arr.ambient_dim < 3:
        return []
    if edges2 is None:
        edges2 = codim2_edges(arr, profile_limit)
    H = arr.hyperplanes
    found: dict[tuple, Edge] = {}
    for e in edges2:
        covered = set(e.members)
        for c in range(len(H)):
            if c in covered:
                continue
            basis, pivots = extend_basis(e.basis, e.pivots, H[c])
            key = basis_key(basis)
            edge = found.get(key)
            if edge is None:
                edge = found[key] = _finish(arr, 3, basis, pivots, profile_limit)
            covered.update(edge.members)
    return _sorted_edges(found)


def incidences(edges2: Sequence[Edge], edges3: Sequence[Edge]) -> Incidence:
    """(j, i) whenever the row space of line i lies in the row space of point j.

    Candidates are points containing the first two members of i; each is then
    confirmed by the exact row-space inclusion test.
    """
    by_member: dict[int, set[int]] = {}
    for j, p in enumerate(edges3):
        for h in p.members:
            by_member.setdefault(h, set()).add(j)
    pairs = []
    transversal = {}
    for i, line in enumerate(edges2):
        a, b = line.members[:2]
        for j in sorted(by_member.get(a, set()) & by_member.get(b, set())):
            point = edges3[j]
            if all(point.contains_form(row) for row in line.basis):
                pairs.append((j, i))
                transversal[(j, i)] = point.multiplicity - line.multiplicity
    pairs.sort()
    return Incidence(tuple(pairs), transversal)


def compute_lattice(arr: Arrangement, profile_limit: int = DEFAULT_PROFILE_LIMIT) -> Lattice:
    e2 = codim2_edges(arr, profile_limit)
    e3 = codim3_edges(arr, e2, profile_limit)
    inc = incidences(e2, e3)
    points_of: dict[int, list[int]] = {}
    lines_of: dict[int, list[int]] = {}
    for j, i in inc.pairs:
        points_of.setdefault(i, []).append(j)
        lines_of.setdefault(j, []).append(i)
    return Lattice(
        arr,
        e2,
        e3,
        inc,
        {k: tuple(sorted(v)) for k, v in points_of.items()},
        {k: tuple(sorted(v)) for k, v in lines_of.items()},
    )


def e_gcd(lattice: Lattice, i: int) -> int:
    """gcd of m_i and the multiplicities of the codim-3 edges on line i."""
    points = lattice.incident_points(i)
    if not points:
        raise ValueError(
            f"codim-2 edge {i} has no incident codim-3 edge (ambient rank below 3?)"
        )
    m_i = lattice.edges2[i].multiplicity
    return reduce(gcd, (lattice.edges3[j].multiplicity for j in points), m_i)


# -- decomposition profiles ------------------------------------------------


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, *xs: int) -> bool:
        roots = {self.find(x) for x in xs}
        if len(roots) < 2:
            return False
        first, *rest = roots
        for r in rest:
            self.parent[r] = first
        return True

    def blocks(self) -> int:
        return len({self.find(x) for x in range(len(self.parent))})


def _det2(u, v):
    return u[0] * v[1] - u[1] * v[0]


def _det3(u, v, w):
    return (
        u[0] * (v[1] * w[2] - v[2] * w[1])
        - u[1] * (v[0] * w[2] - v[2] * w[0])
        + u[2] * (v[0] * w[1] - v[1] * w[0])
    )


def local_components(vectors: Sequence[Sequence[CycloElement]]) -> list[list[int]]:
    """Connected components of the vector matroid of pairwise non-parallel vectors.

    Works in rank 2 or 3: two vectors share a component iff some circuit
    contains both, and circuits here have at most rank + 1 elements.
    """
    n = len(vectors)
    if n == 0:
        return []
    r = len(vectors[0])
    uf = _UnionFind(n)
    if r == 2:
        if n >= 3:
            uf.union(*range(n))
    elif r == 3:
        dependent = set()
        for t in combinations(range(n), 3):
            if not _det3(*(vectors[k] for k in t)):
                dependent.add(t)
                uf.union(*t)
                if uf.blocks() == 1:
                    break
        if uf.blocks() > 1:
            for q in combinations(range(n), 4):
                if len({uf.find(k) for k in q}) == 1:
                    continue
                if any(t in dependent for t in combinations(q, 3)):
                    continue
                uf.union(*q)
                if uf.blocks() == 1:
                    break
    elif r != 1:
        raise ValueError(f"local components implemented for rank <= 3, got {r}")
    groups: dict[int, list[int]] = {}
    for k in range(n):
        groups.setdefault(uf.find(k), []).append(k)
    return sorted(groups.values())


def decomposition_profile(
    edge: Edge, arr: Arrangement, limit: int = DEFAULT_PROFILE_LIMIT
) -> tuple[int, ...]:
    """Degrees of the indecomposable factors of the local arrangement, descending."""
    if edge.multiplicity > limit:
        raise ProfileUnavailable(
            f"profile unavailable: {edge.multiplicity} members exceed limit {limit}"
        )
    vecs = [edge.local_coordinates(arr.hyperplanes[h]) for h in edge.members]
    comps = local_components(vecs)
    return tuple(sorted((len(c) for c in comps), reverse=True))
