"""Exact matrices over Q or Q(zeta_m): row reduction, determinants, projectors."""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from typing import Any, Iterable, Sequence

from .cyclo import CycloElement
from .poly import PolyQ, poly_extended_gcd


def _is_zero(x) -> bool:
    return not x


class Matrix:
    """Immutable rectangular matrix; entries are ints, Fractions or CycloElements.

    Cyclotomic entries must share one order.  ``one`` and ``zero`` are derived
    from the entries so that identity-like helpers stay in the right field.
    """

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Sequence[Any]]):
        rows = tuple(tuple(r) for r in rows)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged matrix")
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = len(rows[0]) if rows else 0

    @classmethod
    def identity(cls, n: int, one: Any = Fraction(1)) -> "Matrix":
        zero = one - one
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n: int, m: int, zero: Any = Fraction(0)) -> "Matrix":
        return cls([[zero] * m for _ in range(n)])

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def _unit(self) -> Any:
        for r in self.rows:
            for x in r:
                if isinstance(x, CycloElement):
                    return CycloElement.constant(x.order, 1)
        return Fraction(1)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for ra, rb in zip(self.rows, other.rows) for a, b in zip(ra, rb)
        )

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"Matrix({[list(r) for r in self.rows]!r})"

    def transpose(self) -> "Matrix":
        return Matrix(zip(*self.rows)) if self.rows else Matrix([])

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix(
            [a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix(
            [a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)
        )

    def __neg__(self) -> "Matrix":
        return Matrix([-a for a in r] for r in self.rows)

    def scale(self, c) -> "Matrix":
        return Matrix([c * a for a in r] for r in self.rows)

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            return self.scale(other)
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch in product")
        cols = other.transpose().rows
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                acc = r[0] * c[0] if r else 0
                for a, b in zip(r[1:], c[1:]):
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return Matrix(out)

    def __rmul__(self, c):
        return self.scale(c)

    def is_zero(self) -> bool:
        return all(_is_zero(x) for r in self.rows for x in r)


def rref_rows(rows: Sequence[Sequence[Any]]) -> tuple[list[list[Any]], list[int]]:
    """Gauss-Jordan elimination; returns the nonzero reduced rows and pivot columns."""
    work = [list(r) for r in rows]
    ncols = len(work[0]) if work else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(work)) if work[i][c]), None)
        if p is None:
            continue
        work[r], work[p] = work[p], work[r]
        inv = 1 / work[r][c]
        work[r] = [x * inv for x in work[r]]
        pr = work[r]
        for i in range(len(work)):
            if i != r and work[i][c]:
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], pr)]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return work[:r], pivots


def rref(m: Matrix) -> tuple[Matrix, int, list[int]]:
    """Reduced row echelon form; the returned matrix keeps the zero rows at the bottom."""
    reduced, pivots = rref_rows(m.rows)
    zero = (m._unit() - m._unit())
    pad = [[zero] * m.ncols for _ in range(m.nrows - len(reduced))]
    return Matrix(reduced + pad), len(pivots), pivots


def rank(m: Matrix) -> int:
    return len(rref_rows(m.rows)[1])


def det_exact(m) -> Any:
    """Determinant by Bareiss fraction-free elimination.

    Integer matrices stay in the integers (exact division); field entries use
    field division.  Accepts a :class:`Matrix` or a nested sequence.
    """
    rows = [list(r) for r in (m.rows if isinstance(m, Matrix) else m)]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    integral = all(isinstance(x, int) for r in rows for x in r)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if not rows[k][k]:
            p = next((i for i in range(k + 1, n) if rows[i][k]), None)
            if p is None:
                return rows[k][k] * 0
            rows[k], rows[p] = rows[p], rows[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = rows[i][j] * rows[k][k] - rows[i][k] * rows[k][j]
                rows[i][j] = num // prev if integral else num / prev
            rows[i][k] = rows[i][k] * 0
        prev = rows[k][k]
    return rows[n - 1][n - 1] if sign > 0 else -rows[n - 1][n - 1]


def det_cofactor(m) -> Any:
    """Leibniz expansion; exponential, only used as an independent check."""
    rows = [list(r) for r in (m.rows if isinstance(m, Matrix) else m)]
    n = len(rows)
    total = 0
    for perm in permutations(range(n)):
        inv = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
        term = 1
        for i, j in enumerate(perm):
            term = term * rows[i][j]
        total = total + (term if inv % 2 == 0 else -term)
    return total


def poly_at_matrix(p: PolyQ, t: Matrix) -> Matrix:
    """Evaluate p(T) by Horner's rule."""
    if t.nrows != t.ncols:
        raise ValueError("polynomial of a non-square matrix")
    one = t._unit()
    ident = Matrix.identity(t.nrows, one)
    acc = Matrix.zeros(t.nrows, t.ncols, one - one)
    for c in reversed(p.coeffs):
        acc = acc * t + ident.scale(c)
    return acc


def companion_matrix(p: PolyQ) -> Matrix:
    """Companion matrix of a monic-normalised p; its minimal polynomial is p."""
    if p.degree < 1:
        raise ValueError("companion matrix needs degree >= 1")
    p = p.monic()
    n = p.degree
    zero, one = Fraction(0), Fraction(1)
    rows = [[zero] * n for _ in range(n)]
    for i in range(1, n):
        rows[i][i - 1] = one
    for i in range(n):
        rows[i][n - 1] = -p.coeffs[i]
    return Matrix(rows)


def bezout_projectors(p1: PolyQ, p2: PolyQ, t_matrix: Matrix) -> tuple[Matrix, Matrix]:
    """Complementary idempotents splitting T along a coprime factorisation p1*p2.

    With ``p1*q1 + p2*q2 = 1`` the returned ``pi1`` projects onto ker p1(T)
    (it equals p2(T) q2(T)) and ``pi2`` onto ker p2(T).
    """
    g, q1, q2 = poly_extended_gcd(p1, p2)
    if g.degree != 0:
        raise ValueError(f"factors are not coprime (gcd {g})")
    if not poly_at_matrix(p1 * p2, t_matrix).is_zero():
        raise ValueError("p1*p2 does not annihilate the matrix")
    pi1 = poly_at_matrix(p2 * q2, t_matrix)
    pi2 = poly_at_matrix(p1 * q1, t_matrix)
    return pi1, pi2
