from __future__ import annotations

from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from milnorarr.exactmath import (
    CycloElement,
    Eigenvalue,
    Matrix,
    PolyQ,
    bezout_projectors,
    companion_matrix,
    cyclo_from_json,
    cyclotomic_polynomial,
    det_cofactor,
    det_exact,
    parse_rational,
    poly_at_matrix,
    poly_extended_gcd,
    rank,
    root_of_unity,
    rref,
    totient,
)
from milnorarr.exactmath.cyclo import divisors


@pytest.mark.parametrize("n", range(1, 65))
def test_cyclotomic_product_identity(n):
    # u^n - 1 is the product of Phi_d over d | n
    prod = PolyQ.constant(1)
    for d in divisors(n):
        prod = prod * cyclotomic_polynomial(d)
    assert prod == PolyQ.monomial(n) - 1
    assert cyclotomic_polynomial(n).degree == totient(n)


def test_small_cyclotomics():
    assert cyclotomic_polynomial(1) == PolyQ([-1, 1])
    assert cyclotomic_polynomial(4) == PolyQ([1, 0, 1])
    assert cyclotomic_polynomial(6) == PolyQ([1, -1, 1])
    assert cyclotomic_polynomial(12) == PolyQ([1, 0, -1, 0, 1])


ORDERS = st.sampled_from([1, 2, 3, 4, 5, 6, 8, 12])
SMALL = st.fractions(min_value=-5, max_value=5, max_denominator=7)


@st.composite
def elements(draw, order=None):
    m = order if order is not None else draw(ORDERS)
    coeffs = draw(st.lists(SMALL, min_size=totient(m), max_size=totient(m)))
    return CycloElement(m, coeffs)


@st.composite
def triples(draw):
    m = draw(ORDERS)
    return draw(elements(m)), draw(elements(m)), draw(elements(m))


@settings(max_examples=150, deadline=None)
@given(triples())
def test_field_axioms(t):
    a, b, c = t
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0 * a
    if a:
        assert a * a.inverse() == CycloElement.constant(a.order, 1)
        assert (b / a) * a == b


@settings(max_examples=80, deadline=None)
@given(elements())
def test_key_is_canonical(a):
    b = CycloElement(a.order, list(a.coeffs))
    assert a.key == b.key and hash(a) == hash(b)
    assert cyclo_from_json(a.to_json()) == a


def test_roots_of_unity():
    for m in (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12):
        z = root_of_unity(m)
        assert z ** m == CycloElement.constant(m, 1)
        for k in range(1, m):
            assert z ** k != CycloElement.constant(m, 1)
        total = sum((root_of_unity(m, k) for k in range(m)), CycloElement.constant(m, 0))
        assert total == CycloElement.constant(m, 1 if m == 1 else 0)


def test_lift_and_mixed_equality():
    z3 = root_of_unity(3)
    z6 = root_of_unity(6)
    assert z3.lift(6) == z6 ** 2
    assert z3 == z6 ** 2
    assert root_of_unity(4) ** 2 == -1


def test_zero_inverse_raises():
    with pytest.raises(ZeroDivisionError):
        CycloElement.constant(5, 0).inverse()


def test_parse_rational():
    assert parse_rational([3, 6]) == Fraction(1, 2)
    assert parse_rational(["-4", "10"]) == Fraction(-2, 5)
    assert parse_rational(7) == 7
    with pytest.raises(ValueError):
        parse_rational([1, 0])
    with pytest.raises(ValueError):
        parse_rational(True)


POLYS = st.lists(st.integers(-4, 4), min_size=1, max_size=5).map(PolyQ)


@settings(max_examples=150, deadline=None)
@given(POLYS, POLYS)
def test_extended_gcd(a, b):
    if a.is_zero() and b.is_zero():
        return
    g, s, t = poly_extended_gcd(a, b)
    assert s * a + t * b == g
    assert g.lc == 1
    assert (a % g).is_zero() and (b % g).is_zero()


@settings(max_examples=100, deadline=None)
@given(POLYS, POLYS.filter(lambda p: not p.is_zero()))
def test_divmod(a, b):
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.is_zero() or r.degree < b.degree


def test_bezout_projectors_diagonal():
    # T = diag(1, -1) splits along p1 = u - 1 and p2 = u + 1
    T = Matrix([[1, 0], [0, -1]])
    p1, p2 = PolyQ([-1, 1]), PolyQ([1, 1])
    pi1, pi2 = bezout_projectors(p1, p2, T)
    assert pi1 == Matrix([[1, 0], [0, 0]])
    assert pi2 == Matrix([[0, 0], [0, 1]])
    assert poly_at_matrix(p1, T) * pi1 == Matrix.zeros(2, 2)


def test_bezout_not_coprime():
    T = companion_matrix(PolyQ([-1, 1]) ** 2)
    with pytest.raises(ValueError):
        bezout_projectors(PolyQ([-1, 1]), PolyQ([-1, 1]), T)


def test_companion_matrix_annihilated():
    p = PolyQ([2, -3, 0, 1])
    assert poly_at_matrix(p, companion_matrix(p)).is_zero()


MATS = st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n), min_size=n, max_size=n)
)


@settings(max_examples=200, deadline=None)
@given(MATS)
def test_det_exact_matches_cofactor(rows):
    assert det_exact(rows) == det_cofactor(rows)


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 4), st.integers(1, 5), st.data())
def test_rref_idempotent_and_rank(n, k, data):
    rows = data.draw(st.lists(st.lists(SMALL, min_size=k, max_size=k), min_size=n, max_size=n))
    M = Matrix(rows)
    R, r, piv = rref(M)
    R2, r2, piv2 = rref(R)
    assert R2 == R and r2 == r and piv2 == piv
    assert r == rank(M.transpose()) == rank(M)
    assert len(piv) == r


def test_det_small_cases():
    assert det_exact([[2, -1], [-1, 2]]) == 3
    assert det_exact([[0, 1], [1, 0]]) == -1
    assert det_exact([[1, 2], [2, 4]]) == 0
    for rows in product(range(-1, 2), repeat=4):
        m = [list(rows[:2]), list(rows[2:])]
        assert det_exact(m) == m[0][0] * m[1][1] - m[0][1] * m[1][0]


def test_eigenvalue_arithmetic():
    lam = Eigenvalue(2, 12)
    assert (lam.k, lam.d) == (1, 6) and lam.order == 6
    assert lam.kills(12) and not lam.kills(4)
    assert (lam ** 6).is_one()
    assert (lam * lam.inverse()).is_one()
    assert Eigenvalue(0, 5) == Eigenvalue.one()
