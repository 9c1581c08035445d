from __future__ import annotations

from itertools import combinations
from math import comb

import pytest

from milnorarr.arrangement import (
    ArrangementFormatError,
    DuplicateHyperplaneError,
    ArrangementError,
    ProfileUnavailable,
    build_boolean,
    build_g31,
    build_gm1,
    build_gmm,
    compute_lattice,
    decomposition_profile,
    loads_arrangement,
    make_arrangement,
)
from milnorarr.exactmath import CycloElement, Matrix, rank, root_of_unity


def test_builder_sizes():
    assert build_gmm(2, 4).degree == 12
    assert build_gmm(3, 5).degree == 30
    assert build_gm1(1, 4).degree == 10
    assert build_gm1(4, 5).degree == 45
    assert build_g31().degree == 60
    assert build_boolean(3).degree == 3


def test_boolean_lattice():
    lat = compute_lattice(build_boolean(3))
    assert [e.multiplicity for e in lat.edges2] == [2, 2, 2]
    assert [e.multiplicity for e in lat.edges3] == [3]
    assert lat.edges3[0].profile == (1, 1, 1)


@pytest.mark.parametrize("arr", [build_gmm(3, 4), build_gm1(2, 3), build_g31()], ids=lambda a: a.label)
def test_json_round_trip(arr):
    text = arr.dumps()
    back = loads_arrangement(text)
    assert back == arr
    assert back.dumps() == text


def test_duplicate_rejected():
    z = root_of_unity(3)
    one = CycloElement.constant(3, 1)
    with pytest.raises(DuplicateHyperplaneError):
        make_arrangement(2, 3, [[one, -z], [z, -z * z]])


def test_zero_form_and_length_rejected():
    with pytest.raises(ArrangementError):
        make_arrangement(2, 1, [[0, 0]])
    with pytest.raises(ArrangementError):
        make_arrangement(2, 1, [[1, 0, 0]])


@pytest.mark.parametrize(
    "text,where",
    [
        ("{", "line 1"),
        ('{"ambient_dim": 2, "cyclotomic_order": 1}', "hyperplanes"),
        ('{"ambient_dim": 2, "cyclotomic_order": 1, "hyperplanes": [[1, "x"]]}', "hyperplanes[0][1]"),
        ('{"ambient_dim": 2, "cyclotomic_order": 1, "hyperplanes": [[1, 0], [2, 0]]}', "hyperplanes"),
    ],
)
def test_format_errors_have_context(text, where):
    with pytest.raises(ArrangementFormatError) as exc:
        loads_arrangement(text)
    assert where in str(exc.value)


def test_normalisation_first_nonzero_is_one():
    arr = make_arrangement(3, 1, [[0, 2, -4], [3, 0, 6]])
    assert [tuple(c.is_rational() for c in f) for f in arr.hyperplanes] == [(0, 1, -2), (1, 0, 2)]


LATTICES = [
    ("gmm", 2, 4), ("gmm", 3, 4), ("gmm", 4, 5), ("gm1", 1, 4), ("gm1", 3, 4), ("gm1", 2, 5), ("g31", 0, 0),
]


@pytest.mark.parametrize("spec", LATTICES, ids=str)
def test_pair_and_triple_counts(lattice, spec):
    lat = lattice(*spec)
    d = lat.arrangement.degree
    # every pair of hyperplanes spans exactly one codim-2 flat
    assert sum(comb(e.multiplicity, 2) for e in lat.edges2) == comb(d, 2)
    # every independent triple spans exactly one codim-3 flat
    dependent = sum(comb(e.multiplicity, 3) for e in lat.edges2)
    independent = 0
    for j, p in enumerate(lat.edges3):
        independent += comb(p.multiplicity, 3) - sum(comb(lat.edges2[i].multiplicity, 3) for i in lat.lines_of.get(j, ()))
    assert independent == comb(d, 3) - dependent


@pytest.mark.parametrize("spec", LATTICES, ids=str)
def test_incidence_consistency(lattice, spec):
    lat = lattice(*spec)
    for j, i in lat.incidence.pairs:
        assert set(lat.edges2[i].members) < set(lat.edges3[j].members)
    # brute force: a codim-2 flat lies on a codim-3 flat iff its members are contained
    for j, p in enumerate(lat.edges3[:40]):
        mem = set(p.members)
        expected = tuple(i for i, e in enumerate(lat.edges2) if set(e.members) <= mem)
        assert tuple(sorted(lat.lines_of.get(j, ()))) == expected


def _elementary(values, k):
    return sum(_prod(c) for c in combinations(values, k))


def _prod(xs):
    out = 1
    for x in xs:
        out *= x
    return out


def _coexponents(builder, m, d):
    if builder == "g31":
        return [1, 13, 17, 29]
    if builder == "gm1":
        return [k * m + 1 for k in range(d)]
    return [k * m + 1 for k in range(d - 1)] + [(d - 1) * m - d + 1]


@pytest.mark.parametrize("spec", LATTICES, ids=str)
def test_mobius_sums_match_coexponents(lattice, spec):
    # independent oracle: the characteristic polynomial of a reflection arrangement factors
    lat = lattice(*spec)
    ex = _coexponents(*spec)
    assert sum(ex) == lat.arrangement.degree
    b2 = sum(e.multiplicity - 1 for e in lat.edges2)
    assert b2 == _elementary(ex, 2)
    b3 = 0
    for j, p in enumerate(lat.edges3):
        b3 += sum(lat.edges2[i].multiplicity - 1 for i in lat.lines_of.get(j, ())) - p.multiplicity + 1
    assert b3 == _elementary(ex, 3)


def test_g31_counts(lattice):
    lat = lattice("g31")
    assert (len(lat.edges2), len(lat.edges3), len(lat.incidence.pairs)) == (710, 1500, 9060)
    from collections import Counter

    assert Counter(p.multiplicity for p in lat.edges3) == {15: 60, 4: 960, 6: 480}


def _rank(vecs):
    return rank(Matrix([list(v) for v in vecs])) if vecs else 0


def _brute_profile(vecs):
    """Finest splitting into blocks whose spans form a direct sum, by bipartition search."""
    n = len(vecs)
    total = _rank(vecs)
    if n == 1:
        return (1,)
    for size in range(1, n):
        for left in combinations(range(1, n), size - 1):
            S = (0,) + left
            T = tuple(k for k in range(n) if k not in S)
            a = [vecs[k] for k in S]
            b = [vecs[k] for k in T]
            if _rank(a) + _rank(b) == total:
                return tuple(sorted(_brute_profile(a) + _brute_profile(b), reverse=True))
    return (n,)


@pytest.mark.parametrize("spec", [("gmm", 2, 4), ("gmm", 3, 4), ("gm1", 2, 4), ("gm1", 1, 5)], ids=str)
def test_profiles_against_bipartition_search(lattice, spec):
    lat = lattice(*spec)
    H = lat.arrangement.hyperplanes
    seen = set()
    for e in lat.edges2 + lat.edges3:
        if e.multiplicity > 10 or (e.codim, e.multiplicity, e.support_size, e.profile) in seen:
            continue
        seen.add((e.codim, e.multiplicity, e.support_size, e.profile))
        vecs = [e.local_coordinates(H[h]) for h in e.members]
        assert e.profile == _brute_profile(vecs)


def test_profile_limit():
    lat = compute_lattice(build_gmm(5, 3), profile_limit=10)
    assert lat.edges3[0].profile is None
    with pytest.raises(ProfileUnavailable):
        decomposition_profile(lat.edges3[0], lat.arrangement, limit=10)
