from __future__ import annotations

import pytest

from milnorarr.ade import (
    AdeType,
    SpectralData,
    det_recursive,
    dynkin_matrix,
    monodromy_det,
    negative_control,
    path_det,
    spectral_numbers,
    verify_coincidence,
)
from milnorarr.exactmath import det_cofactor, det_exact


def test_invalid_types():
    for fam, k in (("A", 0), ("D", 3), ("E", 9), ("F", 4)):
        with pytest.raises(ValueError):
            AdeType(fam, k)
    assert AdeType.parse("e7") == AdeType("E", 7)


def test_displayed_matrices():
    assert dynkin_matrix(AdeType("A", 4)) == [
        [2, -1, 0, 0], [-1, 2, -1, 0], [0, -1, 2, -1], [0, 0, -1, 2],
    ]
    d5 = dynkin_matrix(AdeType("D", 5))
    # fork at the top: nodes 1 and 2 both meet node 3
    assert d5[0][2] == d5[1][2] == -1 and d5[0][1] == 0
    assert det_exact(d5) == 4
    e6 = dynkin_matrix(AdeType("E", 6))
    assert det_exact(e6) == det_cofactor(e6) == 3


def test_path_recursion():
    assert [path_det(k) for k in range(6)] == [1, 2, 3, 4, 5, 6]
    for k in range(4, 13):
        assert det_recursive(AdeType("D", k)) == 4


def test_spectrum_examples():
    assert monodromy_det(spectral_numbers(AdeType("A", 4))) == 5
    assert monodromy_det(spectral_numbers(AdeType("D", 5))) == 4
    assert monodromy_det(spectral_numbers(AdeType("E", 8))) == 1


def test_shift_invariance():
    s = spectral_numbers(AdeType("E", 7))
    shifted = SpectralData(tuple(a + (k % 3) - 1 for k, a in enumerate(s.alphas)))
    assert monodromy_det(shifted) == monodromy_det(s)


def test_spectra_are_symmetric():
    # alpha and 3 - alpha pair up, as for any surface singularity
    for t in (AdeType("A", 5), AdeType("D", 6), AdeType("E", 6), AdeType("E", 8)):
        alphas = sorted(spectral_numbers(t).alphas)
        assert alphas == sorted(3 - a for a in alphas)
        assert len(alphas) == t.rank


def test_other_negative_controls():
    # for E6 and D5 the naive modulus is a proper multiple of Phi_m and the results differ
    e6 = negative_control(AdeType("E", 6))
    assert e6["differs"] and not e6["naive_rational"] and e6["cyclotomic"] == "PolyQ(3)"
    d5 = negative_control(AdeType("D", 5))
    assert d5["differs"]


def test_a4_moduli_coincide():
    nc = negative_control(AdeType("A", 4))
    assert nc["m"] == 5 and nc["moduli_equal"]


def test_bad_order():
    with pytest.raises(ValueError):
        monodromy_det(spectral_numbers(AdeType("A", 4)), order=7)


def test_report_fields():
    r = verify_coincidence(AdeType("E", 8))
    assert r == {"type": "E8", "det_S": 1, "det_recursive": 1, "det_monodromy": 1, "agree": True}
