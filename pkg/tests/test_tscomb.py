from __future__ import annotations

from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from milnorarr.exactmath import Eigenvalue
from milnorarr.tscomb import (
    GEN_X,
    EigenSpectrum,
    MonomialPairConfig,
    cone_pair_rank,
    global_sections_rank,
    h1_rank_via_tensor,
    h1_rank_monomial_pair,
    invariant_rank,
    invariant_rank_brute,
    lines_h1_spectrum,
    one_var_spectrum,
    product_with_linear_rank,
    roots_spectrum,
    total_rank_sum_of_two,
    transversal_eigen_dim,
    ts_tensor,
    verify_monomial_pair,
)


def test_one_var_spectrum():
    s = one_var_spectrum(4)
    assert s.total() == 3 and s.mult_one() == 0
    assert s.multiplicity(Eigenvalue(1, 2)) == 1
    assert roots_spectrum(4).mult_one() == 1
    assert one_var_spectrum(1).total() == 0


def test_tensor_is_multiplicative():
    s = ts_tensor(one_var_spectrum(3), one_var_spectrum(3))
    assert s.total() == 4
    assert s.mult_one() == 2
    assert s.multiplicity(Eigenvalue(1, 3)) == 1


def test_milnor_numbers():
    assert total_rank_sum_of_two(2, 3) == 2
    assert total_rank_sum_of_two(4, 6) == 15
    with pytest.raises(ValueError):
        total_rank_sum_of_two(1, 3)


@given(st.integers(2, 14), st.integers(2, 14))
def test_cone_pair(a, b):
    milnor, unip, final = cone_pair_rank(a, b)
    assert milnor == (a - 1) * (b - 1)
    assert unip == gcd(a, b) - 1
    assert final == gcd(a, b)


def test_monomial_pair_examples():
    cfg = MonomialPairConfig(2, 2, 2, 2)
    assert h1_rank_monomial_pair(cfg) == 1
    assert h1_rank_via_tensor(cfg) == 1
    cfg = MonomialPairConfig(2, 4, 3, 6)
    assert (cfg.a0, cfg.b0) == (2, 3)
    assert h1_rank_monomial_pair(cfg) == 2
    assert invariant_rank(cfg, (1, 1)) == (4 - 1) * (6 - 1)
    assert invariant_rank(cfg, (1, 1), (GEN_X,)) == (2 - 1) * (6 - 1)
    assert verify_monomial_pair(cfg)["agree"]


def test_bad_component():
    with pytest.raises(ValueError):
        invariant_rank_brute(MonomialPairConfig(1, 1, 1, 1), (0, 1))
    with pytest.raises(ValueError):
        invariant_rank_brute(MonomialPairConfig(1, 1, 1, 1), (1, 1), ("T_z",))


def test_product_with_linear_requires_homogeneous():
    with pytest.raises(ValueError):
        product_with_linear_rank(EigenSpectrum(), EigenSpectrum(), homogeneous=False)


def test_transversal_dims():
    # x^3 + y^3: three lines, one lambda of each primitive cube root
    assert transversal_eigen_dim(3, Eigenvalue(1, 3)) == 1
    assert transversal_eigen_dim(3, Eigenvalue.one()) == 2
    assert lines_h1_spectrum(6).total() == 25


def test_global_sections_rank():
    assert global_sections_rank(3, 6) == 4
    assert global_sections_rank(4, 6) == 5
    assert global_sections_rank(5, 6) == 4


def test_spectrum_json_and_repr():
    s = one_var_spectrum(3)
    assert s.to_json() == [[1, 3, 1], [2, 3, 1]]
    assert "1/3" in repr(s)
    assert list(s) == [Eigenvalue(1, 3), Eigenvalue(2, 3)]
