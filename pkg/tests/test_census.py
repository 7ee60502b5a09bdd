import math

import numpy as np
import pytest

from dirichlet_census import census, charcount
from dirichlet_census.errors import (DegenerateInputError, DomainError,
                                     UnsupportedParameterError)


@pytest.mark.parametrize("ell", [2, 3, 4, 5, 8])
def test_multiplicative_values_match_scalar_rules(ell, spf5):
    a = census.multiplicative_values(ell, 2000, "all", spf5)
    b = census.multiplicative_values(ell, 2000, "primitive", spf5)
    assert a[0] == 0 and b[0] == 0
    for n in range(1, 2001):
        assert int(a[n]) == charcount.a_value(ell, n)
        assert int(b[n]) == charcount.b_value(ell, n)


def test_census_sums_match_cumsum(spf5):
    values = census.multiplicative_values(3, 10 ** 5, "primitive", spf5)
    csum = np.cumsum(values)
    cps = [10, 100, 12345, 10 ** 5]
    recs = census.census_sums(3, 10 ** 5, "primitive", cps, spf5)
    assert [r.N for r in recs] == cps
    for r in recs:
        assert r.sum == int(csum[r.N])


def test_census_sums_thread_invariance(spf5):
    cps = census.log_checkpoints(100, 10 ** 5)
    one = census.census_sums(4, 10 ** 5, "all", cps, spf5, threads=1)
    four = census.census_sums(4, 10 ** 5, "all", cps, spf5, threads=4)
    assert one == four


def test_census_sums_rejects_checkpoint_beyond_bound(spf5):
    with pytest.raises(DomainError):
        census.census_sums(2, 1000, "all", [2000], spf5)


def test_fit_growth_recovers_exact_model():
    ns = [10 ** k for k in range(3, 8)]
    recs = [census.CensusRecord(N=n, sum=int(round(2.5 * n * math.log(n) + 7 * n)))
            for n in ns]
    fit = census.fit_growth(recs, ["N*lnN", "N"])
    assert fit.coefficients[0] == pytest.approx(2.5, rel=1e-6)
    assert fit.coefficients[1] == pytest.approx(7.0, rel=1e-4)


def test_fit_growth_degenerate():
    recs = [census.CensusRecord(N=10, sum=10)]
    with pytest.raises(DegenerateInputError):
        census.fit_growth(recs, ["N", "N*lnN"])
    with pytest.raises(DomainError):
        census.fit_growth([census.CensusRecord(N=10, sum=10)] * 3, ["bogus"])


def test_log_checkpoints():
    cps = census.log_checkpoints(1000, 10 ** 6)
    assert cps[0] == 1000 and cps[-1] == 10 ** 6
    assert cps == sorted(set(cps))
    with pytest.raises(DomainError):
        census.log_checkpoints(10, 5)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_representation_mask_matches_indicator(m):
    mask = census.representation_mask(m, 500)
    assert not mask[0]
    for n in range(1, 501):
        assert int(mask[n]) == census.f_indicator(m, n)


def test_representation_count_unsupported():
    with pytest.raises(UnsupportedParameterError):
        census.representation_count(5, 100)


def test_f_indicator_negative_m():
    # 10 = 4^2 - 6*1^2 and 3 = 3^2 - 6*1^2; 5 is not of the form x^2 - 6y^2
    assert census.f_indicator(-6, 10) == 1
    assert census.f_indicator(-6, 3) == 1
    assert census.f_indicator(-6, 5, y_max=2000) == 0
    with pytest.raises(DomainError):
        census.f_indicator(0, 5)
