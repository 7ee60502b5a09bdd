import math

import numpy as np
import pytest

from dirichlet_census import census, series
from dirichlet_census.errors import DomainError, UnsupportedParameterError
from dirichlet_census.lfun import PrecisionContext


def test_growth_exponent():
    assert series.growth_exponent(2, "all") == 2
    assert series.growth_exponent(2, "primitive") == 1
    assert series.growth_exponent(4, "all") == 3
    assert series.growth_exponent(8, "primitive") == 3
    assert series.growth_exponent(6, "primitive") == 3
    assert series.growth_exponent(5, "primitive") == 1


@pytest.mark.parametrize("ell", [2, 3, 4, 8])
@pytest.mark.parametrize("kind", ["all", "primitive"])
def test_partial_sum_envelope_holds(ell, kind, values7):
    """The tail bounds rest on sum_{n<=t} c(n) <= C_ENV t ln(et)^w; check it
    against the exact census at every decade up to 10^7."""
    w = series.growth_exponent(ell, kind)
    csum = np.cumsum(values7(ell, kind))
    for t in [10 ** k for k in range(1, 8)] + [3, 17, 999]:
        bound = series._C_ENV * t * math.log(math.e * t) ** w
        assert csum[t] <= bound, (ell, kind, t)


def test_truncated_series_matches_direct_loop(spf5):
    from dirichlet_census import charcount
    out = series.truncated_series(2, "all", 2.0, 200, spf=spf5)
    direct = math.fsum(charcount.a_value(2, n) / n ** 2 for n in range(1, 201))
    assert out.value == pytest.approx(direct, abs=1e-14)
    assert out.tail_bound > 0


def test_truncated_series_domain(spf5):
    with pytest.raises(DomainError):
        series.truncated_series(2, "all", 1.2, 100, spf=spf5)
    with pytest.raises(DomainError):
        series.truncated_series(2, "all", 2.0, 0, spf=spf5)


@pytest.mark.parametrize("ell", [2, 3, 4, 8])
def test_inversion_identity_with_derived_tolerance(ell, spf5):
    report = series.verify_inversion_identity(ell, 2.0, 10 ** 5, spf=spf5)
    assert report.passed, report
    assert report.residual < report.tolerance


def test_lambda_truncated_hand_value():
    # representable by x^2 + y^2 up to 5: 1, 2, 4, 5
    out = series.lambda_truncated(1, 2.0, 5)
    assert out.value == pytest.approx(1 + 1 / 4 + 1 / 16 + 1 / 25, abs=1e-15)
    with pytest.raises(UnsupportedParameterError):
        series.lambda_truncated(5, 2.0, 100)


@pytest.mark.parametrize("m,N", [(1, 10 ** 5), (2, 10 ** 5), (3, 10 ** 5)])
def test_lambda_identity(m, N, ctx15):
    report = series.verify_lambda_identity(m, N, ctx15)
    assert report.passed, report


def test_lambda_identity_only_at_two(ctx15):
    with pytest.raises(UnsupportedParameterError):
        series.verify_lambda_identity(1, 1000, ctx15, s=3.0)


def test_nonmultiplicativity_witnesses():
    w6 = series.nonmultiplicativity_report(6)
    assert (2, 5, 10) in w6
    wm6 = series.nonmultiplicativity_report(-6)
    assert (2, 5, 10) in wm6
    # x^2 + y^2 representability is multiplicative on coprime arguments
    assert series.nonmultiplicativity_report(1, bound=2000) == []
    with pytest.raises(UnsupportedParameterError):
        series.nonmultiplicativity_report(7)
