import math
from fractions import Fraction

import mpmath as mp
import pytest

from dirichlet_census import lfun
from dirichlet_census.arith import primes_up_to, totient
from dirichlet_census.errors import DomainError, UnsupportedParameterError
from dirichlet_census.lfun import (CharacterTable, PrecisionContext,
                                   RootOfUnity, characters_mod,
                                   kronecker_character, l_one, l_value,
                                   prime_class_sum)


def test_root_of_unity_reduction_and_arithmetic():
    assert RootOfUnity(2, 4) == RootOfUnity(1, 2)
    assert RootOfUnity(5, 3) == RootOfUnity(2, 3)
    z = RootOfUnity(1, 8)
    assert z * z == RootOfUnity(1, 4)
    assert z ** 8 == RootOfUnity(0, 1)
    assert z.conjugate() == RootOfUnity(7, 8)
    assert RootOfUnity(1, 2).is_real and not z.is_real
    with mp.workdps(30):
        assert mp.almosteq(z.value() ** 8, 1)


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5, 7, 8, 12, 15, 16, 24, 35])
def test_characters_mod_count_and_orthogonality(m):
    chars = characters_mod(m)
    assert len(chars) == totient(m)
    assert chars[0].is_principal
    assert sum(1 for c in chars if c.is_principal) == 1
    with mp.workdps(30):
        for chi in chars:
            s = sum(v.value() for v in chi.values.values())
            expected = totient(m) if chi.is_principal else 0
            assert mp.fabs(s - expected) < mp.mpf("1e-25")


@pytest.mark.parametrize("m", [5, 8, 12])
def test_character_second_orthogonality(m):
    # sum_chi conj(chi(a)) chi(b) = phi(m) [a = b] over units
    chars = characters_mod(m)
    units = [a for a in range(m) if math.gcd(a, m) == 1]
    with mp.workdps(30):
        for a in units:
            for b in units:
                s = sum(chi(a).conjugate().value() * chi(b).value()
                        for chi in chars)
                expected = totient(m) if a == b else 0
                assert mp.fabs(s - expected) < mp.mpf("1e-25")


def test_characters_are_multiplicative():
    for m in (7, 16, 21):
        chars = characters_mod(m)
        units = [a for a in range(m) if math.gcd(a, m) == 1]
        for chi in chars:
            for a in units:
                for b in units:
                    assert chi(a * b) == chi(a) * chi(b)


def test_characters_mod_limit():
    with pytest.raises(UnsupportedParameterError):
        characters_mod(lfun._CHARACTERS_MOD_LIMIT + 1)


def test_kronecker_character_real_and_periodic():
    for d in (-4, -3, 8, -8, 12):
        chi = kronecker_character(d)
        assert chi.is_real
        assert chi.modulus == abs(d)
    with pytest.raises(DomainError):
        kronecker_character(6)


def test_l_value_against_direct_series():
    ctx = PrecisionContext(20)
    for m in (5, 8):
        for chi in characters_mod(m)[1:]:
            val = l_value(3, chi, ctx)
            with mp.workdps(30):
                direct = mp.nsum(lambda n: (chi(int(n)).value()
                                            if chi(int(n)) is not None else 0)
                                 / mp.mpf(n) ** 3, [1, 20000])
                assert mp.fabs(val - direct) < mp.mpf("1e-12")


def test_l_value_principal():
    ctx = PrecisionContext(25)
    chi0 = characters_mod(4)[0]
    with ctx.workdps():
        expected = mp.zeta(2) * (1 - mp.mpf(2) ** -2)
        assert mp.fabs(l_value(2, chi0, ctx) - expected) < ctx.eps


def test_l_one_closed_form_minus_four():
    ctx = PrecisionContext(25)
    val = l_one(kronecker_character(-4), ctx)
    with ctx.workdps():
        assert mp.fabs(val - mp.pi / 4) < ctx.eps


def test_l_one_rejects_principal():
    ctx = PrecisionContext(15)
    with pytest.raises(DomainError):
        l_one(characters_mod(4)[0], ctx)


def test_prime_zeta_value():
    ctx = PrecisionContext(30)
    val = prime_class_sum(2, 1, {0}, ctx)
    with mp.workdps(40):
        # P(2), standard reference value
        ref = mp.mpf("0.45224742004106549850654336483224793417")
        assert mp.fabs(val - ref) < mp.mpf("1e-29")


@pytest.mark.parametrize("k,m,S", [(2, 4, (1,)), (2, 4, (3,)), (3, 8, (3, 5)),
                                   (2, 3, (1,)), (4, 8, (1,))])
def test_prime_class_sum_against_direct(k, m, S):
    ctx = PrecisionContext(25)
    val = prime_class_sum(k, m, set(S), ctx)
    ps = primes_up_to(10 ** 6)
    direct = math.fsum(float(p) ** (-k) for p in ps.tolist()
                       if p % m in S and m % p != 0)
    # direct truncation tail ~ 1/(k-1) * 1e6^(1-k) / ln(1e6)
    tail = 10 ** (6 * (1 - k)) / math.log(10 ** 6) * 2
    assert abs(float(val) - direct) < tail + 1e-14


def test_prime_class_sum_precision_consistency():
    lo = prime_class_sum(2, 8, {1}, PrecisionContext(20))
    hi = prime_class_sum(2, 8, {1}, PrecisionContext(40))
    assert mp.fabs(mp.mpf(lo) - mp.mpf(hi)) < mp.mpf(10) ** -19


def test_prime_class_sum_rejects_bad_input():
    ctx = PrecisionContext(15)
    with pytest.raises(DomainError):
        prime_class_sum(1, 4, {1}, ctx)
    with pytest.raises(DomainError):
        prime_class_sum(2, 4, {2}, ctx)


def test_precision_context_validation():
    with pytest.raises(DomainError):
        PrecisionContext(5)
    ctx = PrecisionContext(12, guard=8)
    assert ctx.dps == 20
