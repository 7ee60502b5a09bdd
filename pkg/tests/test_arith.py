import math

import numpy as np
import pytest

from dirichlet_census import arith
from dirichlet_census.errors import DomainError, ResourceLimitError


def test_factorize_reconstructs_and_is_prime():
    for n in list(range(1, 2000)) + [2 ** 31 - 1, 600851475143, 10 ** 12 + 39]:
        fact = arith.factorize(n)
        prod = 1
        for p, r in fact:
            assert arith.is_prime(p)
            prod *= p ** r
        assert prod == n
        assert fact.value == n


def test_factorize_rho_path_semiprime():
    p, q = 1000003, 1000033
    fact = arith.factorize(p * q)
    assert fact.factors == ((p, 1), (q, 1))


def test_factorize_deterministic():
    n = 1000003 * 1000033 * 1000037
    assert arith.factorize(n).factors == arith.factorize(n).factors


def test_factorize_rejects_nonpositive():
    with pytest.raises(DomainError):
        arith.factorize(0)


def test_is_prime_small():
    sieve = set(arith.primes_up_to(10000).tolist())
    for n in range(10000):
        assert arith.is_prime(n) == (n in sieve)


def test_mobius_and_totient_brute():
    for n in range(1, 300):
        mu = 0 if any(n % (p * p) == 0 for p in range(2, n + 1) if arith.is_prime(p)) \
            else (-1) ** len([p for p in range(2, n + 1) if arith.is_prime(p) and n % p == 0])
        assert arith.mobius(n) == mu
        assert arith.totient(n) == sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


def test_divisors():
    assert arith.divisors(1) == [1]
    assert arith.divisors(12) == [1, 2, 3, 4, 6, 12]
    for n in range(1, 200):
        assert arith.divisors(n) == [d for d in range(1, n + 1) if n % d == 0]


def test_kronecker_matches_euler_criterion():
    for p in (3, 5, 7, 11, 13, 101):
        for d in range(-30, 31):
            if d % p == 0:
                assert arith.kronecker(d, p) == 0
            else:
                legendre = 1 if pow(d % p, (p - 1) // 2, p) == 1 else -1
                assert arith.kronecker(d, p) == legendre


def test_kronecker_is_completely_multiplicative_in_n():
    for d in (-8, -4, -3, 5, 8, 12):
        for m in range(1, 60):
            for n in range(1, 60):
                assert (arith.kronecker(d, m * n)
                        == arith.kronecker(d, m) * arith.kronecker(d, n))


def test_kronecker_known_values():
    assert arith.kronecker(-4, 3) == -1
    assert arith.kronecker(8, 3) == -1
    assert arith.kronecker(0, 1) == 1
    with pytest.raises(DomainError):
        arith.kronecker(0, 0)


def test_spf_sieve_agrees_with_factorize():
    spf = arith.spf_sieve(5000)
    for n in range(2, 5001):
        assert arith.factorize_with_spf(n, spf) == arith.factorize(n)


def test_spf_sieve_limit():
    with pytest.raises(ResourceLimitError):
        arith.spf_sieve(arith.SIEVE_LIMIT + 1)


def test_mobius_sieve():
    mu = arith.mobius_sieve(3000)
    assert mu[0] == 0
    for n in range(1, 3001):
        assert int(mu[n]) == arith.mobius(n)


def test_primes_up_to():
    ps = arith.primes_up_to(1000)
    assert ps[0] == 2 and ps[-1] == 997
    assert np.all(np.diff(ps) > 0)
    assert len(ps) == 168


def test_eval_multiplicative():
    f = arith.LocalFunction("pth-power", lambda p, r: p ** r)
    for n in range(1, 500):
        assert arith.eval_multiplicative(f, n) == n
