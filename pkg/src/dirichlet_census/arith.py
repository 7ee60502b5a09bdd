"""Exact integer arithmetic.

Factorization, the classical multiplicative functions (Möbius, totient),
the Kronecker symbol, smallest-prime-factor sieves, and a generic
evaluator for multiplicative functions given by a local rule on prime
powers.  Everything here is deterministic: the rho fallback is seeded
from the input.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Callable, Iterator

import numpy as np

from .errors import DomainError, ResourceLimitError

# Trial division handles everything below this squared; rho only kicks in
# for inputs with two prime factors above 10^6.
_TRIAL_LIMIT = 10 ** 6

# Flat int32 spf array; 2^28 entries is ~1 GiB, the configured ceiling.
SIEVE_LIMIT = 2 ** 28

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


@dataclass(frozen=True)
class Factorization:
    """Prime-power decomposition: factors are (prime, exponent), primes increasing."""

    value: int
    factors: tuple[tuple[int, int], ...]

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.factors)


@dataclass(frozen=True)
class LocalFunction:
    """A multiplicative function given by its values on prime powers."""

    name: str
    eval: Callable[[int, int], int]


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; the witness set covers all n < 3.3e24."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _rho_factor(n: int, rng: random.Random) -> int:
    """One nontrivial factor of composite odd n (Brent's cycle variant)."""
    while True:
        y = rng.randrange(2, n - 1)
        c = rng.randrange(1, n - 1)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def _factor_large(n: int, rng: random.Random, out: list[int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out.append(n)
        return
    d = _rho_factor(n, rng)
    _factor_large(d, rng, out)
    _factor_large(n // d, rng, out)


def factorize(n: int) -> Factorization:
    """Prime-power decomposition of n >= 1 (empty for n = 1)."""
    if n < 1:
        raise DomainError(f"factorize requires n >= 1, got {n}")
    value = n
    factors: list[tuple[int, int]] = []
    for p in (2, 3):
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            factors.append((p, e))
    d = 5
    while d <= _TRIAL_LIMIT and d * d <= n:
        for p in (d, d + 2):
            if n % p == 0:
                e = 0
                while n % p == 0:
                    n //= p
                    e += 1
                factors.append((p, e))
        d += 6
    if n > 1:
        if n < _TRIAL_LIMIT * _TRIAL_LIMIT or is_prime(n):
            factors.append((n, 1))
        else:
            rng = random.Random(value)
            primes: list[int] = []
            _factor_large(n, rng, primes)
            for p in sorted(set(primes)):
                factors.append((p, primes.count(p)))
    factors.sort()
    return Factorization(value=value, factors=tuple(factors))


def as_factorization(n) -> Factorization:
    """Accept either an int or an already-built Factorization."""
    if isinstance(n, Factorization):
        return n
    return factorize(n)


def mobius(n: int) -> int:
    fact = as_factorization(n)
    if any(r > 1 for _, r in fact):
        return 0
    return -1 if len(fact.factors) % 2 else 1


def totient(n: int) -> int:
    fact = as_factorization(n)
    result = 1
    for p, r in fact:
        result *= p ** (r - 1) * (p - 1)
    return result


def divisors(n) -> list[int]:
    """All positive divisors, ascending."""
    fact = as_factorization(n)
    divs = [1]
    for p, r in fact:
        divs = [d * p ** e for d in divs for e in range(r + 1)]
    return sorted(divs)


def kronecker(d: int, n: int) -> int:
    """Kronecker-Jacobi-Legendre symbol (d/n), defined for all integers."""
    if n == 0:
        if d == 0:
            raise DomainError("(0/0) is undefined")
        return 1 if abs(d) == 1 else 0
    result = 1
    if n < 0:
        n = -n
        if d < 0:
            result = -1
    t = 0
    while n % 2 == 0:
        n //= 2
        t += 1
    if t:
        if d % 2 == 0:
            return 0
        if t % 2 == 1 and d % 8 in (3, 5):
            result = -result
    # n is now odd and positive; plain Jacobi from here on
    d %= n
    while d != 0:
        while d % 2 == 0:
            d //= 2
            if n % 8 in (3, 5):
                result = -result
        d, n = n, d
        if d % 4 == 3 and n % 4 == 3:
            result = -result
        d %= n
    return result if n == 1 else 0


def spf_sieve(N: int) -> np.ndarray:
    """Array of least prime factors for 0..N (entries 0, 1 are themselves)."""
    if N < 2:
        raise DomainError(f"spf_sieve requires N >= 2, got {N}")
    if N > SIEVE_LIMIT:
        raise ResourceLimitError(
            f"sieve bound {N} exceeds configured limit {SIEVE_LIMIT}; "
            "raise arith.SIEVE_LIMIT or shard the computation"
        )
    spf = np.arange(N + 1, dtype=np.int32)
    for p in range(2, math.isqrt(N) + 1):
        if spf[p] == p:
            block = spf[p * p :: p]
            idx = np.arange(p * p, N + 1, p, dtype=np.int32)
            block[block == idx] = p


    return spf


def factorize_with_spf(n: int, spf: np.ndarray) -> Factorization:
    """factorize() via a precomputed spf table (n must be within the table)."""
    if n < 1:
        raise DomainError(f"factorize requires n >= 1, got {n}")
    value = n
    factors = []
    while n > 1:
        p = int(spf[n])
        r = 0
        while n % p == 0:
            n //= p
            r += 1
        factors.append((p, r))
    factors.sort()
    return Factorization(value=value, factors=tuple(factors))


def primes_up_to(N: int) -> np.ndarray:
    """Prime list via a boolean Eratosthenes pass."""
    if N < 2:
        return np.empty(0, dtype=np.int64)
    mask = np.ones(N + 1, dtype=bool)
    mask[:2] = False
    for p in range(2, math.isqrt(N) + 1):
        if mask[p]:
            mask[p * p :: p] = False
    return np.nonzero(mask)[0].astype(np.int64)


def mobius_sieve(N: int) -> np.ndarray:
    """Array of mu(n) for 0..N (entry 0 is 0)."""
    if N < 1:
        raise DomainError(f"mobius_sieve requires N >= 1, got {N}")
    mu = np.ones(N + 1, dtype=np.int64)
    mu[0] = 0
    for p in primes_up_to(N):
        mu[p::p] *= -1
        sq = int(p) * int(p)
        if sq <= N:
            mu[sq::sq] = 0
    return mu


def eval_multiplicative(f: LocalFunction, n) -> int:
    """Product of f(p, r) over the factorization of n (1 for n = 1)."""
    fact = as_factorization(n)
    result = 1
    for p, r in fact:
        result *= f.eval(p, r)
    return result
