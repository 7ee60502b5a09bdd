"""Counting Dirichlet characters of order dividing ell.

a(n) counts all characters chi mod n with chi^ell trivial, b(n) the
primitive ones.  Two independent routes are provided: closed-form local
tables (ell in {2, 3, 4, 8}) and the unit-group structure theorem, plus
a Möbius-inversion route for b.
"""

from __future__ import annotations

import math

from .arith import as_factorization, divisors, mobius
from .errors import DomainError

TABLE_ELLS = (2, 3, 4, 8)


def _check_ell(ell: int) -> None:
    if ell < 2:
        raise DomainError(f"order parameter must be >= 2, got {ell}")


def unit_group_structure(n) -> tuple[int, ...]:
    """Cyclic-factor orders of (Z/nZ)^*, ascending, trivial factors dropped.

    Odd p^r contributes p^(r-1)(p-1); 2 contributes nothing; 4 contributes
    2; 2^r with r >= 3 contributes 2 and 2^(r-2).
    """
    fact = as_factorization(n)
    orders: list[int] = []
    for p, r in fact:
        if p == 2:
            if r == 2:
                orders.append(2)
            elif r >= 3:
                orders.append(2)
                orders.append(2 ** (r - 2))
        else:
            orders.append(p ** (r - 1) * (p - 1))
    return tuple(sorted(o for o in orders if o > 1))


def count_order_dividing(ell: int, n) -> int:
    """Number of chi mod n with chi^ell trivial: prod gcd(ell, c) over cyclic factors."""
    _check_ell(ell)
    result = 1
    for c in unit_group_structure(n):
        result *= math.gcd(ell, c)
    return result


def _a_local_table(ell: int, p: int, r: int) -> int:
    """Paper's closed-form a(p^r) tables for ell in {2, 3, 4, 8}."""
    if ell == 2:
        if p == 2:
            return 1 if r == 1 else (2 if r == 2 else 4)
        return 2
    if ell == 3:
        if p == 2:
            return 1
        if p == 3:
            return 1 if r == 1 else 3
        return 3 if p % 3 == 1 else 1
    if ell == 4:
        if p == 2:
            return (1, 2, 4)[r - 1] if r <= 3 else 8
        return 4 if p % 4 == 1 else 2
    if ell == 8:
        if p == 2:
            return (1, 2, 4, 8)[r - 1] if r <= 4 else 16
        if p % 8 == 1:
            return 8
        if p % 8 == 5:
            return 4
        return 2  # p = 3 mod 4
    raise DomainError(f"no closed-form table for ell = {ell}")


def _a_local_generic(ell: int, p: int, r: int) -> int:
    """a on a prime power from the unit-group structure of Z_{p^r}^*."""
    if p == 2:
        if r == 1:
            return 1
        if r == 2:
            return math.gcd(ell, 2)
        return math.gcd(ell, 2) * math.gcd(ell, 2 ** (r - 2))
    return math.gcd(ell, p ** (r - 1) * (p - 1))


def a_local(ell: int, p: int, r: int) -> int:
    if r == 0:
        return 1
    if ell in TABLE_ELLS:
        return _a_local_table(ell, p, r)
    return _a_local_generic(ell, p, r)


def b_local(ell: int, p: int, r: int) -> int:
    """b(p^r) = a(p^r) - a(p^(r-1)): primitive characters of conductor exactly p^r."""
    return a_local(ell, p, r) - a_local(ell, p, r - 1)


def a_value(ell: int, n) -> int:
    """a(n): characters mod n of order dividing ell."""
    _check_ell(ell)
    result = 1
    for p, r in as_factorization(n):
        result *= a_local(ell, p, r)
    return result


def b_value(ell: int, n) -> int:
    """b(n): primitive characters mod n of order dividing ell; b(1) = 1."""
    _check_ell(ell)
    result = 1
    for p, r in as_factorization(n):
        result *= b_local(ell, p, r)
    return result


def b_via_inversion(ell: int, n: int) -> int:
    """b(n) = sum over d | n of mu(n/d) a(d); independent of the local tables."""
    _check_ell(ell)
    fact = as_factorization(n)
    total = 0
    for d in divisors(fact):
        m = mobius(fact.value // d)
        if m:
            total += m * a_value(ell, d)
    return total
