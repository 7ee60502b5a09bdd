import math

import pytest

from dirichlet_census import charcount
from dirichlet_census.arith import totient
from dirichlet_census.errors import DomainError


def _brute_order_dividing(ell: int, n: int) -> int:
    """#{x in (Z/nZ)^*: x^ell = 1}; equals the dual-group character count."""
    if n == 1:
        return 1
    return sum(1 for x in range(1, n + 1)
               if math.gcd(x, n) == 1 and pow(x, ell, n) == 1)


@pytest.mark.parametrize("ell", [2, 3, 4, 5, 6, 7, 8, 12])
def test_a_against_brute_force(ell):
    for n in range(1, 400):
        brute = _brute_order_dividing(ell, n)
        assert charcount.count_order_dividing(ell, n) == brute
        assert charcount.a_value(ell, n) == brute


@pytest.mark.parametrize("ell", [2, 3, 4, 5, 6, 8])
def test_b_value_matches_inversion(ell):
    for n in range(1, 600):
        assert charcount.b_value(ell, n) == charcount.b_via_inversion(ell, n)


@pytest.mark.parametrize("ell", [2, 3, 4, 8])
def test_a_is_divisor_sum_of_b(ell):
    from dirichlet_census.arith import divisors
    for n in range(1, 400):
        assert charcount.a_value(ell, n) == sum(
            charcount.b_value(ell, d) for d in divisors(n))


def test_unit_group_structure_orders_multiply_to_totient():
    for n in range(1, 600):
        orders = charcount.unit_group_structure(n)
        assert math.prod(orders) == totient(n)
        assert all(o > 1 for o in orders)


def test_table_agrees_with_generic_rule():
    primes = [p for p in range(2, 120) if all(p % q for q in range(2, p))]
    for ell in charcount.TABLE_ELLS:
        for p in primes:
            for r in range(1, 7):
                assert (charcount._a_local_table(ell, p, r)
                        == charcount._a_local_generic(ell, p, r))


def test_b_one_is_one():
    for ell in (2, 3, 4, 8):
        assert charcount.b_value(ell, 1) == 1


def test_known_small_values():
    # mod 8 has unit group C2 x C2: four quadratic characters, one primitive
    assert charcount.a_value(2, 8) == 4
    assert charcount.b_value(2, 8) == 2
    # mod 7 is cyclic of order 6
    assert charcount.a_value(3, 7) == 3
    assert charcount.a_value(6, 7) == 6
    assert charcount.a_value(4, 5) == 4
    assert charcount.b_value(8, 360) == 0


def test_rejects_bad_ell():
    with pytest.raises(DomainError):
        charcount.a_value(1, 10)
    with pytest.raises(DomainError):
        charcount.b_value(0, 10)
