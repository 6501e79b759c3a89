from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from cuboidgeom.scalar import (
    GF, QQ, DivisionByZero, NotPrime, is_prime, legendre, next_prime, sqrt_mod,
)

PRIMES = [3, 5, 7, 13, 10007]


@given(st.integers(min_value=-10, max_value=20000))
def test_is_prime_matches_sympy(n):
    assert is_prime(n) == (n > 1 and sympy.isprime(n))


def test_next_prime():
    assert next_prime(10000) == 10007
    assert next_prime(10007) in (10007, 10009)


@pytest.mark.parametrize("p", PRIMES)
def test_legendre_and_sqrt(p):
    for a in range(1, min(p, 200)):
        r = sqrt_mod(a, p)
        if legendre(a, p) == 1:
            assert r is not None and r * r % p == a
        else:
            assert r is None


@given(st.sampled_from(PRIMES), st.integers(), st.integers())
def test_field_axioms(p, a, b):
    F = GF(p)
    x, y = F.element(a), F.element(b)
    assert int(x + y) == (a + b) % p
    assert int(x * y) == (a * b) % p
    if y:
        assert (x / y) * y == x


def test_division_by_zero():
    F = GF(7)
    with pytest.raises(ZeroDivisionError):
        F.element(3) / F.element(0)
    with pytest.raises(DivisionByZero):
        F.inv(F.element(0))


def test_gf_rejects_composite():
    with pytest.raises(NotPrime):
        GF(9)


def test_qq_convert():
    assert QQ.convert(Fraction(6, 4)) == Fraction(3, 2)
    assert QQ.convert(5) == 5
