from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from cuboidgeom.polynomial import Ring
from cuboidgeom.unireal import ZeroPolynomial, cauchy_bound, count_real_roots, squarefree_part

t = sympy.Symbol("t")
coeff_lists = st.lists(st.integers(-20, 20), min_size=2, max_size=8).filter(lambda c: c[-1] != 0)


def sym(coeffs):
    return sympy.Poly(list(reversed(coeffs)), t)


@settings(max_examples=80, deadline=None)
@given(coeff_lists)
def test_real_root_count_matches_sympy(coeffs):
    assert count_real_roots(coeffs) == len(set(sympy.real_roots(sym(coeffs))))


@settings(max_examples=60, deadline=None)
@given(coeff_lists, st.integers(-5, 5), st.integers(1, 6))
def test_interval_count_matches_sympy(coeffs, a, width):
    lo, hi = a, a + width
    # sympy counts the closed interval; remove roots on the endpoints
    n = sym(coeffs).count_roots(lo, hi)
    n -= sum(1 for e in (lo, hi) if sym(coeffs).eval(e) == 0)
    assert count_real_roots(coeffs, (lo, hi)) == n


@settings(max_examples=60, deadline=None)
@given(coeff_lists)
def test_cauchy_bound_contains_roots(coeffs):
    b = cauchy_bound(coeffs)
    for r in sympy.real_roots(sym(coeffs)):
        assert abs(r) <= b


def test_squarefree_part():
    # (t - 1)^2 (t + 2)
    sf = squarefree_part([2, -3, 0, 1])
    assert sf == [Fraction(-2), Fraction(1), Fraction(1)]


def test_polynomial_input():
    R = Ring(["t"])
    assert count_real_roots(R("t^4 - 5*t^2 + 4")) == 4
    assert count_real_roots(R("t^2 + 1")) == 0


def test_zero_polynomial():
    with pytest.raises(ZeroPolynomial):
        count_real_roots([0])
