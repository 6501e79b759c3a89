import itertools
import random

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from cuboidgeom import bielliptic as B

SMALL_PRIMES = [5, 7, 11, 13, 17, 19, 23]


def brute_count(a, p):
    """Projective points of y^2 z = x^3 + a x z^2 by scanning normalized triples."""
    n = 0
    for x, y in itertools.product(range(p), repeat=2):
        if (y * y - x ** 3 - a * x) % p == 0:
            n += 1
    return n + 1  # the point at infinity [0:1:0]


@pytest.mark.parametrize("p", SMALL_PRIMES)
@pytest.mark.parametrize("curve", [B.E_CURVE, B.E_PRIME_CURVE])
def test_point_count_matches_brute_force(curve, p):
    C = curve.over(p)
    pts = C.points()
    assert len(pts) == brute_count(curve.a, p)
    assert len(set(P.as_tuple() for P in pts)) == len(pts)


def test_two_torsion():
    assert len(B.two_torsion(B.E_PRIME_CURVE.over(5))) == 4  # -1 is a square mod 5
    assert len(B.two_torsion(B.E_PRIME_CURVE.over(7))) == 2
    assert len(B.two_torsion(B.E_CURVE.over(7))) == 4  # x(x - 2)(x + 2)
    assert len(B.two_torsion(B.E_CURVE)) == 4
    for T in B.two_torsion(B.E_CURVE.over(13)):
        assert B.E_CURVE.over(13).add(T, T) == B.E_CURVE.over(13).O


def test_bad_prime():
    with pytest.raises(B.BadPrime):
        B.E_CURVE.over(2)
    with pytest.raises(B.PointNotOnCurve):
        B.E_CURVE.over(13).point(1, 1)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SMALL_PRIMES + [10007]), st.integers(0, 2 ** 32), st.sampled_from(["E", "E'"]))
def test_group_law(p, seed, which):
    C = (B.E_CURVE if which == "E" else B.E_PRIME_CURVE).over(p)
    rng = random.Random(seed)
    P, Q, R = (C.random_point(rng) for _ in range(3))
    assert C.add(P, C.O) == P
    assert C.add(P, C.neg(P)) == C.O
    assert C.add(P, Q) == C.add(Q, P)
    assert C.add(C.add(P, Q), R) == C.add(P, C.add(Q, R))
    assert C.contains(C.add(P, Q))


@pytest.mark.parametrize("p", [11, 13, 17])
def test_lagrange(p):
    # independent consistency: |E(F_p)| * P = O for every P
    C = B.E_CURVE.over(p)
    pts = C.points()
    n = len(pts)
    for P in pts:
        acc = C.O
        for _ in range(n):
            acc = C.add(acc, P)
        assert acc == C.O


def test_phi_symbolic_with_sympy():
    x1, y1, z1, x2, y2, z2 = sympy.symbols("x1 y1 z1 x2 y2 z2")
    loc = {str(s): s for s in (x1, y1, z1, x2, y2, z2)}
    img = {c: sympy.sympify(t.replace("^", "**"), locals=loc) for c, t in B.PHI_TEXT.items()}
    rel = [y1 ** 2 * z1 - x1 ** 3 + 4 * x1 * z1 ** 2, y2 ** 2 * z2 - x2 ** 3 + 4 * x2 * z2 ** 2]
    G = sympy.groebner(rel, x1, y1, z1, x2, y2, z2, order="grevlex")
    A, Bc, C, X, Y, U = (img[k] for k in B.PHI_COORDS)
    quadrics = [A ** 2 + C ** 2 - Y ** 2, Bc ** 2 + C ** 2 - X ** 2, A ** 2 + X ** 2 - U ** 2]
    for q in quadrics:
        assert G.reduce(sympy.expand(q))[1] == 0
    # iota flips y1, y2; every coordinate is invariant
    for f in img.values():
        assert sympy.expand(f.subs({y1: -y1, y2: -y2}, simultaneous=True) - f) == 0


def test_phi_symbolic_internal():
    r = B.symbolic_phi_check()
    assert r["all_zero"] and r["iota_invariant_all"] and r["bihomogeneous"]


@pytest.mark.parametrize("p", B.DEFAULT_PRIMES)
def test_phi_sampling(p):
    r = B.sample_phi(p, samples=200, seed=3)
    assert r["ok"]
    assert r["on_V"] + r["base_points"] == r["samples"]


def test_phi_lands_on_V_exhaustively_small_prime():
    C = B.E_CURVE.over(13)
    for P, Q in itertools.product(C.points(), repeat=2):
        img = B.phi(P, Q, C)
        assert img.is_zero() or B.on_V(img, 13)


def test_projectively_equal():
    assert B.projectively_equal((1, 2, 3), (2, 4, 6))
    assert B.projectively_equal((1, 2, 3), (5, 10, 15), 13)
    assert not B.projectively_equal((1, 2, 3), (1, 2, 4))


@pytest.mark.parametrize("p", [13, 17, 10007])
def test_conjugations(p):
    assert B.conjugation_check(p, samples=100, seed=1)["ok"]


@pytest.mark.parametrize("surface", ["S1", "S2"])
@pytest.mark.parametrize("p", [5, 13, 17])
def test_quotient_census(surface, p):
    assert B.quotient_census(surface, p)["ok"]
