import pickle
from fractions import Fraction

import pytest

from cuboidgeom import eulerchar as E
from cuboidgeom.polynomial import Ring


def test_suite_expected_values_follow_from_names():
    cases = E.milnor_suite_cases()
    assert len(cases) >= 20
    for name, variables, text, expected in cases:
        if name.startswith("A"):
            assert expected == int(name[1:])
        else:
            a, b, c = (int(ch) for ch in name[1:])
            assert text == f"x^{a} + y^{b} + z^{c}"
            assert expected == (a - 1) * (b - 1) * (c - 1)


def test_suite_routes_agree():
    rows = E.milnor_suite()
    bad = [r for r in rows if not r["ok"]]
    assert not bad, bad


@pytest.mark.parametrize("text,mu", [("x^2 + y^2", 1), ("x^2 + y^4", 3), ("x^3 + y^3", 4),
                                     ("x^2*y + y^4", 5), ("x^3 + y^4", 6)])
def test_jet_oracle_small(text, mu):
    R = Ring(["x", "y"])
    st = E.jet_milnor(R(text))
    assert st.value == mu


def test_milnor_result_routes():
    R = Ring(["x", "y", "z"])
    res = E.milnor_number(R("x^2 + y^3 + z^4"))
    assert (res.mu, res.mora, res.jet, res.status) == (6, 6, 6, "ok")


def test_non_isolated_is_reported():
    R = Ring(["x", "y"])
    res = E.milnor_number(R("x^2"), jet_cap=12)
    assert res.mu is None and res.status in ("infinite", "budget", "disagree")


def test_variant_formulas():
    assert E.euler_value(3, 1, "as-printed") == Fraction(-2)
    assert E.euler_value(3, 1, "negated") == Fraction(2)
    assert E.euler_value(3, 1, "plus") == Fraction(1)
    assert E.euler_value(4, 2, "as-printed") == Fraction(-3, 2)
    with pytest.raises(E.NonIntegerResult):
        E.euler_characteristic(4, 2)


def test_k_conversions():
    assert E.k_from_chi(2) == 24
    assert E.k_prime_from_chi(2) == 16


def test_H_builders():
    H = E.build_H_upsilon()
    assert H.constant_coeff() == 0
    HV = E.build_H_V()
    assert "Z" not in HV.ring.variables
    assert HV.constant_coeff() == 0


def test_H_V_budget_and_resume():
    r1 = E.compute_k_prime(budget=500, jet_cap=6)
    assert r1.milnor.status == "budget"
    state = pickle.loads(pickle.dumps((r1.milnor.mora_state, r1.milnor.jet_state)))
    r2 = E.compute_k_prime(budget=1000, jet_cap=6, resume=state[0], jet_resume=state[1])
    assert r2.milnor.status in ("budget", "ok")
    assert r2.milnor.mora_state.steps > r1.milnor.mora_state.steps
