import pytest
import sympy
from hypothesis import given, settings, strategies as st
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from cuboidgeom import fundgroup as F

matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(st.lists(st.integers(-12, 12), min_size=c, max_size=c), min_size=r, max_size=r)))


def invariants(diag):
    return [abs(d) for d in diag if d]


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_snf_matches_sympy(M):
    ncols = len(M[0])
    D, U, V = F.smith_normal_form(M, ncols)
    assert F.matmul(F.matmul(U, M), V) == D
    assert abs(F.determinant(U)) == 1 and abs(F.determinant(V)) == 1
    ours = invariants(F.diagonal(D))
    theirs = invariants(list(sympy_snf(sympy.Matrix(M), domain=sympy.ZZ).diagonal()))
    assert ours == sorted(theirs)
    for a, b in zip(ours, ours[1:]):
        assert b % a == 0


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5).flatmap(lambda n: st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n),
                                                     min_size=n, max_size=n)))
def test_determinant_matches_sympy(M):
    assert F.determinant(M) == sympy.Matrix(M).det()


@given(st.lists(st.sampled_from([1, -1, 2, -2, 3, -3]), max_size=20))
def test_free_reduce(word):
    r = F.free_reduce(word)
    assert F.free_reduce(r) == r
    assert all(a != -b for a, b in zip(r, r[1:]))
    assert F.free_reduce(tuple(word) + F.invert(word)) == ()


def test_free_reduce_rejects_zero():
    with pytest.raises(F.UnknownGenerator):
        F.free_reduce([1, 0])


@pytest.mark.parametrize("k", range(2, 11))
def test_nonorientable_abelianization(k):
    ab = F.abelianization(F.surface_group_nonorientable(k))
    assert (ab.rank, ab.torsion) == (k - 1, (2,))


@given(st.integers(2, 6), st.integers(0, 5))
def test_abelianization_additive_on_free_products(k, n):
    a = F.abelianization(F.free_product(F.surface_group_nonorientable(k), F.free_group(n)))
    assert (a.rank, a.torsion) == (k - 1 + n, (2,))


def test_basic_groups():
    assert str(F.abelianization(F.trivial_group())) == "0"
    assert str(F.abelianization(F.free_abelian(3))) == "Z^3"
    assert str(F.AbelianGroup(2, (2,))) == "Z^2 + Z/2"
    with pytest.raises(F.InvalidRank):
        F.surface_group_nonorientable(0)


@pytest.mark.parametrize("s", ["S1", "S2"])
def test_open_surface_extensions(s):
    d = F.open_surface_extension(s).to_dict()
    assert d["split"] and d["consistent"]
    assert d["kernel"]["name"] == "Z^2" and d["quotient"]["name"] == "F_3"
    assert d["sequence"] == "1 -> Z^2 -> G -> F_3 -> 1"


def test_report_needs_census():
    with pytest.raises(F.MissingInput):
        F.assemble_pi1_report(None)


def test_report_contents():
    census = {"upsilon": {"complex": 48, "real": 24}, "V": {"complex": 16, "real": 8}}
    r = F.assemble_pi1_report(census, None)
    assert [e["abelianization"]["text"] for e in r["complex"]] == ["0"] * 4
    assert F.DISCREPANCY_NOTE in r["notes"]
    assert any("V" in n and "8" in n for n in r["notes"])
    assert {e["status"] for e in r["real"]} == {"BUDGET"}


def test_report_with_euler_values():
    census = {"upsilon": {"complex": 48, "real": 24}, "V": {"complex": 16, "real": 16}}
    euler = {"upsilon": {"k": 50, "chi": -24, "status": "ok"}, "V": {"k": 34, "chi": -16, "status": "ok"}}
    real = {e["surface"]: e for e in F.assemble_pi1_report(census, euler)["real"]}
    assert {e["status"] for e in real.values()} == {"PASS"}
    assert real["Upsilon(R)"]["abelianization"]["text"] == "Z^25 + Z/2"
    assert real["Upsilon~(R)"]["abelianization"]["text"] == "Z^49 + Z/2"
    assert real["V(R)"]["abelianization"]["text"] == "Z^17 + Z/2"


def test_report_flags_inconsistent_chi():
    census = {"upsilon": {"complex": 48, "real": 24}, "V": {"complex": 16, "real": 16}}
    euler = {"upsilon": {"k": 50, "chi": -20, "status": "ok"}, "V": {"k": 10, "chi": 8, "status": "ok"}}
    real = {e["surface"]: e for e in F.assemble_pi1_report(census, euler)["real"]}
    assert real["Upsilon(R)"]["status"] == "INCONSISTENT"
    assert real["V(R)"]["status"] == "INCONSISTENT"
