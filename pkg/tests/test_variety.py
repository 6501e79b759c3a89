import itertools
from math import gcd, isqrt

import pytest
import sympy

from cuboidgeom import variety
from cuboidgeom.polynomial import Ring
from cuboidgeom.scalar import GF


# -- independent oracle: brute-force singular points over F_p (no Groebner code)

def _det(M, p):
    M = [r[:] for r in M]
    d = 1
    for i in range(len(M)):
        piv = next((j for j in range(i, len(M)) if M[j][i] % p), None)
        if piv is None:
            return 0
        if piv != i:
            M[i], M[piv] = M[piv], M[i]
            d = -d
        d = d * M[i][i] % p
        inv = pow(M[i][i], -1, p)
        for j in range(i + 1, len(M)):
            f = M[j][i] * inv % p
            M[j] = [(a - f * b) % p for a, b in zip(M[j], M[i])]
    return d % p


def _singular(J, p):
    k = len(J)
    return all(_det([[r[c] for c in cols] for r in J], p) == 0
               for cols in itertools.combinations(range(len(J[0])), k))


def _normalize(v, p):
    inv = pow(next(x for x in v if x % p), -1, p)
    return tuple(x * inv % p for x in v)


def brute_singular_count(name, p):
    roots = {}
    for r in range(p):
        roots.setdefault(r * r % p, []).append(r)
    pts = set()
    for A, B, C in itertools.product(range(p), repeat=3):
        zs = roots.get((A * A + B * B) % p, []) if name == "upsilon" else [0]
        for Z in zs:
            for X in roots.get((B * B + C * C) % p, []):
                for Y in roots.get((A * A + C * C) % p, []):
                    for U in roots.get((A * A + X * X) % p, []):
                        if name == "upsilon":
                            v = (A, B, C, X, Y, Z, U)
                            J = [[A, B, 0, 0, 0, -Z, 0], [0, B, C, -X, 0, 0, 0],
                                 [A, 0, C, 0, -Y, 0, 0], [A, 0, 0, X, 0, 0, -U]]
                        else:
                            v = (A, B, C, X, Y, U)
                            J = [[A, 0, C, 0, -Y, 0], [0, B, C, -X, 0, 0], [A, 0, 0, X, 0, -U]]
                        if any(v) and _singular(J, p):
                            pts.add(_normalize(v, p))
    return len(pts)


@pytest.fixture(scope="module")
def censuses():
    out = {}
    for name in ("upsilon", "V"):
        spec = variety.builtin(name)
        out[name] = (spec, variety.census(spec, seed=0))
    return out


@pytest.mark.parametrize("name,expected", [("upsilon", 48), ("V", 16)])
@pytest.mark.parametrize("p", [13, 17])
def test_census_matches_brute_force(censuses, name, expected, p):
    assert censuses[name][1].complex == expected
    assert brute_singular_count(name, p) == expected


def test_upsilon_real_count(censuses):
    spec, res = censuses["upsilon"]
    assert res.real == 24
    compact = variety.census(spec, ordering=variety.compact_ordering(spec), seed=0)
    assert (compact.complex, compact.real) == (res.complex, res.real)


@pytest.mark.parametrize("name", ["upsilon", "V"])
def test_fp_prepass_agrees(censuses, name):
    spec, res = censuses[name]
    counts = variety.fp_prepass(spec, variety.DEFAULT_PRIMES, seed=0)
    assert set(counts.values()) == {res.complex}


@pytest.mark.parametrize("name", ["upsilon", "V"])
def test_all_points_are_odp(censuses, name):
    spec, res = censuses[name]
    c = variety.classify_census(spec, res)
    assert c["odp"] == c["points"] == res.complex
    assert not c["exceptions"]


def test_census_seed_independent():
    spec = variety.builtin("V")
    a = variety.census(spec, seed=1).to_dict()
    b = variety.census(spec, seed=2).to_dict()
    assert (a["complex"], a["real"]) == (b["complex"], b["real"])


def test_classify_odp_small_examples():
    R = Ring(["x", "y", "z"], GF(13))
    o = {"x": 0, "y": 0, "z": 0}
    assert variety.classify_odp([R("x^2 + y^2 + z^2")], o, 13).is_odp
    assert not variety.classify_odp([R("x^2 + y^3 + z^2")], o, 13).is_odp
    with pytest.raises(variety.BadPrime):
        variety.classify_odp([R("x^2")], o, 2)


def test_unknown_variety():
    with pytest.raises(variety.UnknownVariety):
        variety.builtin("W")


def test_quadric_basis_base_chart_leading_terms():
    h = variety.HyperplaneSpec(3, 5, 7, 2)
    r = variety.check_lemma_chart(h, 10007, "base", {"A": 3, "B": 4})
    assert r.leading == ["C^2", "U^2", "X^2", "Y^2", "Z^2"]
    assert r.raw_is_basis and r.ok
    gens, spec = variety.lemma_system(h, 10007, "base", {"A": 3, "B": 4})
    order = gens[0].ring.make_order(spec)
    ic = gens[0].ring.index("C")
    lead_c = [g.leading_coefficient(order) for g in gens if g.leading_monomial(order)[ic] == 2]
    assert lead_c == [7]


@pytest.mark.parametrize("p", [10007, 10009, 10037])
def test_quadric_basis_all_charts(p):
    h = variety.HyperplaneSpec(3, 5, 7, 2)
    assert variety.verify_lemma_2_1(h, p, trials=1, seed=0)["all_ok"]


def test_quadric_basis_function_field():
    h = variety.HyperplaneSpec(3, 5, 7, 2)
    assert variety.verify_lemma_2_1(h, 10007, charts=["base"], function_field=True)["all_ok"]


def test_order_dependence():
    rows = {r["order"]: (r["original"], r["replaced"]) for r in variety.order_dependence_check()["rows"]}
    assert rows == {"lex:Z>Y>X>U": (False, True), "lex:U>X>Y>Z": (True, True)}


def _sympy_is_basis(texts, gens):
    syms = sympy.symbols(gens)
    loc = dict(zip(gens, syms))
    polys = [sympy.Poly(sympy.sympify(t.replace("^", "**"), locals=loc), *syms) for t in texts]
    lead = [p.monoms(order="lex")[0] for p in polys]
    G = sympy.groebner([p.as_expr() for p in polys], *syms, order="lex")
    return all(any(all(a >= b for a, b in zip(sympy.Poly(g, *syms).monoms(order="lex")[0], m)) for m in lead)
               for g in G.exprs)


def test_order_dependence_against_sympy():
    F = list(variety.UPSILON_EQUATIONS)
    G = F[:3] + ["U^2 - A^2 - B^2 - C^2"]
    first = ("Z", "Y", "X", "U", "A", "B", "C")
    second = ("U", "X", "Y", "Z", "A", "B", "C")
    assert (_sympy_is_basis(F, first), _sympy_is_basis(G, first)) == (False, True)
    assert (_sympy_is_basis(F, second), _sympy_is_basis(G, second)) == (True, True)


def _brute_face(n):
    def sq(k):
        r = isqrt(k)
        return r if r * r == k else None
    out = []
    for a, c in itertools.product(range(1, n + 1), repeat=2):
        y = sq(a * a + c * c)
        if y is None:
            continue
        for b in range(1, n + 1):
            x = sq(b * b + c * c)
            u = x and sq(a * a + x * x)
            if u and gcd(gcd(a, b), c) == 1:
                out.append((a, b, c, x, y, u))
    return sorted(out)


def test_face_search_matches_brute_force():
    found = sorted(variety.search_face_cuboids(700))
    assert found == _brute_face(700)
    assert (153, 672, 104, 680, 185, 697) in found
    assert all(variety.check_face_cuboid(t) for t in found)
