"""The cuboid surface and the face-cuboid surface: charts, singular loci, censuses."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt
from typing import Sequence

from . import _dense
from . import _modlinalg as ml
from .groebner import (
    Ideal,
    buchberger,
    is_groebner_basis,
    quotient_dimension,
    shape_position_solve,
    verify_solution,
)
from .polynomial import Polynomial, Ring, UnknownVariable, jacobian, maximal_minors
from .scalar import GF, QQ, RationalFunctionField, is_prime, next_prime
from .unireal import real_solution_count


class VarietyError(ArithmeticError):
    pass


class UnknownVariety(VarietyError, KeyError):
    pass


class StratumNotZeroDimensional(VarietyError):
    pass


class PointNotSingular(VarietyError):
    pass


class BadPrime(VarietyError):
    pass


class DegenerateCoefficients(VarietyError):
    pass


class NoSplittingPrime(VarietyError):
    pass


@dataclass
class VarietySpec:
    name: str
    variables: tuple
    equations: list
    codim: int

    @property
    def ring(self) -> Ring:
        return self.equations[0].ring

    @classmethod
    def from_strings(cls, name: str, variables: Sequence[str], equations: Sequence[str]) -> "VarietySpec":
        R = Ring(variables)
        return cls(name, tuple(variables), [R.parse(e) for e in equations], len(equations))


UPSILON_EQUATIONS = ("A^2 + B^2 - Z^2", "B^2 + C^2 - X^2", "C^2 + A^2 - Y^2", "A^2 + X^2 - U^2")
V_EQUATIONS = ("A^2 + C^2 - Y^2", "B^2 + C^2 - X^2", "A^2 + X^2 - U^2")


def builtin(name: str) -> VarietySpec:
    key = name.lower()
    if key == "upsilon":
        return VarietySpec.from_strings("upsilon", ("A", "B", "C", "X", "Y", "Z", "U"), UPSILON_EQUATIONS)
    if key == "v":
        return VarietySpec.from_strings("V", ("A", "B", "C", "X", "Y", "U"), V_EQUATIONS)
    raise UnknownVariety(name)


# --------------------------------------------------------------------------
# charts and singular loci


def chart_equations(spec: VarietySpec, chart: str, domain=QQ) -> list[Polynomial]:
    """Defining equations on the affine chart ``chart = 1``."""
    if chart not in spec.variables:
        raise UnknownVariable(f"{chart!r} is not a variable of {spec.name}")
    R = Ring([v for v in spec.variables if v != chart], domain)
    return [f.substitute({chart: 1}, R) for f in spec.equations]


def singular_locus_ideal(spec: VarietySpec, chart: str, vanish: Sequence[str] = (), domain=QQ) -> Ideal:
    """Chart equations plus all maximal minors of the chart Jacobian.

    Variables in ``vanish`` are set to zero after differentiation, which
    restricts the singular locus to that coordinate stratum.
    """
    eqs = chart_equations(spec, chart, domain)
    R = eqs[0].ring
    gens = eqs + maximal_minors(jacobian(eqs, R.variables))
    if vanish:
        for v in vanish:
            R.index(v)
        S = Ring([v for v in R.variables if v not in vanish], domain)
        gens = [g.substitute({v: 0 for v in vanish}, S) for g in gens]
        R = S
    return Ideal([g for g in gens if not g.is_zero()], R)


# --------------------------------------------------------------------------
# census


@dataclass
class StratumResult:
    chart: str
    vanish: tuple
    complex: int
    real: int | None
    dimension: int
    verified: bool
    solution: object = field(default=None, repr=False)
    generators: list = field(default_factory=list, repr=False)

    def to_dict(self) -> dict:
        return {"chart": self.chart, "vanish": list(self.vanish), "complex": self.complex,
                "real": self.real, "quotient_dimension": self.dimension, "verified": self.verified}


@dataclass
class SingularCensus:
    variety: str
    ordering: tuple
    complex: int
    real: int | None
    strata: list
    characteristic: int = 0
    odp: dict | None = None

    def to_dict(self) -> dict:
        out = {"variety": self.variety, "ordering": list(self.ordering), "complex": self.complex,
               "real": self.real, "characteristic": self.characteristic,
               "strata": [s.to_dict() for s in self.strata]}
        if self.odp is not None:
            out["odp"] = self.odp
        return out


def _stratum_seed(seed: int, k: int, p: int) -> int:
    return seed * 1_000_003 + k * 7919 + p


def _point_stratum(spec, chart, vanish, domain) -> StratumResult:
    """Stratum where every coordinate but ``chart`` vanishes: a single candidate point."""
    eqs = chart_equations(spec, chart, domain)
    R = eqs[0].ring
    gens = eqs + maximal_minors(jacobian(eqs, R.variables))
    zero = {v: 0 for v in R.variables}
    singular = all(g.evaluate(zero) == 0 for g in gens)
    n = 1 if singular else 0
    return StratumResult(chart, tuple(vanish), n, n if domain.mod == 0 else None, n, True)


def census_stratum(spec: VarietySpec, chart: str, vanish: Sequence[str], *, domain=QQ,
                   seed: int = 0, index: int = 0) -> StratumResult:
    if len(vanish) == len(spec.variables) - 1:
        return _point_stratum(spec, chart, vanish, domain)
    I = singular_locus_ideal(spec, chart, vanish, domain)
    gb = buchberger(I, I.ring.make_order("grevlex"))
    if gb.is_unit_ideal():
        return StratumResult(chart, tuple(vanish), 0, 0 if domain.mod == 0 else None, 0, True)
    stair = quotient_dimension(gb)
    if not stair.finite:
        raise StratumNotZeroDimensional(f"{spec.name}: singular locus in chart {chart}=1 "
                                        f"with {','.join(vanish) or 'nothing'}=0 is positive dimensional")
    rng = random.Random(_stratum_seed(seed, index, domain.mod))
    sol = shape_position_solve(I, rng=rng, gb=gb)
    ok = verify_solution(sol, I.generators)
    real = real_solution_count(sol) if domain.mod == 0 else None
    return StratumResult(chart, tuple(vanish), sol.distinct, real, len(stair), ok, sol, I.generators)


def census(spec: VarietySpec, *, ordering: Sequence[str] | None = None, domain=QQ,
           seed: int = 0) -> SingularCensus:
    """Stratified count of projective singular points.

    Stratum ``k`` is the chart ``ordering[k] = 1`` with all earlier coordinates
    zero, so each point is counted once (first nonzero coordinate normalized).
    """
    ordering = tuple(ordering or spec.variables)
    if sorted(ordering) != sorted(spec.variables):
        raise VarietyError("ordering must be a permutation of the variables")
    strata = []
    for k, v in enumerate(ordering):
        strata.append(census_stratum(spec, v, ordering[:k], domain=domain, seed=seed, index=k))
    total = sum(s.complex for s in strata)
    real = sum(s.real for s in strata) if domain.mod == 0 else None
    return SingularCensus(spec.name, ordering, total, real, strata, domain.mod)


def compact_ordering(spec: VarietySpec) -> tuple:
    """Ordering starting with U, the chart that contains every real point."""
    return ("U",) + tuple(v for v in spec.variables if v != "U")


def fp_prepass(spec: VarietySpec, primes: Sequence[int], seed: int = 0) -> dict[int, int]:
    """Singular point totals over the algebraic closure of F_p for each prime."""
    out = {}
    for p in primes:
        if p == 2 or not is_prime(p):
            raise BadPrime(f"need an odd prime, got {p}")
        out[p] = census(spec, domain=GF(p), seed=seed).complex
    return out


DEFAULT_PRIMES = (10007, 10009, 10037, 10039, 10061)


# --------------------------------------------------------------------------
# ordinary double points


@dataclass
class OdpResult:
    is_odp: bool
    reason: str
    jacobian_rank: int
    restricted_rank: int | None
    tangent_dimension: int

    def to_dict(self) -> dict:
        return {"odp": self.is_odp, "reason": self.reason, "jacobian_rank": self.jacobian_rank,
                "restricted_rank": self.restricted_rank, "tangent_dimension": self.tangent_dimension}


def _mod_value(c, p: int) -> int:
    if isinstance(c, Fraction):
        if c.denominator % p == 0:
            raise BadPrime(f"denominator divisible by {p}")
        return c.numerator * pow(c.denominator, -1, p) % p
    return int(c) % p


def _eval_mod(f: Polynomial, point: dict, p: int) -> int:
    vals = [point[v] % p for v in f.ring.variables]
    total = 0
    for m, c in f.terms.items():
        t = _mod_value(c, p)
        for x, e in zip(vals, m):
            if e:
                t = t * pow(x, e, p) % p
        total += t
    return total % p


def classify_odp(equations: Sequence[Polynomial], point: dict, p: int) -> OdpResult:
    """Ordinary double point test for a complete intersection at an F_p point.

    The Jacobian must have rank one less than the number of equations; the
    left-kernel vector weights the Hessians, and the combined Hessian
    restricted to the Jacobian's right kernel must be nondegenerate.
    """
    if p == 2 or not is_prime(p):
        raise BadPrime(f"need an odd prime, got {p}")
    eqs = list(equations)
    R = eqs[0].ring
    names = R.variables
    if any(_eval_mod(f, point, p) for f in eqs):
        raise PointNotSingular("point is not on the variety")
    J = [[_eval_mod(f.derivative(v), point, p) for v in names] for f in eqs]
    r = ml.rank(J, p)
    K = ml.kernel(J, p, ncols=len(names))
    if r == len(eqs):
        raise PointNotSingular("Jacobian has full rank")
    if r < len(eqs) - 1:
        return OdpResult(False, "jacobian rank below codimension minus one", r, None, len(K))
    lam = ml.left_kernel(J, p)[0]
    H = [[0] * len(names) for _ in names]
    for li, f in zip(lam, eqs):
        if not li:
            continue
        for a, va in enumerate(names):
            fa = f.derivative(va)
            for b in range(a, len(names)):
                h = _eval_mod(fa.derivative(names[b]), point, p) * li % p
                H[a][b] = (H[a][b] + h) % p
                if b != a:
                    H[b][a] = H[a][b]
    HK = [[sum(H[i][j] * k[j] for j in range(len(names))) % p for k in K] for i in range(len(names))]
    restricted = [[sum(K[a][i] * HK[i][b] for i in range(len(names))) % p for b in range(len(K))]
                  for a in range(len(K))]
    rr = ml.rank(restricted, p)
    if rr == len(K):
        return OdpResult(True, "nondegenerate quadratic part", r, rr, len(K))
    return OdpResult(False, "degenerate quadratic part", r, rr, len(K))


def _reduce_dense(coeffs, p: int) -> list[int]:
    return _dense.trim([_mod_value(c, p) for c in coeffs])


def find_splitting_prime(eliminant, *, start: int = 1009, limit: int = 10 ** 5,
                         extra=()) -> int:
    """Smallest prime >= ``start`` modulo which ``eliminant`` has distinct roots, all in F_p.

    ``extra`` holds further dense polynomials whose denominators must stay
    invertible (the coordinate polynomials).
    """
    n = len(eliminant) - 1
    p = next_prime(max(start, 3) - 1)
    while p < limit:
        try:
            g = _reduce_dense(eliminant, p)
            for e in extra:
                _reduce_dense(e, p)
        except BadPrime:
            p = next_prime(p)
            continue
        if len(g) - 1 == n and len(_dense.gcd(g, _dense.derivative(g, p), p)) == 1:
            if len(_dense.roots_mod_p(g, p, random.Random(p))) == n:
                return p
        p = next_prime(p)
    raise NoSplittingPrime(f"no prime below {limit} splits the eliminant")


def stratum_points_mod_p(stratum: StratumResult, p: int) -> list[dict]:
    """Explicit F_p points of a characteristic-0 stratum at a splitting prime."""
    sol = stratum.solution
    ring = sol.ring
    g = _reduce_dense(_dense.squarefree_part(sol.eliminant), p)
    coords = [_reduce_dense(c, p) for c in sol.old_coordinates]
    pts = []
    for t in _dense.roots_mod_p(g, p, random.Random(p)):
        pt = {v: _dense.evaluate(c, t, p) for v, c in zip(ring.variables, coords)}
        for v in stratum.vanish:
            pt[v] = 0
        pts.append(pt)
    return pts


def classify_census(spec: VarietySpec, result: SingularCensus, *, start: int = 1009) -> dict:
    """Classify every point of a characteristic-0 census over splitting primes."""
    strata = []
    total = odp = 0
    for s in result.strata:
        if s.complex == 0:
            continue
        eqs_chart = chart_equations(spec, s.chart)
        if s.solution is None:
            p = next_prime(start - 1)
            pts = [{v: 0 for v in eqs_chart[0].ring.variables}]
        else:
            sqf = _dense.squarefree_part(s.solution.eliminant)
            p = find_splitting_prime(sqf, start=start, extra=s.solution.old_coordinates)
            pts = stratum_points_mod_p(s, p)
        outcomes = []
        for pt in pts:
            for g in s.generators:
                if _eval_mod(g, pt, p):
                    raise VarietyError("reduced point does not satisfy the singular-locus ideal")
            outcomes.append(classify_odp(eqs_chart, pt, p))
        n_odp = sum(o.is_odp for o in outcomes)
        total += len(outcomes)
        odp += n_odp
        strata.append({"chart": s.chart, "vanish": list(s.vanish), "prime": p, "points": len(outcomes),
                       "odp": n_odp, "exceptions": [o.to_dict() for o in outcomes if not o.is_odp]})
    return {"points": total, "odp": odp, "exceptions": total - odp, "strata": strata}


# --------------------------------------------------------------------------
# the quadric section and its Groebner basis


@dataclass(frozen=True)
class HyperplaneSpec:
    """Coefficients of ``alpha A^2 + beta B^2 + gamma C^2 = delta``."""

    alpha: int
    beta: int
    gamma: int
    delta: int

    def __post_init__(self):
        if self.gamma == 0:
            raise DegenerateCoefficients("gamma must be nonzero")

    @classmethod
    def random(cls, p: int, rng: random.Random) -> "HyperplaneSpec":
        return cls(*(rng.randrange(1, p) for _ in range(4)))


# chart variable -> (parameters, chart variables in increasing order)
LEMMA_CHARTS = {
    "base": (("A", "B"), ("C", "U", "X", "Y", "Z")),
    "A": (("B",), ("C", "U", "X", "Y", "Z")),
    "B": (("A",), ("C", "U", "X", "Y", "Z")),
    "C": (("A",), ("B", "U", "X", "Y", "Z")),
    "X": (("A",), ("B", "C", "U", "Y", "Z")),
    "Y": (("A",), ("B", "C", "U", "X", "Z")),
    "U": (("A",), ("B", "C", "X", "Y", "Z")),
    "Z": (("A",), ("B", "C", "U", "X", "Y")),
}


def lemma_generators(h: HyperplaneSpec) -> list[str]:
    return [f"{h.gamma}*C^2 + {h.alpha}*A^2 + {h.beta}*B^2 - {h.delta}",
            "X^2 - B^2 - C^2", "Y^2 - C^2 - A^2", "Z^2 - A^2 - B^2", "U^2 - A^2 - B^2 - C^2"]


def _excluded(chart: str, h: HyperplaneSpec, p: int) -> str | None:
    a, b, g = h.alpha % p, h.beta % p, h.gamma % p
    if chart in ("X", "U") and b == g:
        return "beta = gamma"
    if chart == "X" and a == 0:
        return "alpha = 0"
    if chart in ("C", "Y") and b == 0:
        return "beta = 0"
    return None


def lemma_system(h: HyperplaneSpec, p: int, chart: str = "base", values: dict | None = None,
                 function_field: bool = False) -> tuple[list[Polynomial], str]:
    """The five generators on a chart over F_p, with the chart order string.

    Parameters are either specialized to ``values`` or kept as transcendentals
    of a rational function field over F_p.
    """
    params, cvars = LEMMA_CHARTS[chart]
    full = Ring(("A", "B", "C", "X", "Y", "Z", "U"), GF(p))
    gens = [full.parse(s) for s in lemma_generators(h)]
    if function_field:
        K = RationalFunctionField(Ring(params, GF(p)))
        bind = {v: K.param(v) for v in params}
    else:
        K = GF(p)
        bind = {v: values[v] for v in params}
    R = Ring(cvars, K)
    if chart != "base":
        bind[chart] = 1
    out = [f.substitute(bind, R) for f in gens]
    return out, "lex:" + "<".join(cvars)


@dataclass
class LemmaChartResult:
    chart: str
    order: str
    leading: list
    expected: list
    raw_is_basis: bool
    verified: bool
    ok: bool

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def check_lemma_chart(h: HyperplaneSpec, p: int, chart: str, values: dict | None = None,
                      function_field: bool = False) -> LemmaChartResult:
    if p == 2 or not is_prime(p):
        raise BadPrime(f"need an odd prime, got {p}")
    why = _excluded(chart, h, p)
    if why:
        raise DegenerateCoefficients(f"chart {chart}=1 excluded: {why}")
    gens, spec = lemma_system(h, p, chart, values, function_field)
    R = gens[0].ring
    order = R.make_order(spec)
    raw_ok, _ = is_groebner_basis(gens, order)
    gb = buchberger(Ideal(gens, R), order)
    ok2, _ = is_groebner_basis(gb.elements, order)
    cvars = LEMMA_CHARTS[chart][1]
    lead = sorted((_mono_name(R, m) for m in gb.leading_monomials()),
                  key=lambda s: cvars.index(s.split("^")[0]) if s.split("^")[0] in cvars else -1)
    expected = [f"{v}^2" for v in cvars]
    if sorted(lead) != sorted(expected):
        raise DegenerateCoefficients(f"chart {chart}=1: leading monomials {lead}")
    return LemmaChartResult(chart, spec, lead, expected, raw_ok, ok2, ok2 and lead == expected)


def _mono_name(R: Ring, m) -> str:
    parts = [v if e == 1 else f"{v}^{e}" for v, e in zip(R.variables, m) if e]
    return "*".join(parts) or "1"


def verify_lemma_2_1(h: HyperplaneSpec, p: int, *, trials: int = 3, seed: int = 0,
                     charts: Sequence[str] | None = None, function_field: bool = False) -> dict:
    """Groebner verification of the quadric-section system on the requested charts.

    The base system is also checked with the leading coefficient made
    explicit: the C^2 generator leads with coefficient gamma.
    """
    if p == 2 or not is_prime(p):
        raise BadPrime(f"need an odd prime, got {p}")
    rng = random.Random(seed * 65537 + p)
    charts = list(charts or LEMMA_CHARTS)
    rows = []
    for t in range(1 if function_field else trials):
        values = {"A": rng.randrange(1, p), "B": rng.randrange(1, p)}
        for c in charts:
            try:
                r = check_lemma_chart(h, p, c, values, function_field)
                rows.append({"trial": t, "values": None if function_field else values, **r.to_dict()})
            except DegenerateCoefficients as exc:
                rows.append({"trial": t, "chart": c, "ok": False, "degenerate": str(exc)})
    base_lead = None
    if "base" in charts:
        base_lead = [f"{h.gamma % p}*C^2", "U^2", "X^2", "Y^2", "Z^2"]
    return {"p": p, "hyperplane": h.__dict__.copy(), "function_field": function_field,
            "initial_terms": base_lead, "results": rows,
            "degenerate": sorted({r["chart"] for r in rows if "degenerate" in r}),
            "all_ok": all(r.get("ok") for r in rows if "degenerate" not in r)}


def order_dependence_check() -> dict:
    """Groebner-basis status of the four defining quadrics under two lex orders.

    The fourth generator ``A^2 + X^2 - U^2`` is also tried in the reduced form
    ``U^2 - A^2 - B^2 - C^2`` (equal modulo the second generator).
    """
    spec = builtin("upsilon")
    R = Ring(spec.variables)
    F = [R.parse(e) for e in UPSILON_EQUATIONS]
    G = F[:3] + [R.parse("U^2 - A^2 - B^2 - C^2")]
    rows = []
    for order in ("lex:Z>Y>X>U", "lex:U>X>Y>Z"):
        o = R.make_order(order)
        rows.append({"order": order, "original": is_groebner_basis(F, o)[0], "replaced": is_groebner_basis(G, o)[0]})
    return {"generators": list(UPSILON_EQUATIONS), "replacement": "U^2 - A^2 - B^2 - C^2", "rows": rows}


# --------------------------------------------------------------------------
# integer search


def search_face_cuboids(bound: int) -> list[tuple]:
    """Primitive integer points (A,B,C,X,Y,U) of the face-cuboid surface with 0 < A,B,C <= bound."""
    if bound < 1:
        raise ValueError("bound must be positive")
    by_c: dict[int, list[tuple[int, int]]] = {}
    for c in range(1, bound + 1):
        c2 = c * c
        for b in range(1, bound + 1):
            s = b * b + c2
            r = isqrt(s)
            if r * r == s:
                by_c.setdefault(c, []).append((b, r))
    out = []
    for c, legs in by_c.items():
        for a, y in legs:
            for b, x in legs:
                s = a * a + x * x
                u = isqrt(s)
                if u * u != s:
                    continue
                g = 0
                for v in (a, b, c, x, y, u):
                    g = gcd(g, v)
                if g == 1:
                    out.append((a, b, c, x, y, u))
    out.sort()
    return out


def check_face_cuboid(t: Sequence[int]) -> bool:
    a, b, c, x, y, u = t
    return a * a + c * c == y * y and b * b + c * c == x * x and a * a + x * x == u * u


__all__ = [
    "order_dependence_check", "BadPrime", "DEFAULT_PRIMES", "DegenerateCoefficients", "HyperplaneSpec", "LEMMA_CHARTS",
    "NoSplittingPrime", "OdpResult", "PointNotSingular", "SingularCensus", "StratumNotZeroDimensional",
    "StratumResult", "UnknownVariety", "VarietyError", "VarietySpec", "builtin", "census",
    "chart_equations", "check_face_cuboid", "check_lemma_chart", "classify_census", "classify_odp",
    "compact_ordering", "find_splitting_prime", "fp_prepass", "lemma_system", "search_face_cuboids",
    "singular_locus_ideal", "verify_lemma_2_1",
]
