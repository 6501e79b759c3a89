"""The face-cuboid surface V as a quotient of a product of elliptic curves.

Curves are ``y^2 z = x^3 + a x z^2`` with ``a = -4`` (E) and ``a = 1`` (E').
Points are projective triples normalized to ``z = 1`` or equal to ``O = [0:1:0]``.
This module provides the group law, the map Phi from E x E to V, the
automorphisms acting on the product, and symbolic and finite-field checks of
the quotient description.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .groebner import buchberger, normal_form
from .polynomial import Polynomial, Ring
from .scalar import QQ, is_prime, sqrt_mod
from .variety import V_EQUATIONS


class BiellipticError(ArithmeticError):
    pass


class PointNotOnCurve(BiellipticError, ValueError):
    pass


class BadPrime(BiellipticError, ValueError):
    pass


DEFAULT_PRIMES = (13, 17, 10007, 10009, 10037)
PHI_TEXT = {
    "A": "y1^2*y2^2 - 16*x1^2*x2^2",
    "B": "4*(y1^2*x2^2 - y2^2*x1^2)",
    "C": "8*x1*x2*y1*y2",
    "X": "4*(y1^2*x2^2 + y2^2*x1^2)",
    "Y": "y1^2*y2^2 + 16*x1^2*x2^2",
    "U": "(y1^2 + 8*x1*z1)*(y2^2 + 8*x2*z2)",
}
PHI_COORDS = ("A", "B", "C", "X", "Y", "U")
SOURCE_NOTE = ("Phi is defined on E x E; the quotient (E x E')/inv is obtained after conjugating by alpha and "
               "dividing by tau' = id x tau. The symbolic check uses E x E.")


# --------------------------------------------------------------------------
# curves and points


@dataclass(frozen=True)
class CurvePoint:
    x: object
    y: object
    z: object

    @property
    def is_infinity(self) -> bool:
        return self.z == 0

    def as_tuple(self) -> tuple:
        return (self.x, self.y, self.z)


@dataclass(frozen=True)
class CurveSpec:
    """``y^2 z = x^3 + a x z^2`` over QQ (``p = 0``) or F_p."""

    name: str
    a: int
    p: int = 0

    def __post_init__(self):
        if self.p:
            if self.p == 2 or not is_prime(self.p):
                raise BadPrime(f"{self.p} is not an odd prime")
            if self.discriminant() % self.p == 0:
                raise BadPrime(f"{self.name} has bad reduction at {self.p}")

    def discriminant(self) -> int:
        return -64 * self.a ** 3

    def over(self, p: int) -> "CurveSpec":
        return CurveSpec(self.name, self.a, p)

    # field helpers
    def _c(self, v):
        return v % self.p if self.p else Fraction(v)

    def _div(self, a, b):
        if self.p:
            return a * pow(b, -1, self.p) % self.p
        return Fraction(a) / b

    @property
    def O(self) -> CurvePoint:
        return CurvePoint(self._c(0), self._c(1), self._c(0))

    @property
    def T(self) -> CurvePoint:
        return CurvePoint(self._c(0), self._c(0), self._c(1))

    def point(self, x, y, z=1) -> CurvePoint:
        x, y, z = self._c(x), self._c(y), self._c(z)
        if z == 0:
            if x != 0 or y == 0:
                raise PointNotOnCurve(f"[{x}:{y}:0] is not on {self.name}")
            return self.O
        P = CurvePoint(self._div(x, z), self._div(y, z), self._c(1))
        if not self.contains(P):
            raise PointNotOnCurve(f"{P.as_tuple()} is not on {self.name}")
        return P

    def contains(self, P: CurvePoint) -> bool:
        x, y, z = P.as_tuple()
        v = y * y * z - x ** 3 - self.a * x * z * z
        return (v % self.p == 0) if self.p else v == 0

    def _check(self, P: CurvePoint):
        if not self.contains(P) or (P.z == 0 and P != self.O):
            raise PointNotOnCurve(f"{P.as_tuple()} is not a normalized point of {self.name}")

    def neg(self, P: CurvePoint) -> CurvePoint:
        self._check(P)
        if P.is_infinity:
            return P
        return CurvePoint(P.x, self._c(-P.y), P.z)

    def add(self, P: CurvePoint, Q: CurvePoint) -> CurvePoint:
        """Chord-tangent addition with identity O."""
        self._check(P)
        self._check(Q)
        if P.is_infinity:
            return Q
        if Q.is_infinity:
            return P
        if P.x == Q.x:
            if self._c(P.y + Q.y) == 0:
                return self.O
            lam = self._div(3 * P.x * P.x + self.a, 2 * P.y)
        else:
            lam = self._div(Q.y - P.y, Q.x - P.x)
        x3 = self._c(lam * lam - P.x - Q.x)
        y3 = self._c(lam * (P.x - x3) - P.y)
        return CurvePoint(x3, y3, self._c(1))

    def sub(self, P: CurvePoint, Q: CurvePoint) -> CurvePoint:
        return self.add(P, self.neg(Q))

    def points(self) -> list[CurvePoint]:
        """All F_p-points (O first)."""
        if not self.p:
            raise BiellipticError("point enumeration needs a prime field")
        p = self.p
        out = [self.O]
        for x in range(p):
            r = (x ** 3 + self.a * x) % p
            y = sqrt_mod(r, p)
            if y is None:
                continue
            out.append(CurvePoint(x, y, 1))
            if y:
                out.append(CurvePoint(x, p - y, 1))
        return out

    def random_point(self, rng: random.Random) -> CurvePoint:
        if not self.p:
            raise BiellipticError("random points need a prime field")
        while True:
            x = rng.randrange(self.p)
            y = sqrt_mod((x ** 3 + self.a * x) % self.p, self.p)
            if y is not None:
                return CurvePoint(x, y if rng.random() < 0.5 else (-y) % self.p, 1)


E_CURVE = CurveSpec("E", -4)
E_PRIME_CURVE = CurveSpec("E'", 1)


def two_torsion(curve: CurveSpec) -> list[CurvePoint]:
    """O and the rational points with y = 0 (roots of x^3 + a x)."""
    out = [curve.O, curve.point(0, 0)]
    if curve.p:
        r = sqrt_mod(-curve.a, curve.p)
        if r is not None and r:
            out += [curve.point(r, 0), curve.point(-r, 0)]
    else:
        n = -curve.a
        if n > 0:
            s = int(round(n ** 0.5))
            if s * s == n:
                out += [curve.point(s, 0), curve.point(-s, 0)]
    return out


# --------------------------------------------------------------------------
# Phi


@dataclass(frozen=True)
class PhiImage:
    values: tuple  # (A, B, C, X, Y, U)

    def as_dict(self) -> dict:
        return dict(zip(PHI_COORDS, self.values))

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.values)


def _phi_values(P: CurvePoint, Q: CurvePoint, p: int) -> tuple:
    x1, y1, z1 = P.as_tuple()
    x2, y2, z2 = Q.as_tuple()
    vals = (
        y1 ** 2 * y2 ** 2 - 16 * x1 ** 2 * x2 ** 2,
        4 * (y1 ** 2 * x2 ** 2 - y2 ** 2 * x1 ** 2),
        8 * x1 * x2 * y1 * y2,
        4 * (y1 ** 2 * x2 ** 2 + y2 ** 2 * x1 ** 2),
        y1 ** 2 * y2 ** 2 + 16 * x1 ** 2 * x2 ** 2,
        (y1 ** 2 + 8 * x1 * z1) * (y2 ** 2 + 8 * x2 * z2),
    )
    return tuple(v % p for v in vals) if p else vals


def phi(P: CurvePoint, Q: CurvePoint, curve: CurveSpec = E_CURVE) -> PhiImage:
    curve._check(P)
    curve._check(Q)
    return PhiImage(_phi_values(P, Q, curve.p))


def on_V(img: PhiImage, p: int = 0) -> bool:
    A, B, C, X, Y, U = img.values
    eqs = (A * A + C * C - Y * Y, B * B + C * C - X * X, A * A + X * X - U * U)
    return all((e % p == 0) if p else e == 0 for e in eqs)


def projectively_equal(u: Sequence, v: Sequence, p: int = 0) -> bool:
    """All 2x2 minors of the stacked vectors vanish (both nonzero)."""
    def z(t):
        return (t % p == 0) if p else t == 0
    if all(z(a) for a in u) or all(z(b) for b in v):
        return False
    n = len(u)
    return all(z(u[i] * v[j] - u[j] * v[i]) for i in range(n) for j in range(i + 1, n))


# --------------------------------------------------------------------------
# automorphisms of E x E and E x E'


def iota(P, Q, curve=E_CURVE):
    return curve.neg(P), curve.neg(Q)


def gamma(P, Q, curve=E_CURVE):
    return curve.add(P, curve.T), curve.add(Q, curve.T)


def tau(P, curve=E_CURVE):
    return curve.add(P, curve.T)


def tau_prime(P, Q, curve=E_CURVE):
    return P, tau(Q, curve)


def alpha(P, Q, curve=E_CURVE):
    return curve.add(P, Q), Q


def alpha_inv(P, Q, curve=E_CURVE):
    return curve.sub(P, Q), Q


def inv(P, Q, curve1=E_CURVE, curve2=E_PRIME_CURVE):
    return curve1.neg(P), curve2.neg(Q)


def identity(P, Q, curve=E_CURVE):
    return P, Q


def _compose(*maps: Callable) -> Callable:
    def f(P, Q, curve=E_CURVE):
        for m in reversed(maps):
            P, Q = m(P, Q, curve)
        return P, Q
    return f


def _conj(g: Callable) -> Callable:
    return _compose(alpha_inv, g, alpha)


# alpha^-1 g alpha for each element of <iota, gamma>, paired with its image in <tau', iota>
CONJUGATION_PAIRS = (
    ("id", identity, "id", identity),
    ("iota", iota, "iota", iota),
    ("gamma", gamma, "tau'", tau_prime),
    ("iota*gamma", _compose(iota, gamma), "iota*tau'", _compose(iota, tau_prime)),
)


def conjugation_check(p: int, samples: int = 500, seed: int = 0) -> dict:
    """Pointwise check of alpha^-1 <iota, gamma> alpha = <tau', iota> on random points of E x E."""
    curve = E_CURVE.over(p)
    rng = random.Random(f"conj:{seed}:{p}")
    counter = []
    for _ in range(samples):
        P, Q = curve.random_point(rng), curve.random_point(rng)
        for name, g, target_name, target in CONJUGATION_PAIRS:
            if _conj(g)(P, Q, curve) != target(P, Q, curve):
                counter.append({"map": name, "expected": target_name, "P": list(P.as_tuple()),
                                "Q": list(Q.as_tuple())})
    return {"p": p, "samples": samples,
            "identities": [f"alpha^-1 {a} alpha = {b}" for a, _, b, _ in CONJUGATION_PAIRS],
            "counterexamples": counter[:10], "ok": not counter}


# --------------------------------------------------------------------------
# symbolic checks


def phi_ring(domain=QQ) -> Ring:
    return Ring(("x1", "y1", "z1", "x2", "y2", "z2", "A", "B", "C", "X", "Y", "U"), domain)


def phi_polynomials(ring: Ring | None = None) -> dict[str, Polynomial]:
    ring = ring or phi_ring()
    return {c: ring.parse(t) for c, t in PHI_TEXT.items()}


def curve_relations(ring: Ring, a: int = -4) -> list[Polynomial]:
    return [ring.parse(f"y{i}^2*z{i} - x{i}^3 - ({a})*x{i}*z{i}^2") for i in (1, 2)]


def bidegrees(polys: dict[str, Polynomial]) -> dict[str, list]:
    """Set of (deg in point 1, deg in point 2) over the terms of each coordinate."""
    out = {}
    for c, f in polys.items():
        bd = {(sum(m[0:3]), sum(m[3:6])) for m in f.terms}
        out[c] = sorted(bd)
    return out


def symbolic_phi_check(a: int = -4) -> dict:
    """Substitute Phi into the three quadrics of V and reduce modulo both curve relations."""
    ring = phi_ring()
    polys = phi_polynomials(ring)
    rel = curve_relations(ring, a)
    gb = buchberger(rel, ring.make_order("grevlex"))
    rows = []
    for text in V_EQUATIONS:
        q = ring.parse(text).substitute(polys, ring)
        nf = normal_form(q, gb.elements, gb.order)
        rows.append({"equation": text, "normal_form": str(nf), "zero": nf.is_zero()})
    # Phi o iota = Phi: iota negates y1 and y2
    flip = {"y1": -ring.var("y1"), "y2": -ring.var("y2")}
    inv_rows = {c: (f.substitute(flip, ring) - f).is_zero() for c, f in polys.items()}
    bd = bidegrees(polys)
    return {"equations": rows, "all_zero": all(r["zero"] for r in rows),
            "iota_invariant": inv_rows, "iota_invariant_all": all(inv_rows.values()),
            "bidegrees": {c: [list(t) for t in v] for c, v in bd.items()},
            "bihomogeneous": all(v == [(2, 2)] for v in bd.values()),
            "curve_basis_size": len(gb.elements), "source": SOURCE_NOTE}


# --------------------------------------------------------------------------
# sampling over finite fields


def sample_phi(p: int, samples: int = 500, seed: int = 0) -> dict:
    """Random (P, Q) in E(F_p) x E(F_p): Phi lands on V(F_p) and is gamma- and iota-invariant."""
    curve = E_CURVE.over(p)
    rng = random.Random(f"phi:{seed}:{p}")
    on = base = gam = io = 0
    failures = []
    for _ in range(samples):
        P, Q = curve.random_point(rng), curve.random_point(rng)
        img = phi(P, Q, curve)
        if img.is_zero():
            base += 1
            continue
        if on_V(img, p):
            on += 1
        else:
            failures.append({"P": list(P.as_tuple()), "Q": list(Q.as_tuple()), "image": list(img.values)})
        gimg = phi(*gamma(P, Q, curve), curve)
        if gimg.is_zero() or projectively_equal(img.values, gimg.values, p):
            gam += 1
        if phi(*iota(P, Q, curve), curve) == img:
            io += 1
    defined = samples - base
    return {"p": p, "samples": samples, "base_points": base, "on_V": on, "gamma_invariant": gam,
            "iota_invariant": io, "failures": failures[:10],
            "ok": not failures and gam == defined and io == defined}


def sample_report(primes: Sequence[int] = DEFAULT_PRIMES, samples: int = 500, seed: int = 0) -> dict:
    rows = []
    skipped = []
    for p in primes:
        try:
            rows.append(sample_phi(p, samples, seed))
        except BadPrime as exc:
            skipped.append({"p": p, "reason": str(exc)})
    return {"primes": rows, "skipped": skipped, "ok": bool(rows) and all(r["ok"] for r in rows)}


# --------------------------------------------------------------------------
# quotient census for the open surfaces S1 and S2


def _canon(P: CurvePoint) -> tuple:
    return P.as_tuple()


def quotient_census(surface: str, p: int) -> dict:
    """Count inv-orbits on S1 = ((E - E[2]) x E')/inv or S2 = (E x (E' - E'[2]))/inv over F_p.

    Also counts orbits on the full product and checks the fibration onto the
    punctured factor: every base orbit has a fiber of size |E(F_p)| (S2) or
    |E'(F_p)| (S1).
    """
    if surface not in ("S1", "S2"):
        raise BiellipticError(f"unknown surface {surface!r}")
    E, Ep = E_CURVE.over(p), E_PRIME_CURVE.over(p)
    ptsE, ptsEp = E.points(), Ep.points()
    tE = {_canon(P) for P in two_torsion(E)}
    tEp = {_canon(Q) for Q in two_torsion(Ep)}

    def orbit_key(P, Q):
        a = (_canon(P), _canon(Q))
        b = (_canon(E.neg(P)), _canon(Ep.neg(Q)))
        return min(a, b)

    full = {orbit_key(P, Q) for P in ptsE for Q in ptsEp}
    fixed = len(tE) * len(tEp)
    product = len(ptsE) * len(ptsEp)
    if surface == "S2":
        pairs = [(P, Q) for P in ptsE for Q in ptsEp if _canon(Q) not in tEp]
        base_of = lambda P, Q: min(_canon(Q), _canon(Ep.neg(Q)))  # noqa: E731
        fiber_expected = len(ptsE)
        base_expected = (len(ptsEp) - len(tEp)) // 2
    else:
        pairs = [(P, Q) for P in ptsE for Q in ptsEp if _canon(P) not in tE]
        base_of = lambda P, Q: min(_canon(P), _canon(E.neg(P)))  # noqa: E731
        fiber_expected = len(ptsEp)
        base_expected = (len(ptsE) - len(tE)) // 2
    orbits = {orbit_key(P, Q) for P, Q in pairs}
    fibers: dict = {}
    for P, Q in pairs:
        fibers.setdefault(base_of(P, Q), set()).add(orbit_key(P, Q))
    sizes = sorted({len(v) for v in fibers.values()})
    # at primes where every point is 2-torsion the open surface has no F_p-points
    fibers_ok = sizes == [fiber_expected] or (base_expected == 0 and not sizes)
    return {
        "surface": surface, "p": p, "E_points": len(ptsE), "E_prime_points": len(ptsEp),
        "E_two_torsion": len(tE), "E_prime_two_torsion": len(tEp),
        "product_orbits": len(full), "product_orbits_formula": (product - fixed) // 2 + fixed,
        "fixed_points": fixed, "points": len(pairs), "orbits": len(orbits),
        "base_orbits": len(fibers), "base_orbits_expected": base_expected,
        "fiber_sizes": sizes, "fiber_expected": fiber_expected,
        "ok": (len(full) == (product - fixed) // 2 + fixed and len(orbits) * 2 == len(pairs)
               and len(fibers) == base_expected and fibers_ok),
    }


def phi_check_report(primes: Sequence[int] = DEFAULT_PRIMES, samples: int = 500, seed: int = 0,
                     census_prime: int = 13) -> dict:
    """Everything the phi-check command reports."""
    conj = [conjugation_check(p, min(samples, 500), seed) for p in primes if p != 2]
    return {
        "symbolic": symbolic_phi_check(),
        "sampled": sample_report(primes, samples, seed),
        "conjugation": conj,
        "quotient_census": [quotient_census(s, census_prime) for s in ("S1", "S2")],
        "note": SOURCE_NOTE,
    }


__all__ = [
    "BadPrime", "BiellipticError", "CurvePoint", "CurveSpec", "DEFAULT_PRIMES", "E_CURVE", "E_PRIME_CURVE",
    "PhiImage", "PointNotOnCurve", "alpha", "alpha_inv", "conjugation_check", "curve_relations", "gamma",
    "identity", "inv", "iota", "on_V", "phi", "phi_check_report", "phi_polynomials", "projectively_equal",
    "quotient_census", "sample_phi", "sample_report", "symbolic_phi_check", "tau", "tau_prime",
    "two_torsion",
]
