"""Euler characteristics of compact real algebraic sets from Milnor numbers.

Builds the auxiliary polynomial H (the generic construction and the explicit
cuboid and face-cuboid versions), computes the Milnor number of H at the
origin by two independent methods, and turns it into Euler characteristics
and the non-orientable genera k and k'.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Sequence

from .groebner import (
    BudgetExceeded,
    jacobian_ideal,
    local_quotient_dimension,
    standard_basis,
)
from .polynomial import Polynomial, Ring
from .scalar import QQ


class EulerError(ArithmeticError):
    pass


class DegreeMismatch(EulerError):
    pass


class NotVanishingAtOrigin(EulerError):
    pass


class NonIntegerResult(EulerError):
    pass


# --------------------------------------------------------------------------
# the polynomial H


def bruce_H_generic(fs: Sequence[Polynomial], d: int, hom_var: str = "y",
                    ring: Ring | None = None) -> Polynomial:
    """``sum_i y^(d+1) f_i(x/y) - y^(2d+4) - sum_j x_j^(2d+4)``, summing the f_i linearly.

    With no ``fs`` a ``ring`` (the ambient ring of the x variables) is required.
    """
    if fs:
        ring = fs[0].ring
    if ring is None:
        raise EulerError("ring required when no polynomials are given")
    if hom_var in ring.variables:
        raise EulerError(f"homogenizing variable {hom_var!r} is not fresh")
    target = Ring(tuple(ring.variables) + (hom_var,), ring.domain)
    y = target.index(hom_var)
    pos = [target.index(v) for v in ring.variables]
    terms: dict = {}
    for f in fs:
        if f.ring != ring:
            raise EulerError("all polynomials must share a ring")
        if not f.is_zero() and f.total_degree() > d:
            raise DegreeMismatch(f"degree {f.total_degree()} exceeds d = {d}")
        for m, c in f.terms.items():
            e = [0] * target.nvars
            for k, x in zip(pos, m):
                e[k] = x
            e[y] = d + 1 - sum(m)
            t = tuple(e)
            v = terms.get(t, 0) + c
            if v:
                terms[t] = v
            else:
                terms.pop(t, None)
    H = Polynomial(target, terms)
    top = 2 * d + 4
    for v in target.variables:
        H = H - target.var(v) ** top
    return H


H_UPSILON_VARIABLES = ("A", "B", "C", "X", "Y", "Z", "D")
H_UPSILON_TEXT = ("D^2*((A^2 + B^2 - Z^2)^2 + (B^2 + C^2 - X^2)^2 + (C^2 + A^2 - Y^2)^2 "
                  "+ (A^2 + B^2 + C^2 - D^2)^2) - A^8 - B^8 - C^8 - X^8 - Y^8 - Z^8 - D^8")


def build_H_upsilon(domain=QQ) -> Polynomial:
    return Ring(H_UPSILON_VARIABLES, domain).parse(H_UPSILON_TEXT)


def build_H_V(domain=QQ) -> Polynomial:
    H = build_H_upsilon(domain)
    target = Ring(("A", "B", "C", "X", "Y", "D"), domain)
    return H.substitute({"Z": 0}, target)


# --------------------------------------------------------------------------
# Milnor numbers


def _monomials_upto(n: int, N: int) -> list[tuple]:
    out = []
    for deg in range(N + 1):
        for combo in combinations_with_replacement(range(n), deg):
            e = [0] * n
            for i in combo:
                e[i] += 1
            out.append(tuple(e))
    return out


@dataclass
class JetState:
    """Progress of the truncated-jet computation."""

    dims: dict = field(default_factory=dict)  # N -> dim of the truncated quotient
    stable: bool = False
    value: int | None = None
    steps: int = 0

    def to_dict(self) -> dict:
        return {"dims": {str(k): v for k, v in sorted(self.dims.items())}, "stable": self.stable,
                "value": self.value, "steps": self.steps}


def jet_dimension(gens: Sequence[Polynomial], N: int, *, budget: int | None = None,
                  counter: list | None = None) -> int:
    """dim of polynomials of degree <= N modulo the truncated span of monomial multiples of ``gens``."""
    ring = gens[0].ring
    mod = ring.domain.mod
    monos = _monomials_upto(ring.nvars, N)
    col = {m: i for i, m in enumerate(monos)}
    pivots: dict[int, dict] = {}
    counter = counter if counter is not None else [0]
    for g in gens:
        low = min((sum(m) for m in g.terms), default=N + 1)
        for q in monos:
            if sum(q) + low > N:
                continue
            row = {}
            for m, c in g.terms.items():
                t = tuple(a + b for a, b in zip(m, q))
                if sum(t) <= N:
                    row[col[t]] = c if mod else Fraction(c)
            while row:
                counter[0] += 1
                if budget is not None and counter[0] > budget:
                    raise BudgetExceeded(f"jet oracle step budget {budget} exhausted")
                c = max(row)
                prow = pivots.get(c)
                if prow is None:
                    inv = pow(row[c], -1, mod) if mod else 1 / row[c]
                    pivots[c] = {k: (v * inv % mod if mod else v * inv) for k, v in row.items()}
                    break
                f = row[c]
                for k, v in prow.items():
                    nv = row.get(k, 0) - f * v
                    if mod:
                        nv %= mod
                    if nv:
                        row[k] = nv
                    else:
                        row.pop(k, None)
    return len(monos) - len(pivots)


def jet_milnor(f: Polynomial, *, cap: int = 40, budget: int | None = None,
               state: JetState | None = None) -> JetState:
    """Truncated-jet Milnor number: increase N until three consecutive dimensions agree."""
    st = state or JetState()
    gens = [g for g in (f.derivative(v) for v in f.ring.variables) if not g.is_zero()]
    if not gens:
        return st
    counter = [st.steps]
    N = max(st.dims) + 1 if st.dims else 0
    while N <= cap:
        try:
            st.dims[N] = jet_dimension(gens, N, budget=budget, counter=counter)
        except BudgetExceeded:
            st.steps = counter[0]
            raise BudgetExceeded("jet oracle budget exhausted", st) from None
        if N >= 2 and st.dims[N] == st.dims[N - 1] == st.dims[N - 2]:
            st.stable = True
            st.value = st.dims[N]
            break
        N += 1
    st.steps = counter[0]
    return st


@dataclass
class MilnorResult:
    mu: int | None
    status: str  # "ok", "budget", "infinite", "disagree"
    mora: int | None
    jet: int | None
    staircase_size: int | None = None
    mora_state: object = field(default=None, repr=False)  # LazardState or MoraState
    jet_state: JetState | None = field(default=None, repr=False)
    detail: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        out = {"mu": self.mu, "status": self.status, "mora": self.mora, "jet": self.jet}
        out.update(self.detail)
        if self.jet_state is not None:
            out["jet_state"] = self.jet_state.to_dict()
        return out


def milnor_number(f: Polynomial, *, budget: int | None = None, jet_cap: int = 40,
                  jet: bool = True, resume=None, method: str = "lazard",
                  jet_resume: "JetState | None" = None) -> MilnorResult:
    """Milnor number at the origin by a local standard basis and by the truncated-jet oracle.

    ``method`` selects the standard-basis engine (``lazard`` or ``mora``); the
    ``mora`` fields of the result hold the standard-basis value either way.
    """
    if f.constant_coeff():
        raise NotVanishingAtOrigin("f(0) != 0")
    detail: dict = {"standard_basis_method": method}
    mora_val = mora_state = None
    try:
        sb = standard_basis(jacobian_ideal(f), f.ring.make_order("local"), method=method, budget=budget,
                            resume=resume)
        mora_val = local_quotient_dimension(sb)
        mora_status = "ok" if mora_val is not None else "infinite"
        detail["mora_steps"] = sb.stats["reduction_steps"]
    except BudgetExceeded as exc:
        mora_state = exc.state
        mora_status = "budget"
        detail["mora_partial"] = {"basis_size": len(exc.state.basis), "pairs_pending": len(exc.state.pairs),
                                  "steps": exc.state.steps}
    jet_val = jet_state = None
    jet_status = "skipped"
    if jet:
        try:
            jet_state = jet_milnor(f, cap=jet_cap, budget=budget, state=jet_resume)
            jet_status = "ok" if jet_state.stable else "unstable"
            jet_val = jet_state.value
        except BudgetExceeded as exc:
            jet_state = exc.state
            jet_status = "budget"
    detail["mora_status"] = mora_status
    detail["jet_status"] = jet_status
    mu = None
    if mora_status == "ok" and jet_status in ("ok", "skipped"):
        if jet_status == "skipped" or mora_val == jet_val:
            status, mu = "ok", mora_val
        else:
            status = "disagree"
    elif "budget" in (mora_status, jet_status):
        status = "budget"
    elif mora_status == "infinite":
        status = "infinite"
    else:
        status = f"mora {mora_status}, jet {jet_status}"
    return MilnorResult(mu, status, mora_val, jet_val, mora_val, mora_state, jet_state, detail)


def milnor_suite_cases() -> list[tuple]:
    """(name, variables, polynomial, expected mu) for the standard test singularities."""
    cases = [("A1", ("x", "y", "z"), "x^2 + y^2 + z^2", 1)]
    for k in range(2, 6):
        cases.append((f"A{k}", ("x", "y"), f"x^{k + 1} + y^2", k))
    for a in (2, 3, 4):
        for b in (2, 3, 4):
            for c in (2, 3, 4):
                cases.append((f"B{a}{b}{c}", ("x", "y", "z"), f"x^{a} + y^{b} + z^{c}", (a - 1) * (b - 1) * (c - 1)))
    return cases


def milnor_suite(*, method: str = "lazard", jet_cap: int = 40, budget: int | None = None) -> list[dict]:
    rows = []
    for name, variables, text, expected in milnor_suite_cases():
        res = milnor_number(Ring(variables).parse(text), budget=budget, jet_cap=jet_cap, method=method)
        rows.append({"name": name, "polynomial": text, "expected": expected, "standard_basis": res.mora,
                     "jet": res.jet, "status": res.status,
                     "ok": res.status == "ok" and res.mora == res.jet == expected})
    return rows


# --------------------------------------------------------------------------
# Euler characteristic formulas


VARIANTS = {
    "as-printed": lambda mu, n: ((-1) ** n - mu, 2),
    "negated": lambda mu, n: (mu - (-1) ** n, 2),
    "plus": lambda mu, n: ((-1) ** n + mu, 2),
}

VARIANT_FORMULAS = {
    "as-printed": "((-1)^n - mu)/2",
    "negated": "(mu - (-1)^n)/2",
    "plus": "((-1)^n + mu)/2",
}


def euler_value(mu: int, n: int, variant: str = "as-printed") -> Fraction:
    try:
        num, den = VARIANTS[variant](mu, n)
    except KeyError:
        raise EulerError(f"unknown variant {variant!r}") from None
    return Fraction(num, den)


def euler_characteristic(mu: int, n: int, variant: str = "as-printed") -> int:
    v = euler_value(mu, n, variant)
    if v.denominator != 1:
        raise NonIntegerResult(f"{VARIANT_FORMULAS[variant]} = {v} for mu = {mu}, n = {n}")
    return int(v)


def k_from_chi(chi: int) -> int:
    return 26 - chi


def k_prime_from_chi(chi: int) -> int:
    return 18 - chi


def _frac_str(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def variant_table(mu: int, n: int) -> dict:
    out = {}
    for name in VARIANTS:
        v = euler_value(mu, n, name)
        out[name] = {"formula": VARIANT_FORMULAS[name], "value": _frac_str(v), "integer": v.denominator == 1}
    return out


# --------------------------------------------------------------------------
# calibration and reports


CALIBRATION = (
    ("two points", ("x",), "x^2 - 1", 2),
    ("circle", ("x", "y"), "x^2 + y^2 - 1", 0),
    ("sphere", ("x", "y", "z"), "x^2 + y^2 + z^2 - 1", 2),
)


def calibration_table(*, budget: int | None = None, jet_cap: int = 40) -> list[dict]:
    """Bruce pipeline on sets with known Euler characteristic.

    For each input the Mora value feeds the pipeline and the jet-oracle value
    feeds the composed definition; both must agree for every variant.
    """
    rows = []
    for name, variables, text, chi_top in CALIBRATION:
        R = Ring(variables)
        f = R.parse(text)
        d = f.total_degree()
        H = bruce_H_generic([f], d, hom_var="t")
        res = milnor_number(H, budget=budget, jet_cap=jet_cap)
        n = len(variables)
        row = {"name": name, "polynomial": text, "n": n, "d": d, "H": str(H), "milnor": res.to_dict(),
               "topological_chi": chi_top, "variants": {}}
        for variant in VARIANTS:
            entry = {}
            if res.mora is not None:
                entry["pipeline"] = _frac_str(euler_value(res.mora, n, variant))
            if res.jet is not None:
                entry["composed"] = _frac_str(euler_value(res.jet, n, variant))
            entry["consistent"] = entry.get("pipeline") is not None and entry.get("pipeline") == entry.get("composed")
            entry["matches_topology"] = entry.get("pipeline") == str(chi_top)
            row["variants"][variant] = entry
        rows.append(row)
    return rows


@dataclass
class EulerReport:
    variety: str
    n: int
    milnor: MilnorResult
    variant: str
    chi: int | None = None
    k: int | None = None
    variants: dict = field(default_factory=dict)
    degree: int | None = None
    note: str = ""

    def to_dict(self) -> dict:
        return {"variety": self.variety, "n": self.n, "milnor": self.milnor.to_dict(), "variant": self.variant,
                "chi": self.chi, "k": self.k, "variants": self.variants, "H_total_degree": self.degree,
                "note": self.note}


def _report(name: str, H: Polynomial, n: int, k_of, budget, jet_cap, variant, resume, jet_resume,
            method) -> EulerReport:
    res = milnor_number(H, budget=budget, jet_cap=jet_cap, resume=resume, jet_resume=jet_resume, method=method)
    rep = EulerReport(name, n, res, variant, degree=H.total_degree())
    if res.mu is None:
        rep.note = f"milnor number unavailable: {res.status}"
        return rep
    rep.variants = variant_table(res.mu, n)
    for v, entry in rep.variants.items():
        if entry["integer"]:
            entry["k"] = k_of(int(entry["value"]))
    try:
        rep.chi = euler_characteristic(res.mu, n, variant)
        rep.k = k_of(rep.chi)
    except NonIntegerResult as exc:
        rep.note = str(exc)
    return rep


def compute_k(*, budget: int | None = None, jet_cap: int = 40, variant: str = "as-printed",
              resume=None, jet_resume=None, method: str = "lazard") -> EulerReport:
    """k = 26 - chi for the real cuboid surface (n = 6 in the compact chart U = 1)."""
    return _report("upsilon", build_H_upsilon(), 6, k_from_chi, budget, jet_cap, variant, resume, jet_resume,
                   method)


def compute_k_prime(*, budget: int | None = None, jet_cap: int = 40, variant: str = "as-printed",
                    resume=None, jet_resume=None, method: str = "lazard") -> EulerReport:
    """k' = 18 - chi for the real face-cuboid surface (n = 5)."""
    return _report("V", build_H_V(), 5, k_prime_from_chi, budget, jet_cap, variant, resume, jet_resume,
                   method)


__all__ = [
    "CALIBRATION", "DegreeMismatch", "EulerError", "EulerReport", "JetState", "MilnorResult",
    "NonIntegerResult", "NotVanishingAtOrigin", "VARIANTS", "bruce_H_generic", "build_H_V",
    "build_H_upsilon", "calibration_table", "compute_k", "compute_k_prime", "euler_characteristic",
    "euler_value", "jet_dimension", "jet_milnor", "k_from_chi", "k_prime_from_chi", "milnor_number",
    "milnor_suite", "milnor_suite_cases", "variant_table",
]
