"""Local standard bases (Mora's tangent cone algorithm) and Milnor numbers."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Sequence

from ..polynomial import MonomialOrder, Polynomial, Ring, RingMismatch
from ._kernel import (
    reduce_full,
    BudgetExceeded,
    Counter,
    Elt,
    GroebnerError,
    Kernel,
    divides,
    leading,
    mask_of,
    mono_div,
    spoly,
)
from .buchberger import Ideal, _update
from .zerodim import staircase_of

DEFAULT_BUDGET = 10_000_000


class NotIsolated(GroebnerError):
    """The quotient of the local ring is infinite dimensional."""


def _ecart(terms: dict, lm) -> int:
    return max(sum(m) for m in terms) - sum(lm)


def _top_reduce(h: dict, lm_h, g: Elt, kernel: Kernel) -> dict:
    """Cancel the leading term of ``h`` with a monomial multiple of ``g``."""
    q = mono_div(lm_h, g.lm)
    c = h[lm_h]
    mod = kernel.mod
    if kernel.ff:
        d = gcd(c, g.lc)
        a, b = g.lc // d, c // d
        if a < 0:
            a, b = -a, -b
        out = {m: v * a for m, v in h.items()} if a != 1 else dict(h)
    else:
        b = c * g.lcinv
        if mod:
            b %= mod
        out = dict(h)
    del out[lm_h]
    for tm, tc in g.tail:
        t = tuple([x + y for x, y in zip(tm, q)])
        v = out.get(t, 0) - b * tc
        if mod:
            v %= mod
        if v:
            out[t] = v
        else:
            out.pop(t, None)
    if kernel.ff and out:
        out = kernel.primitive(out)
    return out


def _truncate(h: dict, corner: int | None) -> dict:
    if corner is None:
        return h
    return {m: c for m, c in h.items() if sum(m) <= corner}


def _corner_degree(leading_monos: list, nvars: int, limit: int = 200_000) -> int | None:
    """Largest degree of a standard monomial, or None while the staircase is infinite.

    Once every monomial of degree ``D + 1`` lies in the leading ideal of a
    subset of a local ideal, that ideal contains ``m^(D+1)`` and terms of
    degree above ``D`` can be dropped everywhere.
    """
    try:
        st = staircase_of(leading_monos, nvars, limit)
    except GroebnerError:
        return None
    if not st.finite:
        return None
    return max((sum(m) for m in st.monomials), default=-1)


def _weak_nf(h: dict, T: list[Elt], order: MonomialOrder, kernel: Kernel, counter: Counter,
             state_fn=None, corner: int | None = None) -> dict:
    """Mora's weak normal form: reducers are chosen by minimal ecart and ``h`` joins T.

    ``corner`` is a degree bound above which terms vanish (see ``_corner_degree``).
    """
    key = order.key
    T = list(T)
    h = _truncate(h, corner)
    while h:
        lm = max(h, key=key)
        mm = mask_of(lm)
        best = None
        for g in T:
            if g.mask & ~mm or not divides(g.lm, lm):
                continue
            if best is None or g.ecart < best.ecart:
                best = g
                if best.ecart == 0:
                    break
        if best is None:
            return h
        counter.tick(state_fn)
        e_h = _ecart(h, lm)
        if best.ecart > e_h:
            T.append(Elt(dict(h), lm, kernel))
        h = _truncate(_top_reduce(h, lm, best, kernel), corner)
    return h


def mora_normal_form(f: Polynomial, G: Sequence[Polynomial], order: MonomialOrder | None = None,
                     budget: int | None = None) -> Polynomial:
    """Weak normal form of ``f`` with respect to ``G`` under a local order.

    The result equals ``u*f`` modulo the ideal for some unit ``u`` of the local
    ring; it is zero or has a leading monomial outside the leading ideal of ``G``
    when ``G`` is a standard basis.
    """
    order = order or f.ring.order
    for g in G:
        if g.ring != f.ring:
            raise RingMismatch("mora_normal_form needs a common ring")
    kernel = Kernel(f.ring.domain)
    T = []
    for g in G:
        if not g.is_zero():
            t = kernel.load(g)
            T.append(Elt(t, leading(t, order), kernel))
    h = kernel.load(f) if not f.is_zero() else {}
    r = _weak_nf(h, T, order, kernel, Counter(budget))
    return kernel.export(r, f.ring)


@dataclass
class StandardBasis:
    elements: list
    order: MonomialOrder
    ring: Ring
    stats: dict = field(default_factory=dict)

    def leading_monomials(self) -> list:
        return [g.leading_monomial(self.order) for g in self.elements]


@dataclass
class MoraState:
    """Resumable snapshot: basis so far, pending pairs and steps used."""

    ring: Ring
    order: MonomialOrder
    basis: list
    active: list
    pairs: list
    steps: int


def mora_standard_basis(I, order: MonomialOrder | None = None, *, budget: int | None = DEFAULT_BUDGET,
                        resume: MoraState | None = None) -> StandardBasis:
    """Standard basis under a local degree order.

    Raises :class:`BudgetExceeded` carrying a :class:`MoraState` when more than
    ``budget`` reduction steps are needed; pass it back as ``resume`` (with a
    larger budget) to continue.
    """
    if resume is not None:
        ring, order = resume.ring, resume.order
        kernel = Kernel(ring.domain)
        G = [Elt(kernel.load(p), p.leading_monomial(order), kernel) for p in resume.basis]
        active = list(resume.active)
        B = list(resume.pairs)
        counter = Counter(budget, resume.steps)
    else:
        gens = list(I.generators if isinstance(I, Ideal) else I)
        ring = I.ring if isinstance(I, Ideal) else gens[0].ring
        order = order or ring.make_order("local")
        if not order.is_local:
            raise GroebnerError("mora_standard_basis expects a local order")
        kernel = Kernel(ring.domain)
        counter = Counter(budget)
        G, B, active = [], [], []
        key = order.key
        for g in sorted((g for g in gens if not g.is_zero()), key=lambda p: key(p.leading_monomial(order)),
                        reverse=True):
            t = kernel.load(g)
            lm = leading(t, order)
            G.append(Elt(t, lm, kernel))
            B, active = _update(G, B, G[-1], len(G) - 1, active)
    key = order.key

    corner = _corner_degree([G[a].lm for a in active], ring.nvars)

    def snapshot():
        return MoraState(ring, order, [kernel.export(e.terms, ring) for e in G], list(active),
                         list(B), counter.steps)

    pairs = zero = 0
    while B:
        # sugar: degree of the homogenized S-polynomial
        idx = min(range(len(B)), key=lambda k: (sum(B[k][2]) + max(G[B[k][0]].ecart, G[B[k][1]].ecart),
                                                sum(B[k][2]), key(B[k][2])))
        i, j, L = B.pop(idx)
        pairs += 1
        if corner is not None and sum(L) > corner:
            # every term of the S-polynomial has degree at least deg(lcm)
            zero += 1
            continue
        s = spoly(G[i], G[j], kernel)
        if not s:
            zero += 1
            continue
        try:
            h = _weak_nf(s, [G[a] for a in active], order, kernel, counter, corner=corner)
        except BudgetExceeded as exc:
            B.append((i, j, L))
            raise BudgetExceeded(str(exc), snapshot()) from None
        if not h:
            zero += 1
            continue
        G.append(Elt(h, leading(h, order), kernel))
        B, active = _update(G, B, G[-1], len(G) - 1, active)
        new = _corner_degree([G[a].lm for a in active], ring.nvars)
        if new is not None:
            corner = new if corner is None else min(corner, new)
    elements = [kernel.export(G[a].terms, ring) for a in active]
    elements.sort(key=lambda p: key(p.leading_monomial(order)), reverse=True)
    return StandardBasis(elements, order, ring, {"pairs": pairs, "zero_reductions": zero,
                                                 "reduction_steps": counter.steps,
                                                 "corner_degree": corner})


class HomogenizedOrder(MonomialOrder):
    """Order on ``K[x, h]`` (``h`` last): total degree, then the local order on the x-part.

    It is a global well-order, and for homogeneous polynomials it picks the
    term whose x-part is largest in the local degree order.
    """

    def __init__(self, local: MonomialOrder):
        n = local.nvars
        super().__init__("grevlex", list(range(n + 1)))
        lk = local.key
        self.key = lambda e: (sum(e), *lk(e[:n]))
        key = self.key
        self.negkey = lambda e: tuple([-x for x in key(e)])
        self.kind = "homogenized"


@dataclass
class LazardState:
    """Resumable snapshot of :func:`lazard_standard_basis`."""

    ring: Ring
    order: MonomialOrder
    basis: list  # homogeneous elements as term dicts over the kernel
    active: list
    pairs: list
    steps: int


def _homogenize(terms: dict) -> dict:
    d = max(sum(m) for m in terms)
    return {m + (d - sum(m),): c for m, c in terms.items()}


def lazard_standard_basis(I, order: MonomialOrder | None = None, *, budget: int | None = DEFAULT_BUDGET,
                          resume: LazardState | None = None) -> StandardBasis:
    """Standard basis under a local degree order by Lazard's homogenization.

    The generators are homogenized with an extra variable ``h``; a Groebner
    basis of the homogeneous ideal under :class:`HomogenizedOrder` is computed
    degree by degree and ``h = 1`` yields a standard basis.  Pairs whose lcm has
    x-degree above the current highest corner are skipped (every term of such
    an S-polynomial lies in ``m^(D+1)``, which the ideal already contains).
    Raises :class:`BudgetExceeded` with a :class:`LazardState` on overrun.
    """
    if resume is not None:
        ring, order = resume.ring, resume.order
        kernel = Kernel(ring.domain)
        hord = HomogenizedOrder(order)
        G = [Elt(t, leading(t, hord), kernel) for t in resume.basis]
        active, B = list(resume.active), list(resume.pairs)
        counter = Counter(budget, resume.steps)
    else:
        gens = list(I.generators if isinstance(I, Ideal) else I)
        ring = I.ring if isinstance(I, Ideal) else gens[0].ring
        order = order or ring.make_order("local")
        if not order.is_local:
            raise GroebnerError("lazard_standard_basis expects a local order")
        kernel = Kernel(ring.domain)
        hord = HomogenizedOrder(order)
        counter = Counter(budget)
        G, B, active = [], [], []
        hk = hord.key
        loaded = [_homogenize(kernel.load(g)) for g in gens if not g.is_zero()]
        for t in sorted(loaded, key=lambda t: hk(leading(t, hord))):
            G.append(Elt(t, leading(t, hord), kernel))
            B, active = _update(G, B, G[-1], len(G) - 1, active)
    n = ring.nvars
    hk = hord.key

    def corner_now():
        return _corner_degree([G[a].lm[:n] for a in active], n)

    def snapshot():
        return LazardState(ring, order, [dict(e.terms) for e in G], list(active), list(B), counter.steps)

    corner = corner_now()
    pairs = zero = 0
    while B:
        idx = min(range(len(B)), key=lambda k: (sum(B[k][2]), hk(B[k][2])))
        i, j, L = B.pop(idx)
        pairs += 1
        if corner is not None and sum(L[:n]) > corner:
            zero += 1
            continue
        s = spoly(G[i], G[j], kernel)
        if not s:
            zero += 1
            continue
        try:
            rem, _ = reduce_full(s, [G[a] for a in active], hord, kernel, counter)
        except BudgetExceeded as exc:
            B.append((i, j, L))
            raise BudgetExceeded(str(exc), snapshot()) from None
        if not rem:
            zero += 1
            continue
        lm = next(iter(rem))
        G.append(Elt(kernel.normalize(rem, lm), lm, kernel))
        B, active = _update(G, B, G[-1], len(G) - 1, active)
        new = corner_now()
        if new is not None:
            corner = new if corner is None else min(corner, new)
    key = order.key
    elements = []
    for a in active:
        t: dict = {}
        for m, c in G[a].terms.items():
            t[m[:n]] = t.get(m[:n], 0) + c
        elements.append(kernel.export({m: c for m, c in t.items() if c}, ring))
    elements = [e for e in elements if not e.is_zero()]
    elements.sort(key=lambda p: key(p.leading_monomial(order)), reverse=True)
    return StandardBasis(elements, order, ring, {"pairs": pairs, "zero_reductions": zero,
                                                 "reduction_steps": counter.steps,
                                                 "corner_degree": corner, "method": "lazard"})


METHODS = ("lazard", "mora")


def standard_basis(I, order: MonomialOrder | None = None, *, method: str = "lazard",
                   budget: int | None = DEFAULT_BUDGET, resume=None) -> StandardBasis:
    if method == "lazard":
        return lazard_standard_basis(I, order, budget=budget, resume=resume)
    if method == "mora":
        return mora_standard_basis(I, order, budget=budget, resume=resume)
    raise GroebnerError(f"unknown standard basis method {method!r}")


def local_quotient_dimension(sb: StandardBasis) -> int | None:
    """dim of the local quotient ring, or None when it is infinite."""
    st = staircase_of(sb.leading_monomials(), sb.ring.nvars)
    return st.dimension


def jacobian_ideal(f: Polynomial) -> Ideal:
    return Ideal([f.derivative(v) for v in f.ring.variables], f.ring)


def milnor_number(f: Polynomial, *, budget: int | None = DEFAULT_BUDGET, method: str = "lazard",
                  resume=None) -> int:
    """Milnor number of ``f`` at the origin via a local standard basis of its Jacobian ideal."""
    ring = f.ring
    sb = standard_basis(jacobian_ideal(f), ring.make_order("local"), method=method, budget=budget,
                        resume=resume)
    mu = local_quotient_dimension(sb)
    if mu is None:
        raise NotIsolated("singularity at the origin is not isolated")
    return mu


__all__ = [
    "DEFAULT_BUDGET", "HomogenizedOrder", "LazardState", "METHODS", "MoraState",
    "lazard_standard_basis", "standard_basis", "NotIsolated", "StandardBasis", "jacobian_ideal",
    "local_quotient_dimension", "milnor_number", "mora_normal_form", "mora_standard_basis",
]
