"""Global Groebner bases: reduction, Buchberger's algorithm, membership checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from ..polynomial import MonomialOrder, Polynomial, Ring, RingMismatch
from ._kernel import (
    BudgetExceeded,
    Counter,
    Elt,
    GroebnerError,
    Kernel,
    coprime,
    divides,
    leading,
    mono_lcm,
    reduce_full,
    spoly,
)


class LocalOrderRejected(GroebnerError):
    pass


@dataclass
class Ideal:
    generators: list
    ring: Ring

    def __init__(self, generators: Sequence[Polynomial], ring: Ring | None = None):
        gens = [g for g in generators if not g.is_zero()]
        if ring is None:
            if not generators:
                raise GroebnerError("ring required for an empty ideal")
            ring = generators[0].ring
        for g in gens:
            if g.ring != ring:
                raise RingMismatch("ideal generators must share a ring")
        self.generators = gens
        self.ring = ring

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)


@dataclass
class GroebnerBasis:
    elements: list
    order: MonomialOrder
    ring: Ring
    reduced: bool = False
    verified: bool = False
    stats: dict = field(default_factory=dict)

    def leading_monomials(self) -> list:
        return [g.leading_monomial(self.order) for g in self.elements]

    def is_unit_ideal(self) -> bool:
        return any(g.is_constant() and not g.is_zero() for g in self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)


def _require_global(order: MonomialOrder):
    if order.is_local:
        raise LocalOrderRejected("local order: use mora_normal_form")


def _elts(polys, order, kernel) -> list[Elt]:
    out = []
    for g in polys:
        if g.is_zero():
            continue
        t = kernel.load(g)
        out.append(Elt(t, leading(t, order), kernel))
    return out


def normal_form(f: Polynomial, G: Sequence[Polynomial], order: MonomialOrder | None = None) -> Polynomial:
    """Fully reduced remainder of ``f`` modulo ``G``; ``f - result`` lies in the ideal."""
    order = order or f.ring.order
    _require_global(order)
    for g in G:
        if g.ring != f.ring:
            raise RingMismatch("normal_form needs a common ring")
    if f.is_zero():
        return f
    kernel = Kernel(f.ring.domain)
    elts = _elts(G, order, kernel)
    terms, s0 = kernel.load_scaled(f)
    rem, s1 = reduce_full(terms, elts, order, kernel)
    if kernel.ff:
        return kernel.export(rem, f.ring, s0 * s1)
    return kernel.export(rem, f.ring)


def _update(G: list[Elt], B: list, h: Elt, hi: int, active: list[int]):
    """Gebauer-Moeller update: new pairs for ``h`` and pruning of old pairs/basis."""
    C = [(gi, mono_lcm(G[gi].lm, h.lm)) for gi in active]
    D = []
    while C:
        gi, L = C.pop(0)
        g = G[gi]
        if coprime(g.lm, h.lm):
            D.append((gi, L, True))
            continue
        redundant = any(divides(L2, L) for _, L2 in C) or any(divides(L2, L) for _, L2, _c in D)
        if not redundant:
            D.append((gi, L, False))
    E = [(gi, hi, L) for gi, L, cop in D if not cop]
    Bn = []
    for (i, j, L) in B:
        if divides(h.lm, L) and mono_lcm(G[i].lm, h.lm) != L and mono_lcm(G[j].lm, h.lm) != L:
            continue
        Bn.append((i, j, L))
    Bn.extend(E)
    active_new = [gi for gi in active if not divides(h.lm, G[gi].lm)]
    active_new.append(hi)
    return Bn, active_new


def _interreduce(elts: list[Elt], order, kernel) -> list[Elt]:
    """Minimalize then tail-reduce; output sorted by increasing leading monomial."""
    key = order.key
    elts = sorted(elts, key=lambda e: key(e.lm))
    minimal: list[Elt] = []
    for e in elts:
        if not any(divides(m.lm, e.lm) for m in minimal):
            minimal.append(e)
    result = []
    for e in minimal:
        others = [o for o in minimal if o is not e]
        r, _ = reduce_full(e.terms, others, order, kernel)
        result.append(Elt(kernel.normalize(r, e.lm), e.lm, kernel))
    return result


def buchberger(I, order: MonomialOrder | None = None, *, reduced: bool = True,
               verify: bool = True, budget: int | None = None) -> GroebnerBasis:
    """Groebner basis by Buchberger's algorithm (normal selection, Gebauer-Moeller criteria)."""
    gens = list(I.generators if isinstance(I, Ideal) else I)
    ring = I.ring if isinstance(I, Ideal) else (gens[0].ring if gens else None)
    if ring is None:
        raise GroebnerError("empty generator list without a ring")
    order = order or ring.order
    _require_global(order)
    kernel = Kernel(ring.domain)
    key = order.key
    counter = Counter(budget)
    G: list[Elt] = []
    B: list = []
    active: list[int] = []
    for e in sorted(_elts(gens, order, kernel), key=lambda e: key(e.lm)):
        e = Elt(kernel.normalize(e.terms, e.lm), e.lm, kernel)
        G.append(e)
        B, active = _update(G, B, e, len(G) - 1, active)
    pairs_done = 0
    zero_reductions = 0
    while B:
        idx = min(range(len(B)), key=lambda k: (sum(B[k][2]), key(B[k][2])))
        i, j, _L = B.pop(idx)
        pairs_done += 1
        s = spoly(G[i], G[j], kernel)
        if not s:
            zero_reductions += 1
            continue
        rem, _ = reduce_full(s, [G[a] for a in active], order, kernel, counter)
        if not rem:
            zero_reductions += 1
            continue
        lm = next(iter(rem))
        e = Elt(kernel.normalize(rem, lm), lm, kernel)
        G.append(e)
        B, active = _update(G, B, e, len(G) - 1, active)
    basis = [G[a] for a in active]
    if reduced:
        basis = _interreduce(basis, order, kernel)
    else:
        basis = sorted(basis, key=lambda e: key(e.lm))
    elements = []
    for e in basis:
        p = kernel.export(e.terms, ring)
        elements.append(p.monic(order) if reduced else p)
    gb = GroebnerBasis(elements, order, ring, reduced=reduced, verified=False,
                       stats={"pairs": pairs_done, "zero_reductions": zero_reductions,
                              "reduction_steps": counter.steps})
    if verify:
        ok, _cert = is_groebner_basis(elements, order)
        if not ok:
            raise GroebnerError("internal error: Buchberger output failed verification")
        gb.verified = True
    return gb


@dataclass
class GBCertificate:
    pair: tuple[int, int] | None
    remainder: Polynomial | None
    pairs_checked: int
    pairs_skipped_coprime: int


def is_groebner_basis(G: Sequence[Polynomial], order: MonomialOrder | None = None,
                      use_criterion: bool = True):
    """Buchberger's criterion.  Returns ``(ok, certificate)``.

    With ``use_criterion`` pairs whose leading monomials are coprime are
    skipped; the certificate records the first pair whose S-polynomial has a
    nonzero remainder.
    """
    G = [g for g in G if not g.is_zero()]
    if not G:
        return True, GBCertificate(None, None, 0, 0)
    ring = G[0].ring
    order = order or ring.order
    _require_global(order)
    kernel = Kernel(ring.domain)
    elts = _elts(G, order, kernel)
    checked = skipped = 0
    for i in range(len(elts)):
        for j in range(i + 1, len(elts)):
            if use_criterion and coprime(elts[i].lm, elts[j].lm):
                skipped += 1
                continue
            checked += 1
            s = spoly(elts[i], elts[j], kernel)
            if not s:
                continue
            rem, _ = reduce_full(s, elts, order, kernel)
            if rem:
                return False, GBCertificate((i, j), kernel.export(rem, ring).monic(order), checked, skipped)
    return True, GBCertificate(None, None, checked, skipped)


def reduce_by_basis(f: Polynomial, gb: GroebnerBasis) -> Polynomial:
    return normal_form(f, gb.elements, gb.order)


def ideal_contains(gb: GroebnerBasis, f: Polynomial) -> bool:
    return normal_form(f, gb.elements, gb.order).is_zero()


def eliminate(I, keep: Sequence[str], budget: int | None = None) -> Ideal:
    """Generators of the elimination ideal in the subring of ``keep`` variables."""
    gens = list(I.generators if isinstance(I, Ideal) else I)
    ring = I.ring if isinstance(I, Ideal) else gens[0].ring
    drop = [v for v in ring.variables if v not in keep]
    for v in keep:
        ring.index(v)
    order = ring.block_order(drop)
    gb = buchberger(Ideal(gens, ring), order, budget=budget)
    sub = Ring([v for v in ring.variables if v in keep], ring.domain)
    drop_idx = [ring.index(v) for v in drop]
    keep_idx = [ring.index(v) for v in sub.variables]
    out = []
    for g in gb.elements:
        if all(m[i] == 0 for m in g.terms for i in drop_idx):
            out.append(Polynomial(sub, {tuple(m[i] for i in keep_idx): c for m, c in g.terms.items()}))
    return Ideal(out, sub)


__all__ = [
    "BudgetExceeded", "GBCertificate", "GroebnerBasis", "GroebnerError", "Ideal",
    "LocalOrderRejected", "buchberger", "eliminate", "ideal_contains", "is_groebner_basis",
    "normal_form", "reduce_by_basis",
]
