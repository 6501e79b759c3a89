"""Term-level machinery shared by the Buchberger and Mora engines.

Over QQ the engines run fraction-free on integer coefficient dicts and strip
content; over F_p they run on ints mod p; other fields (rational-function
fields) use the coefficient objects' own operators.
"""

from __future__ import annotations

from fractions import Fraction
from heapq import heapify, heappop, heappush
from math import gcd, lcm

from ..polynomial import MonomialOrder, Polynomial, Ring
from ..scalar import RationalField


class GroebnerError(ArithmeticError):
    pass


class BudgetExceeded(GroebnerError):
    """Raised when a step budget runs out; ``state`` allows resuming."""

    def __init__(self, message: str, state=None):
        super().__init__(message)
        self.state = state


class Counter:
    __slots__ = ("steps", "budget")

    def __init__(self, budget: int | None = None, steps: int = 0):
        self.budget = budget
        self.steps = steps

    def tick(self, state_fn=None):
        self.steps += 1
        if self.budget is not None and self.steps > self.budget:
            raise BudgetExceeded(f"step budget {self.budget} exhausted",
                                 state_fn() if state_fn else None)


def mask_of(m) -> int:
    b = 0
    for i, e in enumerate(m):
        if e:
            b |= 1 << i
    return b


def divides(a, b) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def mono_lcm(a, b):
    return tuple([x if x > y else y for x, y in zip(a, b)])


def mono_mul(a, b):
    return tuple([x + y for x, y in zip(a, b)])


def mono_div(a, b):
    return tuple([x - y for x, y in zip(a, b)])


def coprime(a, b) -> bool:
    for x, y in zip(a, b):
        if x and y:
            return False
    return True


class Elt:
    """A basis element: leading data plus the tail terms used for reduction."""

    __slots__ = ("lm", "lc", "terms", "tail", "mask", "deg", "ecart", "lcinv")

    def __init__(self, terms: dict, lm, kernel: "Kernel"):
        self.terms = terms
        self.lm = lm
        self.lc = terms[lm]
        self.tail = [(m, c) for m, c in terms.items() if m != lm]
        self.mask = mask_of(lm)
        self.deg = max(sum(m) for m in terms)
        self.ecart = self.deg - sum(lm)
        self.lcinv = kernel.inverse(self.lc)


class Kernel:
    def __init__(self, domain):
        self.domain = domain
        self.mod = domain.mod
        self.ff = isinstance(domain, RationalField)

    def inverse(self, c):
        if self.ff:
            return None
        if self.mod:
            return pow(c, -1, self.mod)
        return self.domain.one / c

    # ---- import / export
    def load(self, f: Polynomial) -> dict:
        if self.ff:
            den = 1
            for c in f.terms.values():
                den = lcm(den, c.denominator)
            return self.primitive({m: int(c * den) for m, c in f.terms.items()})
        return dict(f.terms)

    def load_scaled(self, f: Polynomial):
        """Like :meth:`load` but also returns s with ``terms == s * f``."""
        if self.ff:
            den = 1
            for c in f.terms.values():
                den = lcm(den, c.denominator)
            return {m: int(c * den) for m, c in f.terms.items()}, Fraction(den)
        return dict(f.terms), self.domain.one

    def export(self, terms: dict, ring: Ring, divisor=None) -> Polynomial:
        if self.ff:
            d = Fraction(1) if divisor is None else Fraction(divisor)
            return Polynomial(ring, {m: Fraction(c) / d for m, c in terms.items()})
        if divisor is not None:
            inv = self.inverse(divisor)
            if self.mod:
                return Polynomial(ring, {m: c * inv % self.mod for m, c in terms.items()})
            return Polynomial(ring, {m: c * inv for m, c in terms.items()})
        return Polynomial(ring, dict(terms))

    def primitive(self, terms: dict, lm=None) -> dict:
        """Content-free integer dict with positive leading coefficient (QQ mode only)."""
        if not terms:
            return terms
        g = 0
        for c in terms.values():
            g = gcd(g, c)
            if g == 1:
                break
        lead = terms[lm] if lm is not None else next(iter(terms.values()))
        if lead < 0:
            g = -g
        if g != 1:
            return {m: c // g for m, c in terms.items()}
        return terms

    def normalize(self, terms: dict, lm) -> dict:
        """Primitive (QQ) or monic (fields) scaling."""
        if self.ff:
            return self.primitive(terms, lm)
        lc = terms[lm]
        inv = self.inverse(lc)
        if self.mod:
            return {m: c * inv % self.mod for m, c in terms.items()}
        return {m: c * inv for m, c in terms.items()}


def leading(terms: dict, order: MonomialOrder):
    key = order.key
    return max(terms, key=key)


def find_reducer(m, mm, elts):
    for e in elts:
        if e.mask & ~mm:
            continue
        if divides(e.lm, m):
            return e
    return None


_STRIP_BITS = 256


def reduce_full(terms: dict, elts: list, order: MonomialOrder, kernel: Kernel,
                counter: Counter | None = None, state_fn=None):
    """Full reduction of ``terms`` by ``elts``.

    Returns ``(remainder, scale)`` with ``scale * f - remainder`` in the ideal
    (``scale`` is 1 over fields).  The remainder dict is built in decreasing
    term order, so its first key is the leading monomial.
    """
    negkey = order.negkey
    work = dict(terms)
    heap = [(negkey(m), m) for m in work]
    heapify(heap)
    rem: dict = {}
    scale = 1
    mod = kernel.mod
    ff = kernel.ff
    while heap:
        _, m = heappop(heap)
        c = work.pop(m, None)
        if c is None:
            continue
        e = find_reducer(m, mask_of(m), elts)
        if e is None:
            rem[m] = c
            continue
        if counter is not None:
            counter.tick(state_fn)
        q = mono_div(m, e.lm)
        if ff:
            lc = e.lc
            g = gcd(c, lc)
            a, b = lc // g, c // g
            if a < 0:
                a, b = -a, -b
            if a != 1:
                scale *= a
                for k in work:
                    work[k] *= a
                for k in rem:
                    rem[k] *= a
            for tm, tc in e.tail:
                t = tuple([x + y for x, y in zip(tm, q)])
                v = work.get(t)
                if v is None:
                    work[t] = -b * tc
                    heappush(heap, (negkey(t), t))
                else:
                    v -= b * tc
                    if v:
                        work[t] = v
                    else:
                        del work[t]
            if abs(c).bit_length() > _STRIP_BITS:
                g = 0
                for v in work.values():
                    g = gcd(g, v)
                    if g == 1:
                        break
                if g != 1:
                    for v in rem.values():
                        g = gcd(g, v)
                        if g == 1:
                            break
                if g > 1:
                    for k in work:
                        work[k] //= g
                    for k in rem:
                        rem[k] //= g
                    scale = Fraction(scale, g)
        else:
            if mod:
                f = c * e.lcinv % mod
            else:
                f = c * e.lcinv
            for tm, tc in e.tail:
                t = tuple([x + y for x, y in zip(tm, q)])
                v = work.get(t)
                if v is None:
                    v = -f * tc
                    if mod:
                        v %= mod
                    if v:
                        work[t] = v
                        heappush(heap, (negkey(t), t))
                else:
                    v = v - f * tc
                    if mod:
                        v %= mod
                    if v:
                        work[t] = v
                    else:
                        del work[t]
    return rem, scale


def spoly(a: Elt, b: Elt, kernel: Kernel) -> dict:
    L = mono_lcm(a.lm, b.lm)
    qa, qb = mono_div(L, a.lm), mono_div(L, b.lm)
    mod = kernel.mod
    if kernel.ff:
        g = gcd(a.lc, b.lc)
        fa, fb = b.lc // g, a.lc // g
    elif mod:
        fa, fb = a.lcinv, b.lcinv
    else:
        fa, fb = a.lcinv, b.lcinv
    out: dict = {}
    for m, c in a.tail:
        t = mono_mul(m, qa)
        out[t] = out.get(t, 0) + fa * c
    for m, c in b.tail:
        t = mono_mul(m, qb)
        out[t] = out.get(t, 0) - fb * c
    if mod:
        return {m: c % mod for m, c in out.items() if c % mod}
    return {m: c for m, c in out.items() if c}
