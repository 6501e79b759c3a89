"""Exact real-root counting for univariate polynomials over QQ."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import _dense
from .polynomial import Polynomial, PolynomialError


class ZeroPolynomial(PolynomialError, ZeroDivisionError):
    pass


def _coeffs(f) -> list:
    """Dense low-first Fraction coefficients of a univariate Polynomial or list."""
    if isinstance(f, Polynomial):
        return _dense.norm(f.to_univariate())
    return _dense.norm(list(f))


def _back(coeffs: list, like):
    if isinstance(like, Polynomial):
        used = like.variables_used()
        name = used[0] if used else like.ring.variables[0]
        i = like.ring.index(name)
        terms = {}
        for k, c in enumerate(coeffs):
            if c:
                e = [0] * like.ring.nvars
                e[i] = k
                terms[tuple(e)] = like.ring.domain.convert(c)
        return Polynomial(like.ring, terms)
    return coeffs


def squarefree_part(f):
    """``f / gcd(f, f')`` made monic; accepts a Polynomial or a coefficient list."""
    a = _coeffs(f)
    if not a:
        raise ZeroPolynomial("squarefree part of the zero polynomial")
    return _back(_dense.squarefree_part(a), f)


@dataclass
class SturmChain:
    polys: list  # dense coefficient lists

    @classmethod
    def of(cls, f) -> "SturmChain":
        a = _coeffs(f)
        if not a:
            raise ZeroPolynomial("Sturm chain of the zero polynomial")
        chain = [a, _dense.derivative(a)]
        while chain[-1]:
            r = _dense.rem(chain[-2], chain[-1])
            chain.append([-x for x in r])
        chain.pop()
        return cls(chain)

    def variations_at(self, x) -> int:
        return _variations([_dense.evaluate(p, x) for p in self.polys])

    def variations_at_infinity(self, sign: int) -> int:
        vals = []
        for p in self.polys:
            lc = p[-1]
            s = 1 if lc > 0 else -1
            if sign < 0 and (len(p) - 1) % 2:
                s = -s
            vals.append(s)
        return _variations(vals)


def _variations(vals) -> int:
    signs = [v > 0 for v in vals if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def cauchy_bound(f) -> Fraction:
    """All complex roots have absolute value below this bound."""
    a = _coeffs(f)
    if not a:
        raise ZeroPolynomial("root bound of the zero polynomial")
    lc = abs(a[-1])
    return 1 + max((abs(c) / lc for c in a[:-1]), default=Fraction(0))


def count_real_roots(f, interval=None) -> int:
    """Distinct real roots of ``f``, on all of R or in the open interval ``(a, b)``.

    Sturm's theorem counts roots in the half-open ``(a, b]``; a root at ``b``
    is subtracted so the count is for the open interval.
    """
    a = _coeffs(f)
    if not a:
        raise ZeroPolynomial("real roots of the zero polynomial")
    a = _dense.squarefree_part(a)
    chain = SturmChain.of(a)
    if interval is None:
        return chain.variations_at_infinity(-1) - chain.variations_at_infinity(1)
    lo, hi = (Fraction(x) for x in interval)
    if lo >= hi:
        return 0
    n = chain.variations_at(lo) - chain.variations_at(hi)
    if _dense.evaluate(a, hi) == 0:
        n -= 1
    return n


def real_solution_count(sys) -> int:
    """Real solutions of a shape-position system (rational change of coordinates)."""
    if sys.mod:
        raise PolynomialError("real counting needs characteristic 0 shape data")
    if sys.distinct == 0:
        return 0
    return count_real_roots(sys.eliminant)


__all__ = ["SturmChain", "ZeroPolynomial", "cauchy_bound", "count_real_roots", "real_solution_count",
           "squarefree_part"]
