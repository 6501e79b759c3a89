"""Zero-dimensional ideals: staircases and shape-position solving."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .. import _dense
from ..polynomial import Polynomial, Ring
from ._kernel import GroebnerError, divides
from .buchberger import GroebnerBasis, Ideal, buchberger, normal_form


class NotZeroDimensional(GroebnerError):
    pass


class ShapeFailed(GroebnerError):
    pass


@dataclass
class Staircase:
    monomials: list
    finite: bool
    leading: list = field(default_factory=list)

    def __len__(self):
        return len(self.monomials)

    @property
    def dimension(self) -> int | None:
        return len(self.monomials) if self.finite else None


def _minimal(monos: Sequence[tuple]) -> list[tuple]:
    monos = sorted(set(monos), key=sum)
    out: list[tuple] = []
    for m in monos:
        if not any(divides(o, m) for o in out):
            out.append(m)
    return out


def staircase_of(leading: Sequence[tuple], nvars: int, limit: int | None = None) -> Staircase:
    """Monomials outside the monomial ideal generated by ``leading``."""
    L = _minimal(leading)
    if any(sum(m) == 0 for m in L):
        return Staircase([], True, L)
    pure = set()
    for m in L:
        support = [i for i, e in enumerate(m) if e]
        if len(support) == 1:
            pure.add(support[0])
    if len(pure) < nvars:
        return Staircase([], False, L)
    out = []
    stack = [((0,) * nvars, 0)]
    while stack:
        m, start = stack.pop()
        out.append(m)
        if limit is not None and len(out) > limit:
            raise GroebnerError(f"staircase larger than {limit}")
        for i in range(start, nvars):
            n = m[:i] + (m[i] + 1,) + m[i + 1:]
            if not any(divides(o, n) for o in L):
                stack.append((n, i))
    out.sort(key=lambda m: (sum(m), m))
    return Staircase(out, True, L)


def quotient_dimension(G: GroebnerBasis) -> Staircase:
    return staircase_of(G.leading_monomials(), G.ring.nvars)


# --------------------------------------------------------------------------
# linear algebra in the quotient


class _Echelon:
    """Incremental row echelon form over QQ (Fractions) or F_p (ints)."""

    def __init__(self, mod: int):
        self.mod = mod
        self.rows: list[tuple[int, dict, dict]] = []  # pivot col, vector, combination

    def _inv(self, c):
        return pow(c, -1, self.mod) if self.mod else 1 / Fraction(c)

    def reduce(self, vec: dict, comb: dict):
        mod = self.mod
        vec = dict(vec)
        comb = dict(comb)
        for piv, rv, rc in self.rows:
            c = vec.get(piv)
            if not c:
                continue
            for k, x in rv.items():
                v = vec.get(k, 0) - c * x
                if mod:
                    v %= mod
                if v:
                    vec[k] = v
                else:
                    vec.pop(k, None)
            for k, x in rc.items():
                v = comb.get(k, 0) - c * x
                if mod:
                    v %= mod
                if v:
                    comb[k] = v
                else:
                    comb.pop(k, None)
        return vec, comb

    def add(self, vec: dict, comb: dict) -> bool:
        """Insert; returns False (and leaves ``self`` unchanged) on dependency."""
        vec, comb = self.reduce(vec, comb)
        if not vec:
            self._last_dependency = comb
            return False
        piv = min(vec)
        inv = self._inv(vec[piv])
        mod = self.mod
        if mod:
            vec = {k: v * inv % mod for k, v in vec.items()}
            comb = {k: v * inv % mod for k, v in comb.items()}
        else:
            vec = {k: v * inv for k, v in vec.items()}
            comb = {k: v * inv for k, v in comb.items()}
        # keep existing rows fully reduced with respect to the new pivot
        new_rows = []
        for p, rv, rc in self.rows:
            c = rv.get(piv)
            if c:
                rv = dict(rv)
                rc = dict(rc)
                for k, x in vec.items():
                    v = rv.get(k, 0) - c * x
                    if mod:
                        v %= mod
                    if v:
                        rv[k] = v
                    else:
                        rv.pop(k, None)
                for k, x in comb.items():
                    v = rc.get(k, 0) - c * x
                    if mod:
                        v %= mod
                    if v:
                        rc[k] = v
                    else:
                        rc.pop(k, None)
            new_rows.append((p, rv, rc))
        new_rows.append((piv, vec, comb))
        self.rows = new_rows
        return True


def _vector(f: Polynomial, index: dict) -> dict:
    return {index[m]: c for m, c in f.terms.items()}


@dataclass
class SolvedSystem:
    """Shape-position data of a zero-dimensional ideal.

    New coordinates are ``new = matrix @ old``; the last new coordinate is the
    separating form ``t``.  ``eliminant`` is the minimal polynomial of ``t``
    (low degree first) and ``coordinates[i]`` expresses new coordinate ``i`` as
    a polynomial in ``t`` modulo the eliminant.  ``old_coordinates[j]`` does
    the same for the original variables.
    """

    ring: Ring
    matrix: list
    eliminant: list
    coordinates: list
    old_coordinates: list
    multiplicity_dimension: int
    distinct: int
    basis: GroebnerBasis
    attempts: int = 1

    @property
    def mod(self) -> int:
        return self.ring.domain.mod

    def lex_basis(self, new_names: Sequence[str] | None = None) -> list[Polynomial]:
        """The shape-position lex basis ``{x_i - g_i(t), g_n(t)}`` in new coordinates."""
        n = self.ring.nvars
        names = list(new_names) if new_names else [f"w{i}" for i in range(n)]
        R = Ring(names, self.ring.domain, "lex")
        t = names[-1]
        out = []
        for i in range(n - 1):
            g = _uni_to_poly(self.coordinates[i], R, t)
            out.append(R.var(names[i]) - g)
        out.append(_uni_to_poly(_dense.monic(self.eliminant, self.mod), R, t))
        return out

    def eliminant_poly(self, name: str = "t") -> Polynomial:
        return _uni_to_poly(self.eliminant, Ring([name], self.ring.domain), name)


def _uni_to_poly(coeffs, ring: Ring, var: str) -> Polynomial:
    i = ring.index(var)
    terms = {}
    for k, c in enumerate(coeffs):
        if c:
            e = [0] * ring.nvars
            e[i] = k
            terms[tuple(e)] = ring.domain.convert(c)
    return Polynomial(ring, terms)


def _det(mat, mod):
    n = len(mat)
    a = [[(x % mod if mod else Fraction(x)) for x in row] for row in mat]
    det = 1
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c]), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det = det * a[c][c]
        inv = pow(a[c][c], -1, mod) if mod else 1 / a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] * inv
            if f:
                for k in range(c, n):
                    a[r][k] -= f * a[c][k]
                    if mod:
                        a[r][k] %= mod
    return det % mod if mod else det


def _random_change(n: int, rng: random.Random, box: int, mod: int):
    while True:
        m = [[rng.randint(-box, box) for _ in range(n)] for _ in range(n)]
        if _det(m, mod):
            return m


def shape_position_solve(I, *, rng: random.Random | None = None, seed: int = 0, box: int = 50,
                         retries: int = 8, gb: GroebnerBasis | None = None) -> SolvedSystem:
    """Shape-position data after a random rational linear change of coordinates.

    The quotient is computed once in the original coordinates; the minimal
    polynomial of the separating form and the coordinate polynomials are
    obtained by linear algebra on normal forms, which yields exactly the lex
    basis of the transformed ideal when it is in shape position.
    """
    if gb is None:
        gens = I.generators if isinstance(I, Ideal) else list(I)
        ring = I.ring if isinstance(I, Ideal) else gens[0].ring
        gb = buchberger(Ideal(gens, ring), ring.make_order("grevlex"))
    ring = gb.ring
    mod = ring.domain.mod
    rng = rng or random.Random(seed)
    stair = quotient_dimension(gb)
    if not stair.finite:
        raise NotZeroDimensional("ideal is not zero-dimensional")
    D = len(stair.monomials)
    n = ring.nvars
    index = {m: k for k, m in enumerate(stair.monomials)}
    order = gb.order
    G = gb.elements
    if D == 0:
        return SolvedSystem(ring, [[int(i == j) for j in range(n)] for i in range(n)], [1],
                            [[] for _ in range(n)], [[] for _ in range(n)], 0, 0, gb)
    conv = ring.domain.convert
    old_vecs = [_vector(normal_form(ring.var(v), G, order), index) for v in ring.variables]
    for attempt in range(1, retries + 1):
        M = _random_change(n, rng, box, mod)
        t = ring.zero
        for j, v in enumerate(ring.variables):
            t = t + ring.var(v).scale(conv(M[-1][j]))
        ech = _Echelon(mod)
        power = ring.one
        minpoly = None
        for k in range(D + 1):
            vec = _vector(power, index)
            if not ech.add(vec, {k: 1}):
                dep = ech._last_dependency
                minpoly = [dep.get(i, 0) for i in range(k + 1)]
                break
            power = normal_form(power * t, G, order)
        if minpoly is None or len(minpoly) - 1 < D:
            continue
        minpoly = _dense.monic(_dense.norm(minpoly, mod), mod)
        # express the original coordinates in the basis 1, t, ..., t^(D-1)
        old_coords = []
        for vec in old_vecs:
            red, comb = ech.reduce(vec, {})
            if red:
                raise ShapeFailed("coordinate outside the span of powers of t")
            g = [(-comb.get(i, 0)) % mod if mod else -comb.get(i, 0) for i in range(D)]
            old_coords.append(_dense.norm(g, mod))
        new_coords = []
        for i in range(n):
            acc: list = []
            for j in range(n):
                if M[i][j]:
                    acc = _dense.add(acc, _dense.scale(old_coords[j], M[i][j], mod), mod)
            new_coords.append(acc)
        sqf = _dense.squarefree_part(minpoly, mod)
        return SolvedSystem(ring, M, minpoly, new_coords, old_coords, D, len(sqf) - 1, gb, attempt)
    raise ShapeFailed(f"no separating linear form found after {retries} attempts")


def verify_solution(sol: SolvedSystem, generators: Sequence[Polynomial]) -> bool:
    """Substitute the coordinate polynomials into every generator and reduce mod the eliminant."""
    mod = sol.mod
    g = sol.eliminant
    for f in generators:
        acc: list = []
        for m, c in f.terms.items():
            term = [c if not mod else c % mod]
            for j, e in enumerate(m):
                for _ in range(e):
                    term = _dense.rem(_dense.mul(term, sol.old_coordinates[j], mod), g, mod)
            acc = _dense.add(acc, term, mod)
        if _dense.rem(acc, g, mod):
            return False
    return True


__all__ = [
    "NotZeroDimensional", "ShapeFailed", "SolvedSystem", "Staircase", "quotient_dimension",
    "shape_position_solve", "staircase_of", "verify_solution",
]
