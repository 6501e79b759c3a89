"""Sparse multivariate polynomials, monomial orders and calculus helpers."""

from __future__ import annotations

import re
from fractions import Fraction
from itertools import combinations, permutations
from operator import itemgetter
from typing import Iterable, Mapping, Sequence

from .scalar import QQ, Domain, RationalField

Monomial = tuple  # tuple[int, ...], one exponent per ring variable


class PolynomialError(ValueError):
    pass


class RingMismatch(PolynomialError):
    pass


class UnknownVariable(PolynomialError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "unknown variable"


class NotHomogeneous(PolynomialError):
    pass


class PolySyntaxError(PolynomialError, SyntaxError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


# --------------------------------------------------------------------------
# monomial orders


class MonomialOrder:
    """A monomial order given by a sort key; larger key means larger monomial.

    kinds: ``lex`` and ``grevlex`` (global, both with a variable ranking),
    ``local`` (negative graded lex, 1 is the largest monomial) and ``block``
    (grevlex on an eliminated block, then grevlex on the rest).
    ``ranking`` lists variable indices from the greatest variable down.
    """

    __slots__ = ("kind", "ranking", "split", "nvars", "key", "negkey", "_name")

    def __init__(self, kind: str, ranking: Sequence[int], split: int | None = None):
        ranking = tuple(ranking)
        if sorted(ranking) != list(range(len(ranking))):
            raise PolynomialError(f"ranking {ranking} is not a permutation")
        self.kind = kind
        self.ranking = ranking
        self.split = split
        self.nvars = len(ranking)
        self.key = self._build_key()
        key = self.key
        # heapq is a min-heap; negated keys pop the largest monomial first
        self.negkey = lambda e: tuple([-x for x in key(e)])
        self._name = None

    def _build_key(self):
        rk = self.ranking
        n = len(rk)
        if n == 0:
            return lambda e: ()
        if self.kind == "lex":
            if n == 1:
                i = rk[0]
                return lambda e: (e[i],)
            return itemgetter(*rk)
        if self.kind == "grevlex":
            rev = rk[::-1]
            return lambda e: (sum(e), *[-e[i] for i in rev])
        if self.kind == "local":
            return lambda e: (-sum(e), *[e[i] for i in rk])
        if self.kind == "block":
            b1, b2 = rk[: self.split], rk[self.split:]
            r1, r2 = b1[::-1], b2[::-1]

            def key(e):
                return (sum(e[i] for i in b1), *[-e[i] for i in r1],
                        sum(e[i] for i in b2), *[-e[i] for i in r2])
            return key
        raise PolynomialError(f"unknown order kind {self.kind!r}")

    def __reduce__(self):
        # keys are closures; rebuild them on unpickling
        return (MonomialOrder, (self.kind, self.ranking, self.split))

    @property
    def is_local(self) -> bool:
        return self.kind == "local"

    @property
    def is_global(self) -> bool:
        return self.kind != "local"

    def compare(self, m1: Monomial, m2: Monomial) -> int:
        if len(m1) != self.nvars or len(m2) != self.nvars:
            raise RingMismatch("monomial length does not match the order")
        k1, k2 = self.key(m1), self.key(m2)
        return (k1 > k2) - (k1 < k2)

    def __eq__(self, other):
        return (isinstance(other, MonomialOrder) and self.kind == other.kind
                and self.ranking == other.ranking and self.split == other.split)

    def __hash__(self):
        return hash((self.kind, self.ranking, self.split))

    def describe(self, variables: Sequence[str]) -> str:
        names = ">".join(variables[i] for i in self.ranking)
        if self.kind == "block":
            a = ",".join(variables[i] for i in self.ranking[: self.split])
            b = ",".join(variables[i] for i in self.ranking[self.split:])
            return f"block:{a}|{b}"
        return f"{self.kind}:{names}"

    def __repr__(self):
        return f"MonomialOrder({self.kind!r}, {self.ranking}, split={self.split})"


def compare(m1: Monomial, m2: Monomial, order: MonomialOrder) -> int:
    return order.compare(m1, m2)


# --------------------------------------------------------------------------
# rings


class Ring:
    """Polynomial ring: ordered variable names, coefficient domain, default order."""

    def __init__(self, variables: Sequence[str], domain: Domain = QQ, order: str | MonomialOrder = "grevlex"):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise PolynomialError(f"duplicate variable names in {variables}")
        self.variables = variables
        self.nvars = len(variables)
        self.domain = domain
        self._index = {v: i for i, v in enumerate(variables)}
        self.zero_monomial = (0,) * self.nvars
        self.order = order if isinstance(order, MonomialOrder) else self.make_order(order)

    # ring identity ignores the default order
    def __eq__(self, other):
        return isinstance(other, Ring) and self.variables == other.variables and self.domain == other.domain

    def __hash__(self):
        return hash((self.variables, self.domain))

    def __repr__(self):
        return f"{self.domain!r}[{','.join(self.variables)}]"

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownVariable(f"unknown variable {name!r} in {self!r}") from None

    def make_order(self, spec: str = "grevlex", ranking: Sequence[str] | None = None) -> MonomialOrder:
        """Build an order.

        ``spec`` is ``lex``, ``grevlex``, ``local`` or ``block`` optionally
        followed by ``:`` and a chain such as ``Z>Y>X`` or ``C<U<X``; for
        ``block`` the chain is ``x,y|z,w`` (first block eliminated).  Variables
        missing from a chain rank below the listed ones in ring order.
        """
        kind, _, chain = spec.partition(":")
        kind = kind.strip()
        if kind == "block":
            first, _, _rest = chain.partition("|")
            elim = [v.strip() for v in first.split(",") if v.strip()]
            return self.block_order(elim)
        names: list[str] = list(ranking) if ranking else []
        if chain:
            if "<" in chain and ">" in chain:
                raise PolynomialError(f"mixed chain {chain!r}")
            if "<" in chain:
                names = [v.strip() for v in chain.split("<")][::-1]
            else:
                names = [v.strip() for v in chain.split(">")]
        idx = [self.index(v) for v in names]
        idx += [i for i in range(self.nvars) if i not in idx]
        if kind not in ("lex", "grevlex", "local"):
            raise PolynomialError(f"unknown order kind {kind!r}")
        return MonomialOrder(kind, idx)

    def block_order(self, eliminate: Sequence[str]) -> MonomialOrder:
        first = [self.index(v) for v in eliminate]
        rest = [i for i in range(self.nvars) if i not in first]
        return MonomialOrder("block", first + rest, split=len(first))

    def with_order(self, order) -> "Ring":
        return Ring(self.variables, self.domain, order if isinstance(order, MonomialOrder) else self.make_order(order))

    def with_domain(self, domain: Domain) -> "Ring":
        return Ring(self.variables, domain, MonomialOrder(self.order.kind, self.order.ranking, self.order.split))

    def drop(self, *names: str) -> "Ring":
        keep = [v for v in self.variables if v not in names]
        for n in names:
            self.index(n)
        return Ring(keep, self.domain)

    # constructors
    @property
    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    @property
    def one(self) -> "Polynomial":
        return self.const(1)

    def const(self, c) -> "Polynomial":
        c = self.domain.convert(c)
        return Polynomial(self, {self.zero_monomial: c} if c else {})

    def var(self, name: str) -> "Polynomial":
        e = [0] * self.nvars
        e[self.index(name)] = 1
        return Polynomial(self, {tuple(e): self.domain.one})

    @property
    def gens(self) -> list["Polynomial"]:
        return [self.var(v) for v in self.variables]

    def monomial(self, exps: Monomial, coeff=1) -> "Polynomial":
        if len(exps) != self.nvars:
            raise RingMismatch("monomial length mismatch")
        c = self.domain.convert(coeff)
        return Polynomial(self, {tuple(exps): c} if c else {})

    def from_terms(self, terms: Mapping[Monomial, object]) -> "Polynomial":
        conv = self.domain.convert
        out = {}
        for m, c in terms.items():
            c = conv(c)
            if c:
                out[tuple(m)] = c
        return Polynomial(self, out)

    def parse(self, text: str) -> "Polynomial":
        return parse_poly(text, self)

    def __call__(self, text: str) -> "Polynomial":
        return parse_poly(text, self)


# --------------------------------------------------------------------------
# polynomials


def _mono_str(ring: Ring, m: Monomial) -> str:
    parts = []
    for v, e in zip(ring.variables, m):
        if e == 1:
            parts.append(v)
        elif e > 1:
            parts.append(f"{v}^{e}")
    return "*".join(parts)


class Polynomial:
    """Immutable sparse polynomial; ``terms`` maps exponent tuples to nonzero coefficients."""

    __slots__ = ("ring", "terms", "_sorted")

    def __init__(self, ring: Ring, terms: dict):
        self.ring = ring
        self.terms = terms
        self._sorted = {}

    # ---- basic queries
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.ring.zero_monomial in self.terms)

    def __len__(self):
        return len(self.terms)

    def total_degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def degree(self, var: str) -> int:
        i = self.ring.index(var)
        return max((m[i] for m in self.terms), default=-1)

    def coeff(self, monomial) -> object:
        if isinstance(monomial, str):
            monomial = self.ring.parse(monomial).leading_monomial()
        return self.terms.get(tuple(monomial), self.ring.domain.zero)

    def constant_coeff(self):
        return self.terms.get(self.ring.zero_monomial, self.ring.domain.zero)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def variables_used(self) -> list[str]:
        used = set()
        for m in self.terms:
            used.update(i for i, e in enumerate(m) if e)
        return [self.ring.variables[i] for i in sorted(used)]

    # ---- ordering
    def sorted_terms(self, order: MonomialOrder | None = None) -> list[tuple[Monomial, object]]:
        """Terms in decreasing order; cached per order."""
        order = order or self.ring.order
        got = self._sorted.get(order)
        if got is None:
            key = order.key
            got = sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)
            self._sorted[order] = got
        return got

    def leading_term(self, order: MonomialOrder | None = None):
        if not self.terms:
            raise PolynomialError("zero polynomial has no leading term")
        return self.sorted_terms(order)[0]

    def leading_monomial(self, order: MonomialOrder | None = None) -> Monomial:
        return self.leading_term(order)[0]

    def leading_coefficient(self, order: MonomialOrder | None = None):
        return self.leading_term(order)[1]

    def monic(self, order: MonomialOrder | None = None) -> "Polynomial":
        if not self.terms:
            return self
        return self.scale(self.ring.domain.inv(self.leading_coefficient(order)))

    # ---- arithmetic
    def _check(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatch(f"{self.ring!r} vs {other.ring!r}")
            return other
        return self.ring.const(other)

    def __add__(self, other):
        other = self._check(other)
        mod = self.ring.domain.mod
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m)
            if v is None:
                out[m] = c
                continue
            v = v + c
            if mod:
                v %= mod
            if v:
                out[m] = v
            else:
                del out[m]
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        mod = self.ring.domain.mod
        if mod:
            return Polynomial(self.ring, {m: (mod - c) for m, c in self.terms.items()})
        return Polynomial(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        other = self._check(other)
        mod = self.ring.domain.mod
        out: dict = {}
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        for mb, cb in b.items():
            for ma, ca in a.items():
                m = tuple([x + y for x, y in zip(ma, mb)])
                v = out.get(m)
                out[m] = ca * cb if v is None else v + ca * cb
        if mod:
            out = {m: c % mod for m, c in out.items() if c % mod}
        else:
            out = {m: c for m, c in out.items() if c}
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise PolynomialError("exponent must be a non-negative integer")
        result = self.ring.one
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __truediv__(self, c):
        if isinstance(c, Polynomial):
            if not c.is_constant() or c.is_zero():
                raise PolynomialError("division only by nonzero constants")
            c = c.constant_coeff()
        return self.scale(self.ring.domain.inv(self.ring.domain.convert(c)))

    def scale(self, c) -> "Polynomial":
        dom = self.ring.domain
        c = dom.convert(c)
        if not c:
            return self.ring.zero
        mod = dom.mod
        if mod:
            return Polynomial(self.ring, {m: v * c % mod for m, v in self.terms.items()})
        return Polynomial(self.ring, {m: v * c for m, v in self.terms.items()})

    def mul_term(self, monomial: Monomial, c) -> "Polynomial":
        mod = self.ring.domain.mod
        out = {}
        for m, v in self.terms.items():
            w = v * c
            if mod:
                w %= mod
            if w:
                out[tuple([x + y for x, y in zip(m, monomial)])] = w
        return Polynomial(self.ring, out)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        try:
            return self == self.ring.const(other)
        except Exception:
            return NotImplemented

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms)))

    # ---- calculus and substitution
    def derivative(self, var: str) -> "Polynomial":
        i = self.ring.index(var)
        mod = self.ring.domain.mod
        out = {}
        for m, c in self.terms.items():
            e = m[i]
            if e == 0:
                continue
            v = c * e
            if mod:
                v %= mod
            if v:
                out[m[:i] + (e - 1,) + m[i + 1:]] = v
        return Polynomial(self.ring, out)

    def substitute(self, bindings: Mapping[str, object], target: Ring | None = None) -> "Polynomial":
        """Simultaneous substitution ``var -> image``; images live in ``target``.

        Unbound variables must exist in ``target`` (they map to themselves).
        """
        target = target or self.ring
        images = []
        for v in self.ring.variables:
            if v in bindings:
                img = bindings[v]
                if isinstance(img, Polynomial):
                    if img.ring != target:
                        raise RingMismatch(f"image of {v} is in {img.ring!r}, expected {target!r}")
                else:
                    img = target.const(img)
            else:
                if v not in target._index:
                    raise RingMismatch(f"unbound variable {v} missing from target ring")
                img = target.var(v)
            images.append(img)
        for v in bindings:
            self.ring.index(v)
        # fast path: every image is a variable or constant
        simple = all(len(img.terms) <= 1 for img in images)
        conv = target.domain.convert
        if simple:
            mod = target.domain.mod
            parts = []
            for img in images:
                if not img.terms:
                    parts.append(None)
                else:
                    (mm, cc), = img.terms.items()
                    parts.append((mm, cc))
            out: dict = {}
            for m, c in self.terms.items():
                coef = conv(c)
                mono = [0] * target.nvars
                dead = False
                for e, part in zip(m, parts):
                    if not e:
                        continue
                    if part is None:
                        dead = True
                        break
                    mm, cc = part
                    coef = coef * cc ** e
                    for j, x in enumerate(mm):
                        mono[j] += x * e
                if dead:
                    continue
                if mod:
                    coef %= mod
                t = tuple(mono)
                v = out.get(t)
                v = coef if v is None else v + coef
                if mod:
                    v %= mod
                if v:
                    out[t] = v
                else:
                    out.pop(t, None)
            return Polynomial(target, out)
        cache: dict = {}

        def power(i, e):
            k = (i, e)
            if k not in cache:
                cache[k] = images[i] ** e
            return cache[k]

        result = target.zero
        for m, c in self.terms.items():
            term = target.const(conv(c))
            for i, e in enumerate(m):
                if e:
                    term = term * power(i, e)
            result = result + term
        return result

    def evaluate(self, point: Mapping[str, object] | Sequence):
        """Value at a point given as a mapping or a sequence in ring order."""
        dom = self.ring.domain
        if isinstance(point, Mapping):
            vals = [dom.convert(point[v]) for v in self.ring.variables]
        else:
            vals = [dom.convert(x) for x in point]
        mod = dom.mod
        total = dom.zero
        for m, c in self.terms.items():
            t = c
            for x, e in zip(vals, m):
                if e:
                    t = t * (pow(x, e, mod) if mod else x ** e)
            total = total + t
        if mod:
            total %= mod
        return total

    def dehomogenize(self, var: str) -> "Polynomial":
        if not self.is_homogeneous():
            raise NotHomogeneous(f"{self} is not homogeneous")
        target = self.ring.drop(var)
        i = self.ring.index(var)
        mod = self.ring.domain.mod
        out: dict = {}
        for m, c in self.terms.items():
            t = m[:i] + m[i + 1:]
            v = out.get(t)
            v = c if v is None else v + c
            if mod:
                v %= mod
            if v:
                out[t] = v
            else:
                out.pop(t, None)
        return Polynomial(target, out)

    def homogenize(self, var: str, target: Ring) -> "Polynomial":
        """Homogenize with a new variable ``var`` of ``target`` (which extends this ring)."""
        d = self.total_degree()
        j = target.index(var)
        pos = [target.index(v) for v in self.ring.variables]
        out = {}
        for m, c in self.terms.items():
            e = [0] * target.nvars
            for k, x in zip(pos, m):
                e[k] = x
            e[j] = d - sum(m)
            out[tuple(e)] = target.domain.convert(c)
        return Polynomial(target, out)

    def to_univariate(self) -> list:
        """Dense coefficients (low degree first) of a polynomial in at most one variable."""
        used = self.variables_used()
        if len(used) > 1:
            raise PolynomialError(f"{self} is not univariate")
        if not self.terms:
            return []
        i = self.ring.index(used[0]) if used else 0
        deg = max(m[i] for m in self.terms) if self.ring.nvars else 0
        coeffs = [self.ring.domain.zero] * (deg + 1)
        for m, c in self.terms.items():
            coeffs[m[i] if self.ring.nvars else 0] = c
        return coeffs

    # ---- printing
    def to_string(self, order: MonomialOrder | None = None) -> str:
        if not self.terms:
            return "0"
        dom = self.ring.domain
        pieces = []
        for m, c in self.sorted_terms(order):
            mono = _mono_str(self.ring, m)
            neg = False
            if isinstance(dom, RationalField):
                if c < 0:
                    neg, c = True, -c
                cs = str(c)
            else:
                cs = dom.to_str(c)
            if mono:
                text = mono if cs == "1" else f"{cs}*{mono}"
            else:
                text = cs
            pieces.append(("-" if neg else "+", text))
        out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, text in pieces[1:]:
            out += f" {sign} {text}"
        return out

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"Polynomial({self.to_string()!r})"


# --------------------------------------------------------------------------
# parsing

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^()]))")


def _tokenize(text: str):
    pos = 0
    tokens = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise PolySyntaxError(f"unexpected character {text[bad]!r}", bad)
        start = m.start(m.lastindex)
        if m.group(1):
            tokens.append(("num", int(m.group(1)), start))
        elif m.group(2):
            tokens.append(("id", m.group(2), start))
        else:
            op = "^" if m.group(3) == "**" else m.group(3)
            tokens.append(("op", op, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: Ring):
        self.toks = _tokenize(text)
        self.i = 0
        self.ring = ring

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect_op(self, op):
        t = self.take()
        if t[0] != "op" or t[1] != op:
            raise PolySyntaxError(f"expected {op!r}", t[2])

    def parse(self):
        if self.peek()[0] == "end":
            raise PolySyntaxError("empty expression", 0)
        e = self.expr()
        t = self.peek()
        if t[0] != "end":
            raise PolySyntaxError(f"unexpected token {t[1]!r}", t[2])
        return e

    def expr(self):
        value = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] in "*/":
            tok = self.take()
            rhs = self.unary()
            if tok[1] == "*":
                value = value * rhs
            else:
                if not rhs.is_constant() or rhs.is_zero():
                    raise PolySyntaxError("division only by nonzero constants", tok[2])
                value = value / rhs
        return value

    def unary(self):
        t = self.peek()
        if t[0] == "op" and t[1] in "+-":
            self.take()
            v = self.unary()
            return -v if t[1] == "-" else v
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            t = self.take()
            if t[0] != "num":
                raise PolySyntaxError("exponent must be a non-negative integer", t[2])
            base = base ** t[1]
        return base

    def atom(self):
        t = self.take()
        if t[0] == "num":
            return self.ring.const(t[1])
        if t[0] == "id":
            if t[1] not in self.ring._index:
                raise UnknownVariable(f"unknown variable {t[1]!r} at position {t[2]}")
            return self.ring.var(t[1])
        if t[0] == "op" and t[1] == "(":
            v = self.expr()
            self.expect_op(")")
            return v
        raise PolySyntaxError(f"unexpected token {t[1]!r}", t[2])


def parse_poly(text: str, ring: Ring) -> Polynomial:
    return _Parser(text, ring).parse()


# --------------------------------------------------------------------------
# matrices of polynomials


def derivative(f: Polynomial, var: str) -> Polynomial:
    return f.derivative(var)


def substitute(f: Polynomial, bindings: Mapping[str, object], target: Ring | None = None) -> Polynomial:
    return f.substitute(bindings, target)


def dehomogenize(f: Polynomial, var: str) -> Polynomial:
    return f.dehomogenize(var)


def jacobian(fs: Sequence[Polynomial], variables: Sequence[str] | None = None) -> list[list[Polynomial]]:
    """Rows follow ``fs``; columns follow ``variables`` (default: ring order)."""
    if not fs:
        return []
    ring = fs[0].ring
    for f in fs:
        if f.ring != ring:
            raise RingMismatch("jacobian needs a common ring")
    variables = list(variables) if variables is not None else list(ring.variables)
    return [[f.derivative(v) for v in variables] for f in fs]


def _perm_sign(p: Sequence[int]) -> int:
    sign = 1
    p = list(p)
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            sign = -sign
    return sign


def determinant(mat: Sequence[Sequence[Polynomial]]) -> Polynomial:
    """Leibniz expansion; intended for the small minors used here (n <= 5)."""
    n = len(mat)
    if n == 0:
        raise PolynomialError("empty matrix")
    ring = mat[0][0].ring
    total = ring.zero
    for p in permutations(range(n)):
        term = ring.const(_perm_sign(p))
        for r, c in enumerate(p):
            entry = mat[r][c]
            if entry.is_zero():
                term = None
                break
            term = term * entry
        if term is not None:
            total = total + term
    return total


def maximal_minors(mat: Sequence[Sequence[Polynomial]]) -> list[Polynomial]:
    """All r x r minors of an r x n matrix, columns chosen in lexicographic order."""
    r = len(mat)
    n = len(mat[0]) if r else 0
    out = []
    for cols in combinations(range(n), r):
        out.append(determinant([[row[c] for c in cols] for row in mat]))
    return out


def polys(ring: Ring, texts: Iterable[str]) -> list[Polynomial]:
    return [ring.parse(t) for t in texts]


def as_fraction(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)
