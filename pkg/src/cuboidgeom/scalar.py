"""Coefficient domains: rationals, prime fields and rational-function fields.

Polynomials store raw coefficient values and delegate arithmetic to a domain
object.  Over the rationals the values are :class:`fractions.Fraction`; over a
prime field they are plain ints in ``[0, p)`` (``domain.mod == p``); over a
rational-function field they are :class:`RationalFunction` instances.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd


class ScalarError(ArithmeticError):
    pass


class ZeroDenominator(ScalarError, ZeroDivisionError):
    pass


class DivisionByZero(ScalarError, ZeroDivisionError):
    pass


class EvenCharacteristic(ScalarError):
    pass


class NotPrime(ScalarError, ValueError):
    pass


Rational = Fraction


def rat_normalize(n: int, d: int) -> Fraction:
    """Reduced fraction ``n/d`` with positive denominator."""
    if d == 0:
        raise ZeroDenominator(f"{n}/0")
    # Fraction already reduces and moves the sign to the numerator
    return Fraction(int(n), int(d))


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for 64-bit inputs."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for q in small:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def next_prime(n: int) -> int:
    n = max(n, 2)
    while not is_prime(n):
        n += 1
    return n


def legendre(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def sqrt_mod(a: int, p: int) -> int | None:
    """A square root of ``a`` modulo an odd prime ``p`` (Tonelli-Shanks), or None."""
    a %= p
    if a == 0:
        return 0
    if legendre(a, p) != 1:
        return None
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while legendre(z, p) != -1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


@dataclass(frozen=True)
class PrimeFieldElement:
    """An element of F_p; ``value`` is kept in ``[0, p)``."""

    value: int
    modulus: int

    def __post_init__(self):
        object.__setattr__(self, "value", self.value % self.modulus)

    def _coerce(self, other):
        if isinstance(other, PrimeFieldElement):
            if other.modulus != self.modulus:
                raise ScalarError("mixed moduli")
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return PrimeFieldElement(self.value + o, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return PrimeFieldElement(self.value - o, self.modulus)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return PrimeFieldElement(o - self.value, self.modulus)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return PrimeFieldElement(self.value * o, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return PrimeFieldElement(-self.value, self.modulus)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * ffield_inv(PrimeFieldElement(o, self.modulus))

    def __pow__(self, e: int):
        if e < 0:
            return ffield_inv(self) ** (-e)
        return PrimeFieldElement(pow(self.value, e, self.modulus), self.modulus)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.value == other % self.modulus
        if isinstance(other, PrimeFieldElement):
            return (self.value, self.modulus) == (other.value, other.modulus)
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.modulus))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value} (mod {self.modulus})"


def ffield_inv(a: PrimeFieldElement) -> PrimeFieldElement:
    if a.value == 0:
        raise DivisionByZero(f"0 has no inverse mod {a.modulus}")
    return PrimeFieldElement(pow(a.value, -1, a.modulus), a.modulus)


def is_square_ffield(a: PrimeFieldElement) -> bool:
    """Euler's criterion."""
    if a.modulus == 2:
        raise EvenCharacteristic("squareness test needs an odd prime")
    return a.value == 0 or pow(a.value, (a.modulus - 1) // 2, a.modulus) == 1


# --------------------------------------------------------------------------
# domains


class Domain:
    """Arithmetic on raw coefficient values.

    ``mod`` is the prime for prime fields and 0 otherwise; polynomial kernels
    use it to decide whether results must be reduced.
    """

    mod = 0
    characteristic = 0
    is_field = True

    def convert(self, x):
        raise NotImplementedError

    def div(self, a, b):
        if not b:
            raise DivisionByZero("division by zero coefficient")
        return a / b

    def inv(self, a):
        return self.div(self.one, a)

    def to_str(self, c) -> str:
        return str(c)

    def random_element(self, rng: random.Random, box: int = 50):
        return self.convert(rng.randint(-box, box))


class RationalField(Domain):
    zero = Fraction(0)
    one = Fraction(1)

    def convert(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, PrimeFieldElement):
            raise ScalarError("cannot lift a prime-field element to QQ")
        return Fraction(x)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


QQ = RationalField()


class PrimeField(Domain):
    zero = 0
    one = 1

    def __init__(self, p: int):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        self.mod = p
        self.characteristic = p

    def convert(self, x):
        if isinstance(x, PrimeFieldElement):
            if x.modulus != self.mod:
                raise ScalarError("modulus mismatch")
            return x.value
        if isinstance(x, Fraction):
            if x.denominator % self.mod == 0:
                raise DivisionByZero(f"{x} has no image mod {self.mod}")
            return x.numerator * pow(x.denominator, -1, self.mod) % self.mod
        return int(x) % self.mod

    def div(self, a, b):
        if type(a) is not int or type(b) is not int:
            a, b = self.convert(a), self.convert(b)
        if b % self.mod == 0:
            raise DivisionByZero(f"division by 0 mod {self.mod}")
        return a * pow(b, -1, self.mod) % self.mod

    def element(self, v) -> PrimeFieldElement:
        return PrimeFieldElement(self.convert(v), self.mod)

    def random_element(self, rng, box=None):
        return rng.randrange(self.mod)

    def __repr__(self):
        return f"GF({self.mod})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.mod == self.mod

    def __hash__(self):
        return hash(("GF", self.mod))


def GF(p: int) -> PrimeField:
    return PrimeField(p)


class RationalFunction:
    """Quotient of two polynomials over a base field.

    Canonical scaling: the denominator's leading coefficient is 1.  No gcd
    cancellation is attempted, so equal functions may have different
    numerator/denominator pairs; equality cross-multiplies.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = num.ring.one
        if den.is_zero():
            raise ZeroDenominator("rational function with zero denominator")
        lc = den.leading_coefficient()
        if lc != den.ring.domain.one:
            dom = den.ring.domain
            inv = dom.inv(lc)
            num = num.scale(inv)
            den = den.scale(inv)
        self.num = num
        self.den = den

    def _lift(self, other):
        if isinstance(other, RationalFunction):
            return other
        return RationalFunction(self.num.ring.const(other))

    def __add__(self, other):
        o = self._lift(other)
        if self.den == o.den:
            return RationalFunction(self.num + o.num, self.den)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o.num.is_zero():
            raise DivisionByZero("division by zero rational function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def __pow__(self, e: int):
        if e < 0:
            return RationalFunction(self.den, self.num) ** (-e)
        return RationalFunction(self.num ** e, self.den ** e)

    def __bool__(self):
        return not self.num.is_zero()

    def __eq__(self, other):
        try:
            o = self._lift(other)
        except Exception:
            return NotImplemented
        return self.num * o.den == o.num * self.den

    def __hash__(self):
        # cross-multiplied equality has no cheap canonical hash
        return 0

    def __repr__(self):
        if self.den.is_constant():
            return f"({self.num})"
        return f"({self.num})/({self.den})"


class RationalFunctionField(Domain):
    """Fraction field of a polynomial ring over a base field."""

    def __init__(self, base_ring):
        self.base_ring = base_ring
        self.characteristic = base_ring.domain.characteristic
        self.zero = RationalFunction(base_ring.zero)
        self.one = RationalFunction(base_ring.one)

    def convert(self, x):
        if isinstance(x, RationalFunction):
            return x
        if hasattr(x, "ring"):
            return RationalFunction(x)
        return RationalFunction(self.base_ring.const(x))

    def param(self, name: str) -> RationalFunction:
        return RationalFunction(self.base_ring.var(name))

    def div(self, a, b):
        return a / b

    def to_str(self, c):
        return repr(c)

    def random_element(self, rng, box=50):
        return self.convert(self.base_ring.domain.random_element(rng, box))

    def __repr__(self):
        return f"Frac({self.base_ring!r})"

    def __eq__(self, other):
        return isinstance(other, RationalFunctionField) and other.base_ring == self.base_ring

    def __hash__(self):
        return hash(("Frac", self.base_ring))


def content(values) -> int:
    g = 0
    for v in values:
        g = gcd(g, v)
        if g == 1:
            break
    return g
