"""Dense univariate polynomial helpers.

Coefficient lists are low degree first with no trailing zeros (the zero
polynomial is ``[]``).  ``mod=0`` means exact rationals (Fractions or ints),
otherwise arithmetic is in F_mod on ints.
"""

from __future__ import annotations

import random
from fractions import Fraction


def trim(a: list) -> list:
    while a and not a[-1]:
        a.pop()
    return a


def norm(a, mod=0) -> list:
    if mod:
        return trim([x % mod for x in a])
    return trim([Fraction(x) for x in a])


def deg(a) -> int:
    return len(a) - 1


def add(a, b, mod=0):
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]
    if mod:
        out = [x % mod for x in out]
    return trim(out)


def sub(a, b, mod=0):
    return add(a, [-x for x in b], mod)


def mul(a, b, mod=0):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    if mod:
        out = [x % mod for x in out]
    return trim(out)


def scale(a, c, mod=0):
    if mod:
        return trim([x * c % mod for x in a])
    return trim([x * c for x in a])


def _inv(c, mod):
    return pow(c, -1, mod) if mod else 1 / Fraction(c)


def monic(a, mod=0):
    if not a:
        return []
    return scale(a, _inv(a[-1], mod), mod)


def divmod_(a, b, mod=0):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q = [0] * max(len(a) - len(b) + 1, 0)
    inv = _inv(b[-1], mod)
    db = len(b) - 1
    while len(a) - 1 >= db and a:
        c = a[-1] * inv
        if mod:
            c %= mod
        k = len(a) - 1 - db
        q[k] = c
        for i, y in enumerate(b):
            a[k + i] -= c * y
            if mod:
                a[k + i] %= mod
        a.pop()
        trim(a)
    if not mod:
        q = [Fraction(x) for x in q]
    return trim(q), trim(a)


def rem(a, b, mod=0):
    return divmod_(a, b, mod)[1]


def gcd(a, b, mod=0):
    a, b = trim(list(a)), trim(list(b))
    while b:
        a, b = b, rem(a, b, mod)
    return monic(a, mod)


def derivative(a, mod=0):
    out = [i * a[i] for i in range(1, len(a))]
    if mod:
        out = [x % mod for x in out]
    return trim(out)


def evaluate(a, x, mod=0):
    v = 0
    for c in reversed(a):
        v = v * x + c
        if mod:
            v %= mod
    return v


def powmod(base, e: int, m, mod):
    result = [1]
    base = rem(base, m, mod)
    while e:
        if e & 1:
            result = rem(mul(result, base, mod), m, mod)
        e >>= 1
        if e:
            base = rem(mul(base, base, mod), m, mod)
    return result


def squarefree_part(a, mod=0):
    """``a / gcd(a, a')`` made monic; assumes deg a < mod in positive characteristic."""
    if not a:
        raise ZeroDivisionError("squarefree part of the zero polynomial")
    g = gcd(a, derivative(a, mod), mod)
    q, r = divmod_(a, g, mod)
    assert not r
    return monic(q, mod)


def roots_mod_p(a, p: int, rng: random.Random | None = None) -> list[int]:
    """Distinct roots in F_p, by gcd with x^p - x and random equal-degree splitting."""
    a = norm(a, p)
    if not a:
        raise ZeroDivisionError("roots of the zero polynomial")
    if len(a) == 1:
        return []
    rng = rng or random.Random(p)
    xp = powmod([0, 1], p, a, p)
    g = gcd(a, sub(xp, [0, 1], p), p)
    out: list[int] = []
    stack = [g]
    while stack:
        f = stack.pop()
        d = deg(f)
        if d <= 0:
            continue
        if d == 1:
            out.append((-f[0]) * pow(f[1], -1, p) % p)
            continue
        if p == 2:
            out.extend(x for x in (0, 1) if evaluate(f, x, p) == 0)
            continue
        while True:
            shift = rng.randrange(p)
            h = powmod([shift, 1], (p - 1) // 2, f, p)
            s = gcd(f, sub(h, [1], p), p)
            if 0 < deg(s) < d:
                stack.append(s)
                stack.append(divmod_(f, s, p)[0])
                break
    return sorted(out)
