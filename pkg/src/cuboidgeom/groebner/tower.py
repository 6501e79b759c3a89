"""Finite-field evidence for the quadratic tower behind the primality argument.

For a specialization of ``(A, B, alpha, beta, gamma)`` in F_p the tower adjoins,
in turn, square roots of

    C^2 = (alpha A^2 + beta B^2) / gamma
    X^2 = B^2 + C^2
    Y^2 = C^2 + A^2
    Z^2 = A^2 + B^2
    U^2 = A^2 + B^2 + C^2

Each radicand lies in F_p.  A stage is an equality when the radicand is already
a square in the current field (F_p, or F_{p^2} once an extension happened) and
a proper quadratic extension otherwise.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field

from ..scalar import is_prime, legendre
from ._kernel import GroebnerError

STAGES = ("C", "X", "Y", "Z", "U")


class BadPrime(GroebnerError):
    pass


@dataclass
class TowerTrial:
    A: int
    B: int
    alpha: int
    beta: int
    gamma: int
    radicands: list
    outcomes: list  # "extension", "equality" or "zero" per stage
    quadric_reducible: bool


@dataclass
class TowerEvidence:
    p: int
    trials: list = field(default_factory=list)

    def tallies(self) -> dict:
        out = {s: Counter() for s in STAGES}
        for t in self.trials:
            for s, o in zip(STAGES, t.outcomes):
                out[s][o] += 1
        return {s: dict(sorted(c.items())) for s, c in out.items()}

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "trials": len(self.trials),
            "tallies": self.tallies(),
            "quadric_reducible": sum(t.quadric_reducible for t in self.trials),
        }


def radicands(A: int, B: int, alpha: int, beta: int, gamma: int, p: int) -> list[int]:
    a1 = (alpha * A * A + beta * B * B) * pow(gamma, -1, p) % p
    return [a1, (B * B + a1) % p, (a1 + A * A) % p, (A * A + B * B) % p, (A * A + B * B + a1) % p]


def walk_tower(values: list[int], p: int) -> list[str]:
    """Classify each stage; once F_{p^2} is reached every element of F_p is a square."""
    extended = False
    out = []
    for a in values:
        if a % p == 0:
            out.append("zero")
        elif extended or legendre(a, p) == 1:
            out.append("equality")
        else:
            out.append("extension")
            extended = True
    return out


def quadric_is_reducible(alpha: int, beta: int, p: int) -> bool:
    """Whether ``alpha A^2 + beta B^2`` factors over F_p."""
    if alpha % p == 0 or beta % p == 0:
        return True
    return legendre(-alpha * beta, p) == 1


def tower_splitting_evidence(p: int, trials: int, *, seed: int = 0) -> TowerEvidence:
    if p == 2 or not is_prime(p):
        raise BadPrime(f"need an odd prime, got {p}")
    rng = random.Random(seed)
    ev = TowerEvidence(p)
    for _ in range(trials):
        A, B = rng.randrange(1, p), rng.randrange(1, p)
        alpha, beta, gamma = (rng.randrange(1, p) for _ in range(3))
        vals = radicands(A, B, alpha, beta, gamma, p)
        ev.trials.append(TowerTrial(A, B, alpha, beta, gamma, vals, walk_tower(vals, p),
                                    quadric_is_reducible(alpha, beta, p)))
    return ev


__all__ = ["BadPrime", "STAGES", "TowerEvidence", "TowerTrial", "quadric_is_reducible", "radicands",
           "tower_splitting_evidence", "walk_tower"]
