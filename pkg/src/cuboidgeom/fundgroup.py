"""Finitely presented groups, abelianization by Smith normal form, and pi_1 reports.

Words are tuples of nonzero ints: ``i`` stands for generator ``i - 1`` and
``-i`` for its inverse.  Presentations keep their relators freely reduced.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


class FundGroupError(ValueError):
    pass


class InvalidRank(FundGroupError):
    pass


class UnknownGenerator(FundGroupError):
    pass


class MissingInput(FundGroupError):
    pass


Word = tuple


def free_reduce(word: Sequence[int]) -> Word:
    out: list[int] = []
    for s in word:
        if s == 0:
            raise UnknownGenerator("0 is not a generator index")
        if out and out[-1] == -s:
            out.pop()
        else:
            out.append(s)
    return tuple(out)


def invert(word: Sequence[int]) -> Word:
    return tuple(-s for s in reversed(word))


@dataclass(frozen=True)
class GroupPresentation:
    generators: tuple
    relators: tuple = ()
    name: str = ""

    def __post_init__(self):
        n = len(self.generators)
        rels = []
        for r in self.relators:
            if any(abs(s) > n or s == 0 for s in r):
                raise UnknownGenerator(f"relator {r} uses an undeclared generator")
            rels.append(free_reduce(r))
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "relators", tuple(r for r in rels if r))

    @property
    def rank(self) -> int:
        return len(self.generators)

    def exponent_matrix(self) -> list[list[int]]:
        rows = []
        for r in self.relators:
            row = [0] * self.rank
            for s in r:
                row[abs(s) - 1] += 1 if s > 0 else -1
            rows.append(row)
        return rows

    def word_str(self, word: Sequence[int]) -> str:
        parts = []
        for s in word:
            g = self.generators[abs(s) - 1]
            parts.append(g if s > 0 else f"{g}^-1")
        return "*".join(parts) or "1"

    def to_dict(self) -> dict:
        return {"name": self.name, "generators": list(self.generators),
                "relators": [list(r) for r in self.relators],
                "relators_text": [self.word_str(r) for r in self.relators]}

    def __str__(self):
        rels = ", ".join(self.word_str(r) for r in self.relators)
        return f"<{', '.join(self.generators)} | {rels}>"


def trivial_group(name: str = "1") -> GroupPresentation:
    return GroupPresentation((), (), name)


def free_group(n: int, prefix: str = "a", name: str | None = None) -> GroupPresentation:
    if n < 0:
        raise InvalidRank(f"free group rank {n} < 0")
    return GroupPresentation(tuple(f"{prefix}{i}" for i in range(1, n + 1)), (), name or f"F_{n}")


def free_abelian(n: int, prefix: str = "e") -> GroupPresentation:
    if n < 0:
        raise InvalidRank(f"rank {n} < 0")
    rels = [(i, j, -i, -j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    return GroupPresentation(tuple(f"{prefix}{i}" for i in range(1, n + 1)), tuple(rels), f"Z^{n}")


def surface_group_nonorientable(k: int, prefix: str = "a") -> GroupPresentation:
    """pi_1(N_k) = <a_1..a_k | a_1^2 ... a_k^2>."""
    if k < 1:
        raise InvalidRank(f"N_k needs k >= 1, got {k}")
    rel = tuple(s for i in range(1, k + 1) for s in (i, i))
    return GroupPresentation(tuple(f"{prefix}{i}" for i in range(1, k + 1)), (rel,), f"pi1(N_{k})")


def free_product(G: GroupPresentation, H: GroupPresentation, name: str | None = None) -> GroupPresentation:
    """Disjoint union of generators (renamed on clashes) and relators."""
    taken = set(G.generators)
    gens = list(G.generators)
    for g in H.generators:
        new = g
        while new in taken:
            new = new + "'"
        taken.add(new)
        gens.append(new)
    shift = G.rank
    rels = list(G.relators) + [tuple(s + shift if s > 0 else s - shift for s in r) for r in H.relators]
    return GroupPresentation(tuple(gens), tuple(rels), name or f"{G.name} * {H.name}")


# --------------------------------------------------------------------------
# Smith normal form


def _identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    if not a:
        return []
    cols = len(b[0]) if b else 0
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(cols)] for i in range(len(a))]


def determinant(m: list[list[int]]) -> int:
    """Exact integer determinant (fraction-free Bareiss)."""
    n = len(m)
    if n == 0:
        return 1
    a = [row[:] for row in m]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def smith_normal_form(M: Sequence[Sequence[int]], ncols: int | None = None):
    """``(D, U, V)`` with ``U * M * V = D`` diagonal, ``d_1 | d_2 | ...`` and U, V unimodular."""
    A = [list(map(int, r)) for r in M]
    m = len(A)
    n = ncols if ncols is not None else (len(A[0]) if A else 0)
    U, V = _identity(m), _identity(n)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, c):  # row_dst += c * row_src
        A[dst] = [x + c * y for x, y in zip(A[dst], A[src])]
        U[dst] = [x + c * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, c):
        for row in A:
            row[dst] += c * row[src]
        for row in V:
            row[dst] += c * row[src]

    t = 0
    while t < min(m, n):
        nz = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j]]
        if not nz:
            break
        _, i, j = min(nz)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            done = True
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // A[t][t]))
                    if A[i][t]:
                        swap_rows(t, i)
                        done = False
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // A[t][t]))
                    if A[t][j]:
                        swap_cols(t, j)
                        done = False
            if not done:
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % A[t][t]), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    return A, U, V


def diagonal(D: list[list[int]]) -> list[int]:
    return [D[i][i] for i in range(min(len(D), len(D[0]) if D else 0))]


@dataclass(frozen=True)
class AbelianGroup:
    rank: int
    torsion: tuple = ()

    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    def __str__(self):
        parts = []
        if self.rank:
            parts.append("Z" if self.rank == 1 else f"Z^{self.rank}")
        parts += [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) or "0"

    def to_dict(self) -> dict:
        return {"rank": self.rank, "torsion": list(self.torsion), "text": str(self)}


def abelianization(G: GroupPresentation) -> AbelianGroup:
    if not G.relators:
        return AbelianGroup(G.rank, ())
    D, _, _ = smith_normal_form(G.exponent_matrix(), G.rank)
    d = [x for x in diagonal(D) if x]
    return AbelianGroup(G.rank - len(d), tuple(x for x in d if x > 1))


# --------------------------------------------------------------------------
# extensions and reports


@dataclass
class ExtensionDescriptor:
    """``1 -> kernel -> G -> quotient -> 1``; a split flag requires a recorded section."""

    kernel: GroupPresentation
    quotient: GroupPresentation
    split: bool
    section: str | None = None
    section_image: GroupPresentation | None = None
    action: str = "unspecified"
    note: str = ""

    def __post_init__(self):
        if self.split and (self.section is None or self.section_image is None):
            raise FundGroupError("a split extension needs a recorded section")

    def check(self) -> bool:
        if not self.split:
            return True
        return abelianization(self.section_image).rank == abelianization(self.quotient).rank == self.quotient.rank

    def to_dict(self) -> dict:
        return {"kernel": self.kernel.to_dict(), "quotient": self.quotient.to_dict(), "split": self.split,
                "section": self.section, "section_image": self.section_image.to_dict() if self.section_image else None,
                "action": self.action, "note": self.note, "consistent": self.check(),
                "sequence": f"1 -> {self.kernel.name} -> G -> {self.quotient.name} -> 1"}


def open_surface_extension(surface: str) -> ExtensionDescriptor:
    """pi_1 of S1 or S2: fibration over P^1 minus four points with fiber an elliptic curve."""
    if surface == "S2":
        section, fiber = "[Q] -> [(0, Q)]", "E"
    elif surface == "S1":
        section, fiber = "[P] -> [(P, 0)]", "E'"
    else:
        raise FundGroupError(f"unknown surface {surface!r}")
    punctures = 4
    base = free_group(punctures - 1, "f", f"F_{punctures - 1}")
    return ExtensionDescriptor(
        kernel=free_abelian(2), quotient=base, split=True, section=section,
        section_image=free_group(punctures - 1, "s", f"F_{punctures - 1}"),
        note=(f"fiber {fiber} gives Z^2; base P^1 minus {punctures} points gives F_{punctures - 1}; "
              "the action of F_3 on Z^2 is not determined here"))


def _entry(name: str, G: GroupPresentation | None, status: str, **extra) -> dict:
    out = {"surface": name, "status": status}
    if G is not None:
        out["presentation"] = G.to_dict()
        out["abelianization"] = abelianization(G).to_dict()
    out.update(extra)
    return out


def _real_entries(label: str, sing: int, genus_shift: int, chi_offset: int, k_name: str,
                  k: int | None, chi: int | None) -> list[dict]:
    """Real surface and its resolution: pi_1(X(R)) = pi_1(N_{k-shift}) * F_sing, pi_1(X~(R)) = pi_1(N_k)."""
    resolved = f"{label}~(R)"
    if k is None:
        return [
            _entry(f"{label}(R)", None, "BUDGET", formula=f"pi1(N_{{{k_name}-{genus_shift}}}) * F_{sing}",
                   alternative_reading=f"pi1(N_{{{genus_shift}-{k_name}}}) * F_{sing}"),
            _entry(resolved, None, "BUDGET", formula=f"pi1(N_{{{k_name}}})"),
        ]
    entries = []
    Nk = surface_group_nonorientable(k) if k >= 1 else None
    entries.append(_entry(resolved, Nk, "PASS" if Nk else "INCONSISTENT", formula=f"pi1(N_{k})",
                          **{k_name: k, "chi_N_k": 2 - k}))
    idx, alt = k - genus_shift, genus_shift - k
    chi_chain = (2 - idx) - sing if idx >= 1 else None
    readings = []
    for reading, value in ((f"{k_name}-{genus_shift}", idx), (f"{genus_shift}-{k_name}", alt)):
        readings.append({"reading": reading, "index": value, "valid": value >= 1})
    if idx >= 1:
        G = free_product(surface_group_nonorientable(idx, "m"), free_group(sing, "c"))
        status = "PASS" if chi is None or chi_chain == chi else "INCONSISTENT"
    else:
        G, status = None, "INCONSISTENT"
    entries.append(_entry(f"{label}(R)", G, status, formula=f"pi1(N_{idx}) * F_{sing}", readings=readings,
                          chi=chi, chi_from_chain=chi_chain,
                          chi_relation=f"chi = (2 - ({k_name} - {genus_shift})) - {sing} = {chi_offset} - {k_name}"))
    return entries


DISCREPANCY_NOTE = ("Two readings of the real-surface index appear: pi1(N_{48-k}) * F_24 and N_{k-48} for the "
                    "cuboid surface (and N_{32-k'} versus N_{k'-32} for the face-cuboid surface). The report "
                    "implements k-48 and k'-32, which follow from the connected-sum derivation "
                    "(k = 48 + r, k' = 32 + r') and are the only readings giving valid surfaces when k > 48; "
                    "both readings are listed with their validity.")


def assemble_pi1_report(census: dict | None = None, euler: dict | None = None) -> dict:
    """Assemble the fundamental-group conclusions.

    ``census`` maps ``upsilon`` and ``V`` to dicts with ``complex`` and ``real``
    singular counts; ``euler`` maps them to dicts with ``k`` (resp. ``k'``),
    ``chi`` and ``status``.  Missing Euler data gives BUDGET entries.
    """
    if census is None:
        raise MissingInput("the pi_1 report needs the singular census")
    for key in ("upsilon", "V"):
        if key not in census:
            raise MissingInput(f"census entry {key!r} missing")
    euler = euler or {}
    up, v = census["upsilon"], census["V"]
    eu, ev = euler.get("upsilon", {}), euler.get("V", {})
    complex_entries = [_entry(name, trivial_group(), "PASS", H1=str(abelianization(trivial_group())))
                       for name in ("Upsilon(C)", "Upsilon~(C)", "V(C)", "V~(C)")]
    notes = [DISCREPANCY_NOTE]
    sing_up, sing_v = 24, 16
    if up.get("real") != sing_up:
        notes.append(f"computed real singular count for Upsilon is {up.get('real')}, formulas use {sing_up}")
    if v.get("real") != sing_v:
        notes.append(f"computed real singular count for V is {v.get('real')}; the formulas for V use {sing_v} "
                     f"(the complex count is {v.get('complex')}); entries below keep {sing_v}")
    real_entries = (_real_entries("Upsilon", sing_up, 2 * sing_up, 2 + sing_up, "k", eu.get("k"), eu.get("chi"))
                    + _real_entries("V", sing_v, 2 * sing_v, 2 + sing_v, "k'", ev.get("k"), ev.get("chi")))
    ext = {s: open_surface_extension(s).to_dict() for s in ("S1", "S2")}
    return {
        "complex": complex_entries,
        "real": real_entries,
        "open_surfaces": ext,
        "census": {"upsilon": dict(up), "V": dict(v)},
        "euler_status": {"upsilon": eu.get("status", "missing"), "V": ev.get("status", "missing")},
        "notes": notes,
    }


def nk_abelianization_table(ks: Sequence[int] = range(2, 11)) -> list[dict]:
    rows = []
    for k in ks:
        ab = abelianization(surface_group_nonorientable(k))
        rows.append({"k": k, "abelianization": str(ab),
                     "ok": ab.rank == k - 1 and ab.torsion == (2,)})
    return rows


__all__ = [
    "AbelianGroup", "DISCREPANCY_NOTE", "ExtensionDescriptor", "FundGroupError", "GroupPresentation",
    "InvalidRank", "MissingInput", "UnknownGenerator", "abelianization", "assemble_pi1_report", "determinant",
    "diagonal", "free_abelian", "free_group", "free_product", "free_reduce", "invert", "matmul",
    "nk_abelianization_table", "open_surface_extension", "smith_normal_form", "surface_group_nonorientable",
    "trivial_group",
]
