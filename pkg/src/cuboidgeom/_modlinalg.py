"""Dense linear algebra over F_p on lists of ints."""

from __future__ import annotations


def rref(mat: list[list[int]], p: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form and pivot columns."""
    a = [[x % p for x in row] for row in mat]
    rows = len(a)
    cols = len(a[0]) if a else 0
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][c], -1, p)
        a[r] = [x * inv % p for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return a[:r], pivots


def rank(mat: list[list[int]], p: int) -> int:
    if not mat or not mat[0]:
        return 0
    return len(rref(mat, p)[1])


def kernel(mat: list[list[int]], p: int, ncols: int | None = None) -> list[list[int]]:
    """Basis of the right kernel ``{v : mat v = 0}``."""
    cols = ncols if ncols is not None else (len(mat[0]) if mat else 0)
    if not mat:
        return [[int(i == j) for i in range(cols)] for j in range(cols)]
    red, pivots = rref(mat, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * cols
        v[f] = 1
        for row, pc in zip(red, pivots):
            v[pc] = (-row[f]) % p
        basis.append(v)
    return basis


def transpose(mat: list[list[int]]) -> list[list[int]]:
    return [list(col) for col in zip(*mat)]


def left_kernel(mat: list[list[int]], p: int) -> list[list[int]]:
    """Basis of ``{w : w mat = 0}``."""
    return kernel(transpose(mat), p, ncols=len(mat))
