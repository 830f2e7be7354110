"""Column-style Hermite normal form and the small exact-matrix helpers the
lattice code needs (Fraction inverses, determinants, triangular solves).

Bases are stored column-major: ``cols[j]`` is the j-th basis vector, so the
matrix entry (i, j) is ``cols[j][i]``. The canonical HNF is upper triangular
with positive diagonal and, for j > i, 0 <= H[i][j] < H[i][i].
"""

from __future__ import annotations

from fractions import Fraction

from .errors import RankDeficientError

IntCols = list[list[int]]


def hnf_columns(generators: list[list[int]]) -> IntCols:
    """Canonical column HNF of the lattice spanned by integer generators.

    The generators must span a full-rank lattice in Z^n; raises
    RankDeficientError otherwise.
    """
    if not generators:
        raise RankDeficientError("empty generator set")
    n = len(generators[0])
    if any(len(g) != n for g in generators):
        raise ValueError("generators have inconsistent dimensions")
    pending = [list(g) for g in generators if any(g)]
    basis: IntCols = []
    for i in range(n):
        live = [g for g in pending if g[i] != 0]
        rest = [g for g in pending if g[i] == 0]
        if not live:
            raise RankDeficientError(f"no pivot for coordinate {i}")
        # Euclid on the row-i entries until a single column survives
        while len(live) > 1:
            live.sort(key=lambda g: abs(g[i]))
            u = live[0]
            survivors = [u]
            for g in live[1:]:
                q = g[i] // u[i]
                if q:
                    for t in range(i, n):
                        g[t] -= q * u[t]
                if g[i] != 0:
                    survivors.append(g)
                else:
                    rest.append(g)
            live = survivors
        pivot = live[0]
        if pivot[i] < 0:
            pivot = [-t for t in pivot]
        basis.append(pivot)
        pending = rest
    # reduce off-diagonal entries: for i < j force 0 <= H[i][j] < H[i][i]
    for i in range(n - 1, -1, -1):
        di = basis[i][i]
        for j in range(i + 1, n):
            q = basis[j][i] // di
            if q:
                for t in range(i + 1):
                    basis[j][t] -= q * basis[i][t]
    return basis


def det_triangular(cols: IntCols) -> int:
    result = 1
    for j, col in enumerate(cols):
        result *= col[j]
    return result


def triangular_solve(cols: IntCols, vec: list[int]) -> list[int] | None:
    """Integer coordinates t with sum_j t[j] * cols[j] = vec, or None."""
    n = len(cols)
    residue = list(vec)
    coords = [0] * n
    for i in range(n - 1, -1, -1):
        d = cols[i][i]
        if residue[i] % d != 0:
            return None
        t = residue[i] // d
        coords[i] = t
        if t:
            for r in range(i + 1):
                residue[r] -= t * cols[i][r]
    if any(residue):
        return None
    return coords


def frac_matrix_inverse(cols: list[list[Fraction]]) -> list[list[Fraction]]:
    """Inverse of a square column-major Fraction matrix (Gauss-Jordan)."""
    n = len(cols)
    # work row-major on [A | I]
    aug = [[Fraction(cols[j][i]) for j in range(n)] for i in range(n)]
    for i in range(n):
        aug[i].extend(Fraction(1) if k == i else Fraction(0) for k in range(n))
    for col in range(n):
        pivot_row = next(
            (r for r in range(col, n) if aug[r][col] != 0), None
        )
        if pivot_row is None:
            raise RankDeficientError("matrix is singular")
        aug[col], aug[pivot_row] = aug[pivot_row], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    # return column-major inverse
    return [[aug[i][n + j] for i in range(n)] for j in range(n)]


def frac_matvec(cols: list[list[Fraction]], vec: list[Fraction]) -> list[Fraction]:
    """Matrix-vector product for a column-major matrix."""
    n = len(cols[0])
    out = [Fraction(0)] * n
    for x, col in zip(vec, cols):
        if x:
            for i in range(n):
                out[i] += x * col[i]
    return out


def frac_det(cols: list[list[Fraction]]) -> Fraction:
    """Determinant of a square column-major Fraction matrix."""
    n = len(cols)
    rows = [[Fraction(cols[j][i]) for j in range(n)] for i in range(n)]
    det = Fraction(1)
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != col:
            rows[col], rows[pivot_row] = rows[pivot_row], rows[col]
            det = -det
        det *= rows[col][col]
        inv = Fraction(1) / rows[col][col]
        for r in range(col + 1, n):
            if rows[r][col]:
                factor = rows[r][col] * inv
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[col])]
    return det
