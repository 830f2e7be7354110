"""Minimal sparse multivariate polynomials with Fraction coefficients.

A polynomial is a dict mapping exponent tuples to nonzero Fractions; the
handful of operations below (add, multiply, evaluate) is all the symbolic
determinant expansion needs.
"""

from __future__ import annotations

from fractions import Fraction

Term = tuple[int, ...]
Poly = dict[Term, Fraction]


def zero() -> Poly:
    return {}


def constant(nvars: int, value: Fraction) -> Poly:
    if value == 0:
        return {}
    return {(0,) * nvars: Fraction(value)}


def variable(nvars: int, index: int, coeff: Fraction = Fraction(1)) -> Poly:
    exps = [0] * nvars
    exps[index] = 1
    return {tuple(exps): Fraction(coeff)} if coeff else {}


def add(p: Poly, q: Poly) -> Poly:
    out = dict(p)
    for exps, c in q.items():
        s = out.get(exps, Fraction(0)) + c
        if s:
            out[exps] = s
        else:
            out.pop(exps, None)
    return out


def scale(p: Poly, c: Fraction) -> Poly:
    if c == 0:
        return {}
    return {exps: coeff * c for exps, coeff in p.items()}


def mul(p: Poly, q: Poly) -> Poly:
    out: Poly = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            exps = tuple(a + b for a, b in zip(e1, e2))
            s = out.get(exps, Fraction(0)) + c1 * c2
            if s:
                out[exps] = s
            else:
                out.pop(exps, None)
    return out


def evaluate(p: Poly, point: list) -> Fraction:
    total = Fraction(0)
    for exps, c in p.items():
        term = c
        for x, e in zip(point, exps):
            if e:
                term *= Fraction(x) ** e
        total += term
    return total


def det_linear_entries(matrix: list[list[Poly]], nvars: int) -> Poly:
    """Determinant of a square matrix of polynomials in nvars variables.

    Laplace expansion along the first remaining row, memoized on the column
    subset; fine for the n <= 5 sizes used here.
    """
    n = len(matrix)
    full_mask = (1 << n) - 1
    cache: dict[int, Poly] = {}

    def minor(col_mask: int) -> Poly:
        if col_mask == 0:
            return constant(nvars, Fraction(1))
        if col_mask in cache:
            return cache[col_mask]
        row = n - bin(col_mask).count("1")
        result: Poly = {}
        sign = 1
        for j in range(n):
            if not col_mask & (1 << j):
                continue
            entry = matrix[row][j]
            if entry:
                sub = minor(col_mask & ~(1 << j))
                contrib = mul(entry, sub)
                result = add(result, contrib if sign > 0 else scale(contrib, Fraction(-1)))
            sign = -sign
        cache[col_mask] = result
        return result

    return minor(full_mask)
