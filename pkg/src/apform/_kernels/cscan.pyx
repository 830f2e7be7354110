# distutils: language = c++
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled scan kernels: tight-loop versions of the routines in pyscan.py.

Witness order is lexicographic, matching the fallback exactly. The threads
argument is accepted for interface parity but the compiled scans run
single-threaded (the C loops are fast enough that splitting has not been
worth the complexity).
"""

from libc.stdint cimport int64_t
from libcpp.set cimport set as cpp_set
from libcpp.vector cimport vector

BACKEND = "cython"


def scan_qf(long long a, long long b, long long c,
            long long pm, long long t1, long long side, int threads=1):
    """First (x, y) in lex order over [0, side)^2 with
    a*x^2+b*x*y+c*y^2 = 0 mod t1 but != 0 mod pm, or None."""
    cdef long long x, y, ax2, bx, v
    cdef vector[long long] cy2
    cy2.resize(side)
    for y in range(side):
        cy2[y] = c * y % pm * y % pm
    for x in range(side):
        ax2 = a * x % pm * x % pm
        bx = b * x % pm
        for y in range(side):
            v = (ax2 + bx * y + cy2[y]) % pm
            if v % t1 == 0 and v != 0:
                return (x, y)
    return None


def scan_poly(coeffs, exps, long long side, long long pm, long long t1,
              int threads=1):
    """First x in lex order over [0, side)^n with the sparse polynomial
    = 0 mod t1 but != 0 mod pm, or None."""
    cdef int n = len(exps[0])
    cdef int nterms = len(coeffs)
    cdef vector[long long] co
    cdef vector[int] ee
    cdef int t, i, k, d
    for t in range(nterms):
        co.push_back(coeffs[t])
        for i in range(n):
            ee.push_back(exps[t][i])
    cdef vector[long long] x
    x.resize(n)
    for i in range(n):
        x[i] = 0
    cdef long long v, term
    while True:
        v = 0
        for t in range(nterms):
            term = co[t]
            for i in range(n):
                d = ee[t * n + i]
                for k in range(d):
                    term = term * x[i] % pm
            v += term
        v %= pm
        if v % t1 == 0 and v != 0:
            return tuple(x[i] for i in range(n))
        i = n - 1
        while i >= 0:
            x[i] += 1
            if x[i] < side:
                break
            x[i] = 0
            i -= 1
        if i < 0:
            break
    return None


def box_values(coeffs, exps, long long box, long long vmax, int threads=1):
    """Sorted distinct values v of the integer polynomial over the cube
    [-box, box]^n with |v| <= vmax (exact int64 evaluation)."""
    cdef int n = len(exps[0])
    cdef int nterms = len(coeffs)
    cdef vector[long long] co
    cdef vector[int] ee
    cdef int t, i, k, d
    for t in range(nterms):
        co.push_back(coeffs[t])
        for i in range(n):
            ee.push_back(exps[t][i])
    cdef vector[long long] x
    x.resize(n)
    for i in range(n):
        x[i] = -box
    cdef cpp_set[long long] seen
    cdef long long v, term
    while True:
        v = 0
        for t in range(nterms):
            term = co[t]
            for i in range(n):
                d = ee[t * n + i]
                for k in range(d):
                    term = term * x[i]
            v += term
        if -vmax <= v <= vmax:
            seen.insert(v)
        i = n - 1
        while i >= 0:
            x[i] += 1
            if x[i] <= box:
                break
            x[i] = -box
            i -= 1
        if i < 0:
            break
    return [v for v in seen]
