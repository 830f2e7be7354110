"""NumPy fallback implementations of the scan kernels.

Same contracts as the compiled backend in cscan.pyx: witnesses are reported
in lexicographic coordinate order, so both backends return identical
results. Callers guarantee that all intermediate products fit in int64
(moduli and boxes are capped by the scan budgets before we get here).

When threads > 1 the first coordinate's range is split into contiguous
blocks scanned concurrently; the merged result (lex-min witness, or the
union of collected values) is independent of scheduling.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from itertools import product

import numpy as np

BACKEND = "python"

_ROW_CHUNK = 512


def _blocks(lo: int, hi: int, threads: int) -> list[tuple[int, int]]:
    span = hi - lo
    threads = max(1, min(threads, span))
    step = (span + threads - 1) // threads
    return [(s, min(s + step, hi)) for s in range(lo, hi, step)]


def _run_blocks(worker, lo, hi, threads):
    if threads <= 1 or hi - lo < 2:
        return [worker((lo, hi))]
    blocks = _blocks(lo, hi, threads)
    with ThreadPoolExecutor(len(blocks)) as pool:
        return list(pool.map(worker, blocks))


def _mod_pows(values: np.ndarray, maxdeg: int, pm: int) -> list[np.ndarray]:
    pows = [np.ones(len(values), dtype=np.int64)]
    for _ in range(maxdeg):
        pows.append(pows[-1] * values % pm)
    return pows


def _scan_qf_block(a, b, c, pm, t1, side, block):
    lo, hi = block
    y = np.arange(side, dtype=np.int64)
    cy2 = (c * (y * y % pm)) % pm
    by = (b * y) % pm
    for start in range(lo, hi, _ROW_CHUNK):
        stop = min(start + _ROW_CHUNK, hi)
        x = np.arange(start, stop, dtype=np.int64)[:, None]
        ax2 = (a * (x * x % pm)) % pm
        v = (ax2 + x * by[None, :] + cy2[None, :]) % pm
        mask = (v % t1 == 0) & (v != 0)
        if mask.any():
            flat = int(np.argmax(mask))
            return (start + flat // side, flat % side)
    return None


def scan_qf(a, b, c, pm, t1, side, threads=1):
    """First (x, y) in lex order over [0, side)^2 with
    a*x^2+b*x*y+c*y^2 = 0 mod t1 but != 0 mod pm, or None."""
    results = _run_blocks(
        lambda blk: _scan_qf_block(a, b, c, pm, t1, side, blk), 0, side, threads
    )
    found = [r for r in results if r is not None]
    return min(found) if found else None


def _scan_poly_block(coeffs, exps, side, pm, t1, block):
    lo, hi = block
    n = len(exps[0])
    maxdeg = max(max(e) for e in exps)

    if n == 2:
        w_pows = [p[None, :] for p in _mod_pows(np.arange(side, dtype=np.int64), maxdeg, pm)]
        u = np.arange(lo, hi, dtype=np.int64)
        u_pows = [p[:, None] for p in _mod_pows(u, maxdeg, pm)]
        v = np.zeros((hi - lo, side), dtype=np.int64)
        for coeff, e in zip(coeffs, exps):
            v += coeff * u_pows[e[0]] % pm * w_pows[e[1]] % pm
            v %= pm
        mask = (v % t1 == 0) & (v != 0)
        if mask.any():
            flat = int(np.argmax(mask))
            return (lo + flat // side, flat % side)
        return None

    grid = _mod_pows(np.arange(side, dtype=np.int64), maxdeg, pm)
    u_pows = [p[:, None] for p in grid]
    w_pows = [p[None, :] for p in grid]
    for head in range(lo, hi):
        for rest in product(range(side), repeat=n - 3):
            prefix = (head, *rest)
            v = np.zeros((side, side), dtype=np.int64)
            for coeff, e in zip(coeffs, exps):
                scalar = coeff
                for xval, deg in zip(prefix, e[: n - 2]):
                    if deg:
                        scalar = scalar * pow(xval, deg, pm) % pm
                if scalar:
                    v += scalar * u_pows[e[n - 2]] % pm * w_pows[e[n - 1]] % pm
                    v %= pm
            mask = (v % t1 == 0) & (v != 0)
            if mask.any():
                flat = int(np.argmax(mask))
                return prefix + (flat // side, flat % side)
    return None


def scan_poly(coeffs, exps, side, pm, t1, threads=1):
    """First x in lex order over [0, side)^n with the sparse polynomial
    = 0 mod t1 but != 0 mod pm, or None."""
    results = _run_blocks(
        lambda blk: _scan_poly_block(coeffs, exps, side, pm, t1, blk),
        0,
        side,
        threads,
    )
    found = [r for r in results if r is not None]
    return min(found) if found else None


def _box_values_block(coeffs, exps, box, vmax, block):
    lo, hi = block
    n = len(exps[0])
    maxdeg = max(max(e) for e in exps)
    side = 2 * box + 1
    vals = np.arange(-box, box + 1, dtype=np.int64)
    pows = [np.ones(side, dtype=np.int64)]
    for _ in range(maxdeg):
        pows.append(pows[-1] * vals)
    w_pows = [p[None, :] for p in pows]

    collected = np.empty(0, dtype=np.int64)
    if n == 2:
        u = vals[lo:hi]
        u_pows = [np.ones(hi - lo, dtype=np.int64)[:, None]]
        for _ in range(maxdeg):
            u_pows.append(u_pows[-1] * u[:, None])
        v = np.zeros((hi - lo, side), dtype=np.int64)
        for coeff, e in zip(coeffs, exps):
            v += coeff * u_pows[e[0]] * w_pows[e[1]]
        hits = v[np.abs(v) <= vmax]
        return np.unique(hits) if hits.size else collected

    u_pows = [p[:, None] for p in pows]
    for head_index in range(lo, hi):
        head = head_index - box
        for rest in product(range(-box, box + 1), repeat=n - 3):
            prefix = (head, *rest)
            v = np.zeros((side, side), dtype=np.int64)
            for coeff, e in zip(coeffs, exps):
                scalar = coeff
                for xval, deg in zip(prefix, e[: n - 2]):
                    scalar *= xval**deg
                if scalar:
                    v += scalar * u_pows[e[n - 2]] * w_pows[e[n - 1]]
            hits = v[np.abs(v) <= vmax]
            if hits.size:
                collected = np.union1d(collected, np.unique(hits))
    return collected


def box_values(coeffs, exps, box, vmax, threads=1):
    """Sorted distinct values v of the integer polynomial over the cube
    [-box, box]^n with |v| <= vmax (exact int64 evaluation)."""
    side = 2 * box + 1
    results = _run_blocks(
        lambda blk: _box_values_block(coeffs, exps, box, vmax, blk),
        0,
        side,
        threads,
    )
    merged = results[0]
    for arr in results[1:]:
        merged = np.union1d(merged, arr)
    return [int(t) for t in merged]
