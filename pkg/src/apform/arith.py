"""Exact integer primitives: gcd, Kronecker symbol, sieving, primality,
factorization and fundamental-discriminant decomposition.

Everything here works on arbitrary-precision Python integers; the sieve is
the only routine with a memory budget.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import gcd, isqrt
from math import prod as _prod

from .errors import BudgetExceeded, FactorizationIncomplete

__all__ = [
    "gcd",
    "kronecker",
    "sieve_primes",
    "is_prime",
    "factorize",
    "fundamental_discriminant",
    "euler_phi",
    "FactoredInteger",
    "DiscriminantDecomposition",
    "is_fundamental_discriminant",
]

DEFAULT_SIEVE_LIMIT = 100_000_000
TRIAL_DIVISION_BOUND = 1_000_000


@dataclass(frozen=True)
class FactoredInteger:
    """Signed factorization: sign * prod(p**e), primes strictly increasing."""

    sign: int
    factors: tuple[tuple[int, int], ...]

    def value(self) -> int:
        return self.sign * _prod(p**e for p, e in self.factors)


@dataclass(frozen=True)
class DiscriminantDecomposition:
    """d = f**2 * Delta with Delta a fundamental discriminant."""

    d: int
    Delta: int
    f: int


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a/n), totally extended.

    Conventions: (a/0) = 1 iff a = +-1 else 0; (a/-1) = -1 iff a < 0;
    (a/2) = 0 for even a, +1 for a = +-1 mod 8, -1 for a = +-3 mod 8.
    """
    if n == 0:
        return 1 if a in (1, -1) else 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -1
    # strip the 2-part of n
    twos = 0
    while n % 2 == 0:
        n //= 2
        twos += 1
    if twos:
        if a % 2 == 0:
            return 0
        if twos % 2 == 1 and a % 8 in (3, 5):
            result = -result
    a %= n
    # Jacobi loop on the odd part, using quadratic reciprocity
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def sieve_primes(X: int, *, limit: int = DEFAULT_SIEVE_LIMIT) -> list[int]:
    """All primes <= X, ascending (simple bytearray sieve)."""
    if X < 1:
        raise ValueError(f"sieve bound must be >= 1, got {X}")
    if X > limit:
        raise BudgetExceeded(f"sieve bound {X} exceeds budget {limit}")
    if X < 2:
        return []
    sieve = bytearray([1]) * (X + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, isqrt(X) + 1):
        if sieve[p]:
            start = p * p
            sieve[start :: p] = bytearray(len(range(start, X + 1, p)))
    return [i for i, flag in enumerate(sieve) if flag]


# Deterministic Miller-Rabin witness sets, valid up to the stated bounds
# (Sinclair / Feitsma-style tables).
_MR_BOUNDED_BASES: tuple[tuple[int, tuple[int, ...]], ...] = (
    (341_531, (9345883071009581737,)),
    (1_050_535_501, (336781006125, 9639812373923155)),
    (350_269_456_337, (4230279247111683200, 14694767155120705706, 16641139526367750375)),
    (55_245_642_489_451, (2, 141889084524735, 1199124725622454117, 11096072698276303650)),
    (7_999_252_175_582_851, (2, 4130806001517, 149795463772692060, 186635894390467037, 3967304179347715805)),
    (585_226_005_592_931_977, (2, 123635709730000, 9233062284813009, 43835965440333360, 761179012939631437, 1263739024124850375)),
    (2**64, (2, 325, 9375, 28178, 450775, 9780504, 1795265022)),
    (318_665_857_834_031_151_167_461, (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)),
    (3_317_044_064_679_887_385_961_981, (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)),
)


def _mr_witness(a: int, d: int, s: int, n: int) -> bool:
    """True when a proves n composite."""
    a %= n
    if a <= 1:
        return False
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def is_prime(n: int) -> bool:
    """Exact primality test.

    Deterministic Miller-Rabin below ~3.3e24; above that, composites are
    rejected by randomized rounds and survivors are confirmed by trial
    division (exact but slow for huge inputs).
    """
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for bound, bases in _MR_BOUNDED_BASES:
        if n < bound:
            return not any(_mr_witness(a, d, s, n) for a in bases)
    rng = random.Random(n)
    if any(_mr_witness(rng.randrange(2, n - 1), d, s, n) for _ in range(64)):
        return False
    f = 41
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _brent_rho(n: int, rng: random.Random, max_iterations: int) -> int | None:
    """One Brent-cycle attempt; returns a nontrivial factor of composite n."""
    if n % 2 == 0:
        return 2
    y = rng.randrange(1, n)
    c = rng.randrange(1, n)
    m = 128
    g = r = q = 1
    iterations = 0
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = gcd(q, n)
            k += m
            iterations += m
            if iterations > max_iterations:
                return None
        r *= 2
    if g == n:
        # backtrack to the first colliding iterate
        g = 1
        while g == 1:
            ys = (ys * ys + c) % n
            g = gcd(abs(x - ys), n)
    return g if g != n else None


def factorize(
    n: int,
    *,
    trial_bound: int = TRIAL_DIVISION_BOUND,
    rho_iterations: int = 500_000,
    rho_attempts: int = 20,
    seed: int = 1,
) -> FactoredInteger:
    """Complete prime factorization of a nonzero integer.

    Trial division up to trial_bound (stopping early once p*p exceeds the
    cofactor), then Brent's rho with an explicit seed. Exhausting both
    budgets raises FactorizationIncomplete carrying the unfactored cofactor.
    """
    if n == 0:
        raise ValueError("cannot factor 0")
    sign = -1 if n < 0 else 1
    m = abs(n)
    found: dict[int, int] = {}

    def _divide_out(p: int) -> None:
        nonlocal m
        while m % p == 0:
            found[p] = found.get(p, 0) + 1
            m //= p

    if m % 2 == 0:
        _divide_out(2)
    f = 3
    while f <= trial_bound and f * f <= m:
        if m % f == 0:
            _divide_out(f)
        f += 2

    if m > 1 and f * f > m:
        _divide_out(m)

    if m > 1:
        rng = random.Random(seed)
        pending = [m]
        m = 1
        while pending:
            comp = pending.pop()
            if is_prime(comp):
                found[comp] = found.get(comp, 0) + 1
                continue
            factor = None
            for _ in range(rho_attempts):
                factor = _brent_rho(comp, rng, rho_iterations)
                if factor is not None and 1 < factor < comp:
                    break
                factor = None
            if factor is None:
                partial = sorted(found.items())
                raise FactorizationIncomplete(n, comp, partial)
            pending.append(factor)
            pending.append(comp // factor)

    return FactoredInteger(sign, tuple(sorted(found.items())))


def euler_phi(n: int) -> int:
    """Euler totient of |n|."""
    n = abs(n)
    if n == 0:
        raise ValueError("totient of 0 is undefined")
    result = 1
    for p, e in factorize(n).factors:
        result *= (p - 1) * p ** (e - 1)
    return result


def is_fundamental_discriminant(Delta: int) -> bool:
    """Delta = 1 mod 4 squarefree, or Delta = 4m with m squarefree, m = 2,3 mod 4."""
    if Delta == 0 or Delta == 1:
        return False

    def squarefree(x: int) -> bool:
        return all(e == 1 for _, e in factorize(x).factors)

    if Delta % 4 == 1:
        return squarefree(Delta)
    if Delta % 4 == 0:
        m = Delta // 4
        return m % 4 in (2, 3) and squarefree(m)
    return False


def fundamental_discriminant(d: int) -> DiscriminantDecomposition:
    """Unique decomposition d = f**2 * Delta with Delta fundamental.

    Requires d nonzero, d = 0 or 1 mod 4, and d not a perfect square.
    """
    if d == 0:
        raise ValueError("discriminant must be nonzero")
    if d % 4 in (2, 3):
        raise ValueError(f"{d} is not a discriminant (must be 0 or 1 mod 4)")
    if d > 0 and isqrt(d) ** 2 == d:
        raise ValueError(f"{d} is a perfect square")
    core = 1 if d > 0 else -1
    for p, e in factorize(d).factors:
        if e % 2 == 1:
            core *= p
    Delta = core if core % 4 == 1 else 4 * core
    f = isqrt(d // Delta)
    assert f * f * Delta == d
    return DiscriminantDecomposition(d=d, Delta=Delta, f=f)
