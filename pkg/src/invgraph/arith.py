"""Small number-theory helpers shared across modules."""

from __future__ import annotations

from functools import lru_cache
from math import gcd, isqrt


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple[int, ...]:
    """All positive divisors of n, ascending."""
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return tuple(small + large[::-1])


def proper_block_sizes(n: int) -> tuple[int, ...]:
    """Divisors m of n with 1 < m < n (candidate block sizes)."""
    return tuple(m for m in divisors(n) if 1 < m < n)


@lru_cache(maxsize=None)
def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def primes(limit: int):
    """Primes up to limit inclusive (simple sieve)."""
    if limit < 2:
        return
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    for p in range(2, limit + 1):
        if sieve[p]:
            yield p


@lru_cache(maxsize=None)
def prime_power(n: int) -> tuple[int, int] | None:
    """Return (p, k) with n = p**k and p prime, or None."""
    if n < 2:
        return None
    p = n
    for q in range(2, isqrt(n) + 1):
        if n % q == 0:
            p = q
            break
    k = 0
    m = n
    while m % p == 0:
        m //= p
        k += 1
    return (p, k) if m == 1 else None


def smallest_prime_factor(n: int) -> int:
    if n < 2:
        raise ValueError("need n >= 2")
    for q in range(2, isqrt(n) + 1):
        if n % q == 0:
            return q
    return n


def smallest_prime_in(lo: int, hi: int) -> int | None:
    """Smallest prime q with lo < q < hi, or None."""
    for q in range(lo + 1, hi):
        if is_prime(q):
            return q
    return None


def primitive_root(p: int) -> int:
    """A generator of the multiplicative group mod p (p prime)."""
    if p == 2:
        return 1
    factors = set()
    m = p - 1
    d = 2
    while d * d <= m:
        while m % d == 0:
            factors.add(d)
            m //= d
        d += 1
    if m > 1:
        factors.add(m)
    for g in range(2, p):
        if all(pow(g, (p - 1) // f, p) != 1 for f in factors):
            return g
    raise ArithmeticError(f"no primitive root mod {p}")


def lcm_of(values) -> int:
    out = 1
    for v in values:
        out = out * v // gcd(out, v)
    return out
