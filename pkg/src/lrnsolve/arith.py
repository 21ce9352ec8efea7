"""Exact integer utilities: roots, primality, factorization.

Everything here works on Python ints and never touches floating point.
"""

from __future__ import annotations

import math
import random
from functools import lru_cache

import sympy

Factorization = list[tuple[int, int]]

TRIAL_LIMIT = 10**6
# Miller-Rabin with the first 13 prime bases is deterministic below this bound.
_MR_DETERMINISTIC_BOUND = 3317044064679887385961981
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


class PrimalityUnproven(ArithmeticError):
    """A probable prime above the deterministic range could not be certified."""


def gcd(a: int, b: int) -> int:
    return math.gcd(a, b)


def isqrt(n: int) -> int:
    if n < 0:
        raise ValueError(f"isqrt of negative number {n}")
    return math.isqrt(n)


def iroot(n: int, e: int) -> int:
    """Floor of the e-th root of n >= 0."""
    if n < 0:
        raise ValueError(f"iroot of negative number {n}")
    if e < 1:
        raise ValueError(f"root index must be >= 1, got {e}")
    if e == 1 or n < 2:
        return n
    if e == 2:
        return math.isqrt(n)
    # Newton iteration from an over-estimate; monotone decreasing to the floor.
    r = 1 << -(-n.bit_length() // e)
    while True:
        s = ((e - 1) * r + n // r ** (e - 1)) // e
        if s >= r:
            return r
        r = s


def perfect_root(n: int, e: int) -> int | None:
    """Return r with r**e == n, or None."""
    if n < 0 or e < 1:
        raise ValueError("perfect_root needs n >= 0 and e >= 1")
    r = iroot(n, e)
    return r if r**e == n else None


def is_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


@lru_cache(maxsize=1)
def _small_primes() -> tuple[int, ...]:
    limit = TRIAL_LIMIT
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytes(len(range(p * p, limit + 1, p)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


def _strong_probable_prime(n: int, base: int) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(base, d, n)
    if x in (1, n - 1):
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def _pocklington(n: int) -> bool:
    # n - 1 fully factored; one witness per prime factor proves n prime.
    factors = [p for p, _ in factorize(n - 1)]
    for q in factors:
        for a in range(2, 10_000):
            if pow(a, n - 1, n) != 1:
                return False
            if math.gcd(pow(a, (n - 1) // q, n) - 1, n) == 1:
                break
        else:
            raise PrimalityUnproven(f"no Pocklington witness found for {n}")
    return True


def is_prime(n: int) -> bool:
    """Deterministic primality.

    Below ~3.3e24 a fixed-base Miller-Rabin run is a proof. Above it, a
    strong-pseudoprime screen is followed by a Pocklington certificate built
    from the factorization of n - 1; failure to certify raises
    PrimalityUnproven instead of guessing.
    """
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    if n < _MR_BASES[-1] ** 2:
        return True
    if n < _MR_DETERMINISTIC_BOUND:
        return all(_strong_probable_prime(n, a) for a in _MR_BASES)
    if not all(_strong_probable_prime(n, a) for a in _MR_BASES):
        return False
    return _pocklington(n)


def _brent_rho(n: int, rng: random.Random, max_iter: int) -> int | None:
    """Return a non-trivial factor of odd composite n, or None past max_iter."""
    for _ in range(8):
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        x = ys = y
        steps = 0
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
                g = math.gcd(q, n)
                k += m
            r *= 2
            steps += r
            if steps > max_iter:
                return None
        if g == n:
            while True:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
                if g > 1:
                    break
        if g != n:
            return g
    return None


def _split(n: int, rng: random.Random, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    r = math.isqrt(n)
    if r * r == n:
        _split(r, rng, out)
        _split(r, rng, out)
        return
    f = _brent_rho(n, rng, max_iter=200_000)
    if f is None:
        # rho stalls on cofactors with two large primes; sympy brings p-1 and ECM.
        for p, e in sympy.factorint(n).items():
            for _ in range(e):
                _split(int(p), rng, out)
        return
    _split(f, rng, out)
    _split(n // f, rng, out)


def factorize(n: int) -> Factorization:
    """Prime factorization as increasing (prime, exponent) pairs."""
    if n < 1:
        raise ValueError(f"factorize needs n >= 1, got {n}")
    out: dict[int, int] = {}
    for p in _small_primes():
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out[p] = e
    if n > 1:
        _split(n, random.Random(n), out)
    return sorted(out.items())


def divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def is_squarefree(n: int) -> bool:
    if n < 1:
        raise ValueError(f"is_squarefree needs n >= 1, got {n}")
    return all(e == 1 for _, e in factorize(n))


def largest_prime_factor(n: int) -> int:
    """Largest prime dividing n; 1 for n == 1."""
    f = factorize(n)
    return f[-1][0] if f else 1


def two_three_split(n: int) -> tuple[int, int, int]:
    """Write n = 2**r * 3**s * w with gcd(w, 6) == 1."""
    if n < 1:
        raise ValueError(f"two_three_split needs n >= 1, got {n}")
    r = s = 0
    while n % 2 == 0:
        n //= 2
        r += 1
    while n % 3 == 0:
        n //= 3
        s += 1
    return r, s, n


def is_power_of_two(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0
