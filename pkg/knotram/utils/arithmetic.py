"""Small-integer arithmetic used to enumerate surgery coefficients: sieving,
divisors, the Möbius function and Euler's totient. Every routine here acts
on integers small enough for trial division by a sieved prime list."""

from functools import lru_cache

import gmpy2
import numpy as np


@lru_cache(maxsize=8)
def primes_up_to(n):
    """All primes ``p <= n`` by the sieve of Eratosthenes.

    Parameters
    ----------
    n : int

    Returns
    -------
    numpy.ndarray
        Sorted array of primes (``int64``).
    """

    if n < 2:
        return np.zeros(0, dtype=np.int64)
    sieve = np.ones(n + 1, dtype=bool)
    sieve[:2] = False
    sieve[4::2] = False
    for p in range(3, int(gmpy2.isqrt(n)) + 1, 2):
        if sieve[p]:
            sieve[p * p :: 2 * p] = False
    return np.flatnonzero(sieve).astype(np.int64)


@lru_cache(maxsize=4096)
def factor_small(n):
    """Factors a positive integer by trial division.

    Parameters
    ----------
    n : int
        Must be positive. Intended for surgery coefficients and chain points
        (anything up to roughly 10^12).

    Returns
    -------
    tuple of (int, int)
        Pairs ``(prime, multiplicity)`` in ascending order of prime.
    """

    if n < 1:
        raise ValueError(f"factor_small requires n >= 1, got {n}")
    factors = []
    m = int(n)
    for p in primes_up_to(max(int(gmpy2.isqrt(m)), 2)).tolist():
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
    if m > 1:
        factors.append((m, 1))
    return tuple(factors)


def divisors(n):
    """Sorted list of the positive divisors of ``n``."""

    divs = [1]
    for p, e in factor_small(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def mobius(n):
    factors = factor_small(n)
    if any(e > 1 for _, e in factors):
        return 0
    return -1 if len(factors) % 2 else 1


def totient(n):
    result = n
    for p, _ in factor_small(n):
        result = result // p * (p - 1)
    return result


def is_prime_power(n):
    """True if ``n`` is a power ``p^k`` (k >= 1) of a single prime."""

    return n > 1 and len(factor_small(n)) == 1
