"""Digit-level integer helpers: base-b digits, Lucas binomials, Thue-Morse, blocks."""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import List

from .errors import InvalidBaseError, InvalidModulusError, ParameterError

__all__ = [
    "digits",
    "is_prime",
    "check_prime",
    "binomial_mod_p",
    "thue_morse",
    "block_count",
    "block_count_recursive",
    "epsilon",
    "prime_power_exponent",
    "prime_power_base",
    "primes_up_to",
]


def digits(n: int, b: int) -> List[int]:
    """Base-``b`` digits of ``n``, least significant first; ``digits(0, b) == []``."""
    if b < 2:
        raise InvalidBaseError(f"base must be >= 2, got {b}")
    if n < 0:
        raise ParameterError(f"digits() needs n >= 0, got {n}")
    out = []
    while n:
        n, d = divmod(n, b)
        out.append(d)
    return out


@lru_cache(maxsize=None)
def is_prime(p: int) -> bool:
    # trial division; every modulus in this package is tiny
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def check_prime(p: int) -> int:
    if not isinstance(p, int) or not is_prime(p):
        raise InvalidModulusError(f"{p!r} is not a prime")
    return p


@lru_cache(maxsize=None)
def _small_binomials(p: int):
    return [[comb(a, b) % p for b in range(p)] for a in range(p)]


def binomial_mod_p(n: int, k: int, p: int) -> int:
    """C(n, k) mod p by Lucas' theorem, one base-p digit pair at a time.

    ``k > n`` gives 0, as does any digit pair with a lower digit above the upper one.
    """
    check_prime(p)
    if n < 0 or k < 0:
        raise ParameterError("binomial_mod_p needs n, k >= 0")
    if k > n:
        return 0
    table = _small_binomials(p)
    r = 1
    while k:
        n, nd = divmod(n, p)
        k, kd = divmod(k, p)
        if kd > nd:
            return 0
        r = r * table[nd][kd] % p
    return r


def thue_morse(n: int) -> int:
    return bin(n).count("1") & 1


def block_count(n: int) -> int:
    """Number of maximal runs of ones in the binary expansion of ``n``."""
    if n < 0:
        raise ParameterError("block_count needs n >= 0")
    # a run starts at every 1 whose lower neighbour is 0
    return bin(n & ~(n << 1)).count("1")


def block_count_recursive(n: int) -> int:
    """Same value as :func:`block_count`, via b(2m) = b(m), b(2m+1) = b(m) + 1 - (m mod 2)."""
    if n < 0:
        raise ParameterError("block_count needs n >= 0")
    total = 0
    while n:
        m = n >> 1
        if n & 1:
            total += 1 - (m & 1)
        n = m
    return total


def epsilon(q: int) -> int:
    """Representative of ``q mod 3`` in {-1, 0, 1}."""
    r = q % 3
    return -1 if r == 2 else r


def prime_power_exponent(q: int, p: int) -> int:
    """Return ``l`` with ``q == p**l``, or raise :class:`ParameterError`."""
    check_prime(p)
    if q < 1:
        raise ParameterError(f"{q} is not a power of {p}")
    l = 0
    while q % p == 0:
        q //= p
        l += 1
    if q != 1:
        raise ParameterError(f"not a power of {p}")
    return l


def prime_power_base(q: int):
    """``(p, l)`` with ``q == p**l``, l >= 1; raises :class:`ParameterError` otherwise."""
    if q < 2:
        raise ParameterError(f"{q} is not a prime power")
    p = next(f for f in range(2, q + 1) if q % f == 0)
    return p, prime_power_exponent(q, p)


def primes_up_to(n: int) -> List[int]:
    return [p for p in range(2, n + 1) if is_prime(p)]
