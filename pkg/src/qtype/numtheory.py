"""Small exact number theory: divisors, totient, Moebius and Ramanujan sums.

Inputs are at most a few thousand, so everything goes through trial division.
Python integers are arbitrary precision, so nothing here can overflow.
"""

from __future__ import annotations

import cmath
import math

from .errors import ConsistencyError


def _check_positive(n: int, name: str = "n") -> None:
    if n < 1:
        raise ValueError(f"{name} must be a positive integer, got {n}")


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of ``n`` as ``{prime: exponent}``."""
    _check_positive(n)
    factors: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return factorize(n) == {n: 1}


def divisors(n: int) -> list[int]:
    """All positive divisors of ``n`` in increasing order."""
    _check_positive(n)
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i != n // i:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def totient(n: int) -> int:
    """Euler's phi: the number of ``1 <= h <= n`` coprime to ``n``."""
    result = n
    for p in factorize(n):
        result = result // p * (p - 1)
    return result


def moebius(n: int) -> int:
    factors = factorize(n)
    if any(e > 1 for e in factors.values()):
        return 0
    return -1 if len(factors) % 2 else 1


def ramanujan_sum_direct(l: int, k: int) -> complex:
    """Ramanujan sum c_l(k) as the literal sum of e(hk/l) over primitive residues h.

    Double precision; used only as an oracle for :func:`ramanujan_sum_holder`.
    """
    _check_positive(l, "l")
    total = 0j
    for h in range(1, l + 1):
        if math.gcd(h, l) == 1:
            total += cmath.exp(2j * cmath.pi * ((h * k) % l) / l)
    return total


def ramanujan_sum_holder(l: int, k: int) -> int:
    """Exact Ramanujan sum c_l(k) = mu(l/g) * phi(l) / phi(l/g) with g = gcd(l, k)."""
    _check_positive(l, "l")
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    reduced = l // math.gcd(l, k)
    numerator = moebius(reduced) * totient(l)
    quotient, remainder = divmod(numerator, totient(reduced))
    if remainder:
        raise ConsistencyError(f"phi({reduced}) does not divide mu*phi({l})")
    return quotient
