"""Small integer number theory: primality, factoring, totient, primitive roots.

Everything here runs on desk-scale integers (well below 2**40), so plain
trial division is fast enough and keeps the results exact.
"""

from __future__ import annotations

import math


def is_prime(n: int) -> bool:
    """Deterministic primality by trial division up to sqrt(n)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization as {prime: exponent}, n >= 1."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f = 5
    while f * f <= n:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 2 if f % 6 == 5 else 4
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def euler_phi(n: int) -> int:
    """Euler's totient of n >= 1."""
    total = n
    for p in factorize(n):
        total = total // p * (p - 1)
    return total


def prime_power(n: int) -> tuple[int, int] | None:
    """Return (p, m) with n == p**m, or None when n is not a prime power."""
    if n < 2:
        return None
    fac = factorize(n)
    if len(fac) != 1:
        return None
    ((p, m),) = fac.items()
    return p, m


def multiplicative_order(a: int, n: int) -> int:
    """Order of a in (Z/n)*; requires gcd(a, n) == 1."""
    a %= n
    if math.gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit mod {n}")
    order = euler_phi(n)
    for p in factorize(order):
        while order % p == 0 and pow(a, order // p, n) == 1:
            order //= p
    return order


def is_primitive_root(a: int, p: int) -> bool:
    """True iff a generates (Z/p)* for prime p."""
    if a % p == 0:
        return False
    return multiplicative_order(a, p) == p - 1


def primitive_roots(p: int) -> list[int]:
    """All primitive roots mod prime p, ascending."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return [a for a in range(1, p) if is_primitive_root(a, p)]


def primes_in_range(lo: int, hi: int) -> list[int]:
    """Primes p with lo <= p <= hi."""
    return [n for n in range(max(lo, 2), hi + 1) if is_prime(n)]


def crt_pair(r1: int, n1: int, r2: int, n2: int) -> int:
    """The unique residue mod n1*n2 matching r1 mod n1 and r2 mod n2 (coprime moduli)."""
    g = math.gcd(n1, n2)
    if g != 1:
        raise ValueError(f"moduli {n1}, {n2} are not coprime")
    inv = pow(n1, -1, n2)
    return (r1 + n1 * ((r2 - r1) * inv % n2)) % (n1 * n2)
