"""Exact arithmetic on Z_n and the arithmetic functions the other modules consume.

Residues are plain ints kept canonical (0 <= x < n); the modulus is always
passed explicitly.  Factorization is deterministic trial division, which is
all that desk-scale moduli (n <= 10**12) need.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import NotUnit


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of n >= 1 as [(p, e), ...] with p ascending."""
    if n < 1:
        raise ValueError(f"cannot factorize {n}")
    out = []
    for p in (2, 3):
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
    # wheel over 6k +/- 1
    p = 5
    while p * p <= n:
        for q in (p, p + 2):
            if n % q == 0:
                e = 0
                while n % q == 0:
                    n //= q
                    e += 1
                out.append((q, e))
        p += 6
    if n > 1:
        out.append((n, 1))
    out.sort()
    return out


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def euler_phi(n: int) -> int:
    phi = 1
    for p, e in factorize(n):
        phi *= p ** (e - 1) * (p - 1)
    return phi


def carmichael(n: int) -> int:
    """Carmichael function: the exponent of the unit group of Z_n."""
    lam = 1
    for p, e in factorize(n):
        if p == 2:
            part = 1 if e == 1 else 2 if e == 2 else 2 ** (e - 2)
        else:
            part = p ** (e - 1) * (p - 1)
        lam = math.lcm(lam, part)
    return lam


def halidon_psi(n: int) -> int:
    """Halidon function: gcd of p - 1 over the odd prime divisors of odd n.

    Even n (and n = 1) give 1.  Independent of the prime exponents, so
    psi(n**k) = psi(n) for odd n.
    """
    if n == 1 or n % 2 == 0:
        return 1
    return math.gcd(*(p - 1 for p, _ in factorize(n)))


@dataclass(frozen=True)
class RingProfile:
    """A modulus with its factorization and derived arithmetic functions."""

    n: int
    factors: tuple[tuple[int, int], ...]
    phi: int
    carmichael: int
    psi: int


def profile(n: int) -> RingProfile:
    """Full arithmetic profile of Z_n (n >= 1)."""
    if n < 1:
        raise ValueError(f"modulus must be >= 1, got {n}")
    return RingProfile(
        n=n,
        factors=tuple(factorize(n)),
        phi=euler_phi(n),
        carmichael=carmichael(n),
        psi=halidon_psi(n),
    )


def mod_inv(a: int, n: int) -> int:
    """Inverse of a mod n; raises NotUnit when gcd(a, n) > 1."""
    a %= n
    if math.gcd(a, n) != 1:
        raise NotUnit(f"{a} is not a unit mod {n} (gcd {math.gcd(a, n)})")
    return pow(a, -1, n)


def involutions(n: int) -> list[int]:
    """All x in [1, n) with x*x = 1 mod n, ascending."""
    if n < 2:
        raise ValueError(f"modulus must be >= 2, got {n}")
    return [x for x in range(1, n) if x * x % n == 1]


def idempotents(n: int) -> list[int]:
    """All x in [0, n) with x*x = x mod n, ascending."""
    if n < 2:
        raise ValueError(f"modulus must be >= 2, got {n}")
    return [x for x in range(n) if x * x % n == x]


def units(n: int) -> list[tuple[int, int]]:
    """All (x, x^-1) pairs mod n, ascending in x; length phi(n)."""
    if n < 2:
        raise ValueError(f"modulus must be >= 2, got {n}")
    return [(x, pow(x, -1, n)) for x in range(1, n) if math.gcd(x, n) == 1]
