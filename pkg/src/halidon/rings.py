"""Halidon structures on Z_n.

A halidon structure is a triple (n, m, omega) where omega is a primitive
m-th root of unity in the ring-theoretic sense and m is invertible mod n.
"Primitive" here is strictly stronger than having multiplicative order m:
the geometric sums sum_{k<m} omega^{rk} must vanish mod n for every
r = 1..m-1 (and equal m at r = 0).  In a ring with zero divisors an element
of order m can fail that.

Two equivalent tests are implemented: the definition itself (order plus all
geometric sums) and the divisor criterion (omega^d - 1 a unit for every
proper divisor d of m).  `detect` finds the maximal index by walking the
divisors of carmichael(n) descending and constructing candidate roots
factor-by-factor through CRT, which replaces the O(n^2) scan a naive search
would need.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from itertools import product

from . import ring_core
from .errors import EvenModulus, InvalidStructure


def _order_check_and_sums(n: int, m: int, omega: int) -> bool:
    """The definition: omega has order exactly m and all geometric sums vanish."""
    x = 1
    for k in range(1, m + 1):
        x = x * omega % n
        if x == 1:
            if k < m:
                return False
            break
    if x != 1:
        return False
    for r in range(1, m):
        wr = pow(omega, r, n)
        s, t = 0, 1
        for _ in range(m):
            s += t
            t = t * wr % n
        if s % n != 0:
            return False
    return True


def is_primitive_root(n: int, m: int, omega: int, method: str = "criterion") -> bool:
    """True iff (n, m, omega) is a halidon structure.

    method="criterion" checks gcd(m, n) = 1, omega^m = 1 and
    gcd(omega^d - 1, n) = 1 for every divisor d < m.  method="definition"
    checks the multiplicative order and the geometric sums directly.  The two
    must agree on every input.
    """
    if n < 2 or m < 1 or not 0 <= omega < n:
        raise ValueError(f"bad arguments n={n}, m={m}, omega={omega}")
    if math.gcd(m, n) != 1:
        return False
    if m == 1:
        return omega == 1 % n
    if method == "definition":
        return _order_check_and_sums(n, m, omega)
    if method != "criterion":
        raise ValueError(f"unknown method {method!r}")
    if pow(omega, m, n) != 1:
        return False
    for d in ring_core.divisors(m):
        if d < m and math.gcd(pow(omega, d, n) - 1, n) != 1:
            return False
    return True


def primitive_roots(n: int, m: int) -> list[int]:
    """All omega in [1, n) certifying index m, ascending (closed under inverse)."""
    if n < 2 or m < 1:
        raise ValueError(f"bad arguments n={n}, m={m}")
    return [w for w in range(1, n) if is_primitive_root(n, m, w)]


def _primitive_root_mod_prime_power(p: int, e: int) -> int:
    """Generator of the (cyclic) unit group of Z_{p^e}, p an odd prime."""
    qs = [q for q, _ in ring_core.factorize(p - 1)]
    g = next(
        g for g in range(2, p) if all(pow(g, (p - 1) // q, p) != 1 for q in qs)
    )
    if e == 1:
        return g
    # a primitive root mod p^2 stays primitive for every higher power
    if pow(g, p - 1, p * p) == 1:
        g += p
    return g


def _crt_pair(a1: int, n1: int, a2: int, n2: int) -> int:
    return (a1 + (a2 - a1) * pow(n1, -1, n2) % n2 * n1) % (n1 * n2)


def _roots_for_index(n: int, m: int, factors) -> list[int]:
    """All primitive m-th roots mod n, built factor-by-factor.

    A root must have order exactly m modulo every prime divisor of n, so each
    prime-power factor contributes its phi(m) elements of exact order m and
    CRT glues the choices together.  If m does not divide p - 1 for some
    factor there is no root at all.
    """
    if m == 1:
        return [1 % n]
    if n % 2 == 0:
        return []
    per_factor = []
    for p, e in factors:
        if (p - 1) % m != 0:
            return []
        pe = p**e
        g = _primitive_root_mod_prime_power(p, e)
        h = pow(g, (pe - pe // p) // m, pe)
        elems = sorted(pow(h, t, pe) for t in range(1, m + 1) if math.gcd(t, m) == 1)
        per_factor.append((pe, elems))
    roots = []
    for combo in product(*(elems for _, elems in per_factor)):
        x, mod = 0, 1
        for (pe, _), a in zip(per_factor, combo):
            x = _crt_pair(x, mod, a, pe)
            mod *= pe
        roots.append(x)
    # soundness guard; completeness is the CRT construction's job
    return sorted(w for w in roots if is_primitive_root(n, m, w))


def detect(n: int, complete: bool | None = None) -> tuple[int, list[int]]:
    """Maximal halidon index of Z_n together with its certifying roots.

    Walks the divisors of carmichael(n) coprime to n in descending order and
    returns the first index with a root.  The root list is complete by
    default for n <= 10**6; above that only the smallest witness is returned
    unless complete=True is forced.
    """
    if n < 2:
        raise ValueError(f"modulus must be >= 2, got {n}")
    if complete is None:
        complete = n <= 10**6
    prof = ring_core.profile(n)
    candidates = sorted(
        (d for d in ring_core.divisors(prof.carmichael) if math.gcd(d, n) == 1),
        reverse=True,
    )
    for m in candidates:
        roots = _roots_for_index(n, m, prof.factors)
        if roots:
            return m, roots if complete else roots[:1]
    return 1, [1 % n]


@dataclass(frozen=True)
class HalidonRing:
    """A certified halidon structure (n, m, omega); construction validates it."""

    n: int
    m: int
    omega: int

    def __post_init__(self):
        if not is_primitive_root(self.n, self.m, self.omega):
            raise InvalidStructure(
                f"{self.omega} is not a primitive {self.m}-th root mod {self.n}"
            )

    @cached_property
    def m_inv(self) -> int:
        return pow(self.m, -1, self.n)

    @cached_property
    def omega_powers(self) -> tuple[int, ...]:
        """omega^0 .. omega^(m-1), reduced mod n."""
        pw = [1]
        for _ in range(self.m - 1):
            pw.append(pw[-1] * self.omega % self.n)
        return tuple(pw)

    def power(self, k: int) -> int:
        """omega^k for any integer exponent k."""
        return self.omega_powers[k % self.m]

    @cached_property
    def omega_inv(self) -> int:
        return self.power(-1)

    def conjugate(self) -> "HalidonRing":
        """The structure with omega replaced by omega^-1."""
        return HalidonRing(self.n, self.m, self.omega_inv)


def aut_quadratic(n: int) -> int:
    """|Aut(Z_n[X]/(X^2 - 1))| for odd n: the number of involutions mod n."""
    if n % 2 == 0:
        raise EvenModulus(f"automorphism count needs an odd modulus, got {n}")
    if n < 3:
        raise ValueError(f"modulus must be >= 3, got {n}")
    return len(ring_core.involutions(n))


def rigidity_check(m: int) -> bool:
    """True iff m! = 2^k * phi(m) for some integer k >= 1.

    Indices passing this make the group ring of C_m over Z_n[X]/(X^2 - 1)
    automorphically rigid; m = 2 is the only solution.
    """
    if m < 1:
        raise ValueError(f"index must be >= 1, got {m}")
    q, r = divmod(math.factorial(m), ring_core.euler_phi(m))
    return r == 0 and q >= 2 and q & (q - 1) == 0
