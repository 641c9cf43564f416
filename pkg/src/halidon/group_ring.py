"""Arithmetic in Z_n[C_m] over a halidon ring via the spectrum isomorphism.

An element alpha_1 + alpha_2 g + ... + alpha_m g^(m-1) is stored as its
coefficient tuple (1-based subscripts in the math, 0-based storage).  The
spectrum map

    lambda_r = sum_i alpha_{wrap(m-i+2)} omega^((i-1)(r-1)),   wrap into 1..m

is a ring isomorphism onto Z_n^m with pointwise operations: lambda_r equals
the evaluation of the element at g = omega^-(r-1).  Its inverse is

    alpha_r = m^-1 sum_j lambda_j omega^((j-1)(r-1)).

Units and idempotents of the group ring are exactly the elements whose
spectrum is componentwise a unit / an idempotent of Z_n, which is what the
inversion and idempotent constructors below exploit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

from . import linalg, ring_core
from .errors import MismatchedRing, NotIdempotentSpectrum, NotUnit, TooLarge
from .rings import HalidonRing

#: guard for exhaustive census enumeration (n^m states)
CENSUS_LIMIT = 10**7


def _wrap(t: int, m: int) -> int:
    """Map any integer subscript into the 1-based range 1..m."""
    return (t - 1) % m + 1


@dataclass(frozen=True)
class GroupRingElement:
    """Element of Z_n[C_m]: coeffs[i] multiplies g^i."""

    ring: HalidonRing
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.ring.m:
            raise ValueError(
                f"need {self.ring.m} coefficients, got {len(self.coeffs)}"
            )
        object.__setattr__(
            self, "coeffs", tuple(c % self.ring.n for c in self.coeffs)
        )

    @classmethod
    def identity(cls, ring: HalidonRing) -> "GroupRingElement":
        return cls(ring, (1,) + (0,) * (ring.m - 1))

    @classmethod
    def zero(cls, ring: HalidonRing) -> "GroupRingElement":
        return cls(ring, (0,) * ring.m)

    def _require_same_ring(self, other: "GroupRingElement"):
        if self.ring != other.ring:
            raise MismatchedRing(f"{self.ring} vs {other.ring}")

    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        self._require_same_ring(other)
        return GroupRingElement(
            self.ring, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __mul__(self, other: "GroupRingElement") -> "GroupRingElement":
        """Group-ring product: cyclic convolution of the coefficient vectors."""
        self._require_same_ring(other)
        n, m = self.ring.n, self.ring.m
        out = [0] * m
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                k = i + j
                if k >= m:
                    k -= m
                out[k] = (out[k] + a * b) % n
        return GroupRingElement(self.ring, tuple(out))

    def scale(self, c: int) -> "GroupRingElement":
        return GroupRingElement(self.ring, tuple(c * a for a in self.coeffs))

    def spectrum(self) -> "Spectrum":
        """Image (lambda_1, ..., lambda_m) under the isomorphism onto Z_n^m."""
        n, m = self.ring.n, self.ring.m
        pw = self.ring.omega_powers
        values = []
        for r in range(1, m + 1):
            acc = 0
            for i in range(1, m + 1):
                acc += self.coeffs[_wrap(m - i + 2, m) - 1] * pw[(i - 1) * (r - 1) % m]
            values.append(acc % n)
        return Spectrum(self.ring, tuple(values))

    def is_unit(self) -> bool:
        n = self.ring.n
        return all(math.gcd(v, n) == 1 for v in self.spectrum().values)

    def inverse(self) -> "GroupRingElement":
        """Multiplicative inverse, or NotUnit naming the first bad spectrum entry.

        The inverse is the reconstruction of the pointwise-inverted spectrum;
        it always verifies against multiplication.
        """
        n = self.ring.n
        spec = self.spectrum()
        inverted = []
        for r, v in enumerate(spec.values, start=1):
            if math.gcd(v, n) != 1:
                raise NotUnit(
                    f"not a unit: lambda[{r}] = {v} is a zero divisor mod {n}"
                )
            inverted.append(pow(v, -1, n))
        return Spectrum(self.ring, tuple(inverted)).to_element()


@dataclass(frozen=True)
class Spectrum:
    """A vector (lambda_1, ..., lambda_m) in Z_n^m."""

    ring: HalidonRing
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != self.ring.m:
            raise ValueError(f"need {self.ring.m} values, got {len(self.values)}")
        object.__setattr__(
            self, "values", tuple(v % self.ring.n for v in self.values)
        )

    def to_element(self) -> GroupRingElement:
        """Reconstruct the element: alpha_r = m^-1 sum_j lambda_j omega^((j-1)(r-1))."""
        n, m = self.ring.n, self.ring.m
        m1 = self.ring.m_inv
        pw = self.ring.omega_powers
        coeffs = []
        for r in range(1, m + 1):
            acc = 0
            for j in range(1, m + 1):
                acc += self.values[j - 1] * pw[(j - 1) * (r - 1) % m]
            coeffs.append(m1 * acc % n)
        return GroupRingElement(self.ring, tuple(coeffs))


def lambda_transform(u: GroupRingElement) -> Spectrum:
    return u.spectrum()


def lambda_reconstruct(s: Spectrum) -> GroupRingElement:
    return s.to_element()


def idempotent_from_spectrum(s: Spectrum) -> GroupRingElement:
    """Element with the given idempotent spectrum; satisfies e*e = e."""
    n = s.ring.n
    for r, v in enumerate(s.values, start=1):
        if v * v % n != v:
            raise NotIdempotentSpectrum(
                f"lambda[{r}] = {v} is not an idempotent mod {n}"
            )
    return s.to_element()


def _unit_by_determinant(ring: HalidonRing, coeffs) -> bool:
    """Spectrum-free unit test: the multiplication matrix must be invertible.

    Multiplication by u is the circulant M[l][j] = u[(l-j) mod m]; u is a
    unit iff det(M) is a unit mod n.  Kept independent of the spectrum route
    so the census can cross-check the formula.
    """
    m = ring.m
    mat = [[coeffs[(l - j) % m] for j in range(m)] for l in range(m)]
    return math.gcd(linalg.det(mat) % ring.n, ring.n) == 1


def census(ring: HalidonRing, mode: str = "formula") -> tuple[int, int]:
    """(unit count, idempotent count) of Z_n[C_m].

    mode="formula" returns (phi(n)^m, |idempotents of Z_n|^m).  mode
    "enumerate" counts over all n^m coefficient vectors, testing units by
    determinant and idempotents by squaring, and is guarded by CENSUS_LIMIT.
    """
    n, m = ring.n, ring.m
    if mode == "formula":
        return (
            ring_core.euler_phi(n) ** m,
            len(ring_core.idempotents(n)) ** m,
        )
    if mode != "enumerate":
        raise ValueError(f"unknown mode {mode!r}")
    if n**m > CENSUS_LIMIT:
        raise TooLarge(f"{n}^{m} states exceed the enumeration guard")
    units = idems = 0
    for coeffs in product(range(n), repeat=m):
        if _unit_by_determinant(ring, coeffs):
            units += 1
        u = GroupRingElement(ring, coeffs)
        if u * u == u:
            idems += 1
    return units, idems
