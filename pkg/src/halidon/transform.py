"""Number-theoretic DFT, convolution, circulants and bilinear forms.

Vectors here are 0-based (f_0 .. f_{m-1}), unlike the 1-based group-ring
coefficients; keeping the boundary explicit avoids off-by-one drift between
the two conventions.  The transform is the direct O(m^2) evaluation

    F_j = f(omega^j) = sum_k f_k omega^(jk)

with inverse f_k = m^-1 sum_j F_j omega^(-jk); desk-scale indices (m <= 20)
leave nothing to gain from a fast factorization.
"""

from __future__ import annotations

import math

from . import linalg
from .errors import MismatchedRing, NotUnit, ReconstructionMismatch
from .rings import HalidonRing


def _vec(ring: HalidonRing, f) -> list[int]:
    if len(f) != ring.m:
        raise MismatchedRing(f"vector of length {len(f)} for index {ring.m}")
    return [x % ring.n for x in f]


def dft(ring: HalidonRing, f) -> list[int]:
    """Forward transform: F_j = sum_k f_k omega^(jk) mod n."""
    f = _vec(ring, f)
    n, m, pw = ring.n, ring.m, ring.omega_powers
    return [sum(f[k] * pw[j * k % m] for k in range(m)) % n for j in range(m)]


def idft(ring: HalidonRing, F) -> list[int]:
    """Inverse transform: f_k = m^-1 sum_j F_j omega^(-jk) mod n."""
    F = _vec(ring, F)
    n, m, m1 = ring.n, ring.m, ring.m_inv
    pw = ring.omega_powers
    return [
        m1 * sum(F[j] * pw[-(j * k) % m] for j in range(m)) % n for k in range(m)
    ]


def convolve(ring: HalidonRing, f, g, mode: str = "direct") -> list[int]:
    """Cyclic convolution h_l = sum_{j+k=l mod m} f_j g_k.

    mode="spectral" routes through idft(dft(f) . dft(g)); both modes agree on
    every input.
    """
    f, g = _vec(ring, f), _vec(ring, g)
    n, m = ring.n, ring.m
    if mode == "spectral":
        return idft(ring, [a * b for a, b in zip(dft(ring, f), dft(ring, g))])
    if mode != "direct":
        raise ValueError(f"unknown mode {mode!r}")
    out = [0] * m
    for j, a in enumerate(f):
        if a == 0:
            continue
        for k, b in enumerate(g):
            l = j + k
            if l >= m:
                l -= m
            out[l] = (out[l] + a * b) % n
    return out


def vandermonde(ring: HalidonRing) -> list[list[int]]:
    """Phi with Phi[i][j] = omega^(ij), 0-based; (1/m) Phi Phi* = I."""
    m, pw = ring.m, ring.omega_powers
    return [[pw[i * j % m] for j in range(m)] for i in range(m)]


def vandermonde_conjugate(ring: HalidonRing) -> list[list[int]]:
    """Phi* : omega replaced by omega^-1 (equals the transpose of Phi)."""
    m, pw = ring.m, ring.omega_powers
    return [[pw[-(i * j) % m] for j in range(m)] for i in range(m)]


def circulant(ring: HalidonRing, u) -> list[list[int]]:
    """Shift circulant of u: row i is row i-1 moved one place right, wrapped.

    The build is verified against the spectral factorization
    (1/m) Phi diag(dft(u)) Phi*; a mismatch means omega is not a genuine
    primitive root and raises ReconstructionMismatch.
    """
    u = _vec(ring, u)
    n, m = ring.n, ring.m
    mat = [[u[(j - i) % m] for j in range(m)] for i in range(m)]
    lam = dft(ring, u)
    phi = vandermonde(ring)
    phi_star = vandermonde_conjugate(ring)
    scaled = [[lam[k] * phi[i][k] % n for k in range(m)] for i in range(m)]
    recon = linalg.mat_scale(ring.m_inv, linalg.mat_mul(scaled, phi_star, n), n)
    if recon != mat:
        raise ReconstructionMismatch(
            f"spectral factorization failed for omega={ring.omega} mod {n}"
        )
    return mat


def bilinear_eval(ring: HalidonRing, u, x, y) -> int:
    """The circulant form <x, y>_u = x C_u y^T mod n."""
    u, x, y = _vec(ring, u), _vec(ring, x), _vec(ring, y)
    n, m = ring.n, ring.m
    return sum(x[i] * u[(j - i) % m] * y[j] for i in range(m) for j in range(m)) % n


def s_basis(ring: HalidonRing) -> list[list[int]]:
    """The eigenvector basis rows s_i = (1, omega^(m-i+1), omega^(2(m-i+1)), ...).

    s_1 is the all-ones vector; indices i = 1..m map to list positions 0..m-1.
    """
    m, pw = ring.m, ring.omega_powers
    return [[pw[(m - i + 1) * k % m] for k in range(m)] for i in range(1, m + 1)]


def gram_s_basis(ring: HalidonRing, u) -> list[list[int]]:
    """Gram matrix M[i][j] = <s_i, s_j>_u, computed directly."""
    s = s_basis(ring)
    return [[bilinear_eval(ring, u, si, sj) for sj in s] for si in s]


def gram_closed_form(ring: HalidonRing, u) -> list[list[int]]:
    """The closed form: m * dft(u)[i-1] where i + j = 2 mod m, else 0."""
    u = _vec(ring, u)
    n, m = ring.n, ring.m
    lam = dft(ring, u)
    return [
        [
            m * lam[i - 1] % n if (i + j - 2) % m == 0 else 0
            for j in range(1, m + 1)
        ]
        for i in range(1, m + 1)
    ]


def is_nondegenerate(ring: HalidonRing, u) -> bool:
    """True iff every entry on the i + j = 2 (mod m) pattern is a unit."""
    n, m = ring.n, ring.m
    gram = gram_s_basis(ring, u)
    for i in range(1, m + 1):
        j = (2 - i) % m or m
        if math.gcd(gram[i - 1][j - 1], n) != 1:
            return False
    return True


def gram_inverse(ring: HalidonRing, u) -> list[list[int]]:
    """Inverse of the Gram matrix: reciprocal entries at transposed positions.

    Raises NotUnit when the form is degenerate.
    """
    n, m = ring.n, ring.m
    gram = gram_s_basis(ring, u)
    inv = [[0] * m for _ in range(m)]
    for i in range(1, m + 1):
        j = (2 - i) % m or m
        v = gram[i - 1][j - 1]
        if math.gcd(v, n) != 1:
            raise NotUnit(f"<s_{i}, s_{j}> = {v} is a zero divisor mod {n}")
        inv[j - 1][i - 1] = pow(v, -1, n)
    return inv
