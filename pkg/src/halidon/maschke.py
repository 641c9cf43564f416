"""Finite-group representations over Z_n and the averaging projection.

Groups come in as multiplication tables (0-based indices).  Representation
matrices act on column vectors: rho(g) sends the basis vector e_h to e_(gh),
so rho(g) @ rho(h) = rho(gh) under ordinary matrix multiplication.  The
eigenvector relations of the cyclic shift are stated for row vectors
(v * rho(g)), matching the module action v.g = v rho(g).

Averaging replaces a projection phi onto a submodule U by

    tau = (1/|G|) sum_g rho(g)^-1 phi rho(g),

which commutes with every rho(g); when U is stable under the group action
tau is again a projection with image U, and V splits as im(tau) + im(I-tau).
Over Z_n the complement is computed from the idempotent identity, never as a
kernel: kernels over a ring with zero divisors would need extra machinery
that the identity v = tau v + (I - tau) v makes unnecessary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import linalg
from .errors import InvalidTable, NotProjection, OrderNotInvertible
from .group_ring import Spectrum
from .rings import HalidonRing

Matrix = tuple[tuple[int, ...], ...]


def _freeze(mat) -> Matrix:
    return tuple(tuple(row) for row in mat)


def _thaw(mat) -> list[list[int]]:
    return [list(row) for row in mat]


@dataclass(frozen=True)
class GroupTable:
    """A finite group as a multiplication table: table[i][j] = index of g_i g_j."""

    order: int
    identity: int
    table: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "table", _freeze(self.table))
        n = self.order
        t = self.table
        if n < 1 or not 0 <= self.identity < n:
            raise InvalidTable(f"bad order {n} / identity {self.identity}")
        if len(t) != n or any(len(row) != n for row in t):
            raise InvalidTable(f"table is not {n}x{n}")
        if any(not 0 <= x < n for row in t for x in row):
            raise InvalidTable("table entries out of range")
        full = set(range(n))
        if any(set(row) != full for row in t):
            raise InvalidTable("some row is not a permutation")
        if any({t[i][j] for i in range(n)} != full for j in range(n)):
            raise InvalidTable("some column is not a permutation")
        e = self.identity
        if any(t[e][j] != j or t[j][e] != j for j in range(n)):
            raise InvalidTable(f"index {e} is not an identity")
        for i in range(n):
            for j in range(n):
                tij = t[i][j]
                for k in range(n):
                    if t[tij][k] != t[i][t[j][k]]:
                        raise InvalidTable(
                            f"associativity fails at ({i}, {j}, {k})"
                        )

    def inverse(self, i: int) -> int:
        return self.table[i].index(self.identity)

    @classmethod
    def cyclic(cls, m: int) -> "GroupTable":
        return cls(m, 0, tuple(tuple((i + j) % m for j in range(m)) for i in range(m)))

    @classmethod
    def symmetric3(cls) -> "GroupTable":
        """S_3 ordered as id, (12), (13), (23), (123), (132)."""
        return cls(
            6,
            0,
            (
                (0, 1, 2, 3, 4, 5),
                (1, 0, 4, 5, 2, 3),
                (2, 5, 0, 4, 3, 1),
                (3, 4, 5, 0, 1, 2),
                (4, 3, 1, 2, 5, 0),
                (5, 2, 3, 1, 0, 4),
            ),
        )

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "identity": self.identity,
            "table": [list(row) for row in self.table],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "GroupTable":
        try:
            return cls(int(data["order"]), int(data["identity"]), data["table"])
        except (KeyError, TypeError) as exc:
            raise InvalidTable(f"malformed group table payload: {exc}") from exc


@dataclass(frozen=True)
class Representation:
    """Matrices over Z_n indexed like the group table, acting on columns."""

    group: GroupTable
    n: int
    matrices: tuple[Matrix, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "matrices", tuple(_freeze(m) for m in self.matrices)
        )
        g, n = self.group, self.n
        if len(self.matrices) != g.order:
            raise ValueError(f"need {g.order} matrices, got {len(self.matrices)}")
        k = self.degree
        if _thaw(self.matrices[g.identity]) != linalg.identity(k):
            raise ValueError("identity element is not mapped to I")
        mats = [_thaw(m) for m in self.matrices]
        for i in range(g.order):
            for j in range(g.order):
                if linalg.mat_mul(mats[i], mats[j], n) != mats[g.table[i][j]]:
                    raise ValueError(f"homomorphism fails at ({i}, {j})")

    @property
    def degree(self) -> int:
        return len(self.matrices[0])

    def matrix(self, i: int) -> list[list[int]]:
        return _thaw(self.matrices[i])

    def character(self) -> list[int]:
        """Trace character chi(g_i) = tr rho(g_i)."""
        return [
            sum(m[d][d] for d in range(self.degree)) % self.n
            for m in self.matrices
        ]


@dataclass(frozen=True)
class Projection:
    """An idempotent matrix over Z_n; construction checks P @ P = P."""

    n: int
    matrix: Matrix

    def __post_init__(self):
        object.__setattr__(
            self, "matrix", _freeze(linalg.mat_mod(_thaw(self.matrix), self.n))
        )
        m = _thaw(self.matrix)
        if linalg.mat_mul(m, m, self.n) != m:
            raise NotProjection(f"matrix is not idempotent mod {self.n}")

    def apply(self, v) -> list[int]:
        return linalg.mat_vec(_thaw(self.matrix), v, self.n)


def regular_rep_cyclic(ring: HalidonRing) -> Representation:
    """C_m acting on Z_n^m with rho(g) the wrap-around shift circulant.

    Row vectors (1, w^(r-1), w^(2(r-1)), ...) are eigenvectors of the shift
    with eigenvalue w^(r-1) under the right action v * rho(g).
    """
    m = ring.m
    shift = [[1 if i == (j + 1) % m else 0 for j in range(m)] for i in range(m)]
    mats = [linalg.identity(m)]
    for _ in range(m - 1):
        mats.append(linalg.mat_mul(mats[-1], shift, ring.n))
    return Representation(GroupTable.cyclic(m), ring.n, tuple(map(_freeze, mats)))


def cyclic_decomposition(ring: HalidonRing) -> list[Projection]:
    """The m orthogonal projections splitting Z_n^m under the cyclic shift.

    Projection r is the action matrix of the group-ring idempotent whose
    spectrum is the r-th standard basis vector; its image is spanned by
    (1, w^(r-1), ..., w^((r-1)(m-1))).  They are idempotent, pairwise
    orthogonal and sum to the identity.
    """
    n, m = ring.n, ring.m
    rep = regular_rep_cyclic(ring)
    out = []
    for r in range(m):
        e_r = Spectrum(ring, tuple(1 if j == r else 0 for j in range(m))).to_element()
        acc = [[0] * m for _ in range(m)]
        for i, c in enumerate(e_r.coeffs):
            acc = linalg.mat_add(acc, linalg.mat_scale(c, rep.matrix(i), n), n)
        out.append(Projection(n, _freeze(acc)))
    return out


def permutation_rep(group: GroupTable, n: int) -> Representation:
    """Degree-|G| representation sending e_h to e_(gh)."""
    mats = []
    for i in range(group.order):
        mat = [[0] * group.order for _ in range(group.order)]
        for b in range(group.order):
            mat[group.table[i][b]][b] = 1
        mats.append(_freeze(mat))
    return Representation(group, n, tuple(mats))


def average_projection(rep: Representation, phi) -> Projection:
    """Average phi over the group: tau = (1/|G|) sum_g rho(g)^-1 phi rho(g).

    tau commutes with every rho(g).  When phi projects onto a submodule
    stable under the action, tau is a projection onto it; otherwise the
    Projection constructor rejects the result (NotProjection).  Raises
    OrderNotInvertible when |G| shares a factor with n.
    """
    n, g = rep.n, rep.group
    if math.gcd(g.order, n) != 1:
        raise OrderNotInvertible(f"|G| = {g.order} is not invertible mod {n}")
    phi_mat = _thaw(phi.matrix) if isinstance(phi, Projection) else _thaw(phi)
    k = rep.degree
    acc = [[0] * k for _ in range(k)]
    for i in range(g.order):
        rho = rep.matrix(i)
        rho_inv = rep.matrix(g.inverse(i))
        acc = linalg.mat_add(
            acc, linalg.mat_mul(rho_inv, linalg.mat_mul(phi_mat, rho, n), n), n
        )
    order_inv = pow(g.order, -1, n)
    return Projection(n, _freeze(linalg.mat_scale(order_inv, acc, n)))


@dataclass(frozen=True)
class SplitModule:
    """V = span(image_basis) + span(complement_basis), a direct sum.

    The free flags report whether every basis vector got a unit pivot; when
    they are False the lists are spanning sets rather than free bases.
    """

    image_basis: tuple[tuple[int, ...], ...]
    complement_basis: tuple[tuple[int, ...], ...]
    image_free: bool
    complement_free: bool


def split_module(rep: Representation, tau) -> SplitModule:
    """Split Z_n^k along tau: U = im(tau), W = im(I - tau).

    Every v decomposes uniquely as tau(v) + (I - tau)(v), and both images are
    stable under the group action when tau commutes with it.
    """
    n, k = rep.n, rep.degree
    tau_mat = _thaw(tau.matrix) if isinstance(tau, Projection) else _thaw(tau)
    if linalg.mat_mul(tau_mat, tau_mat, n) != linalg.mat_mod(tau_mat, n):
        raise NotProjection(f"splitting needs an idempotent matrix mod {n}")
    comp = linalg.mat_sub(linalg.identity(k), tau_mat, n)
    u_basis, u_free = linalg.extract_basis(linalg.columns(tau_mat), n)
    w_basis, w_free = linalg.extract_basis(linalg.columns(comp), n)
    return SplitModule(
        tuple(tuple(v) for v in u_basis),
        tuple(tuple(v) for v in w_basis),
        u_free,
        w_free,
    )
