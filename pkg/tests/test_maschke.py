import math
import random
from itertools import product

import pytest

from halidon import (
    GroupTable,
    HalidonRing,
    InvalidTable,
    NotProjection,
    OrderNotInvertible,
    Projection,
    Representation,
    average_projection,
    cyclic_decomposition,
    permutation_rep,
    regular_rep_cyclic,
    split_module,
)
from halidon.linalg import (
    Span,
    det,
    identity,
    mat_add,
    mat_mul,
    mat_scale,
    mat_vec,
    vec_mat,
)

# permutation matrix for the element (13) of S_3 in the fixed ordering
RHO_G3 = [
    [0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 1],
    [1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0],
    [0, 0, 0, 1, 0, 0],
    [0, 1, 0, 0, 0, 0],
]

Z49_IDEMPOTENTS = {
    1: (41, 41, 41, 41, 41, 41),
    2: (41, 44, 3, 8, 5, 46),
    3: (41, 3, 5, 41, 3, 5),
    4: (41, 8, 41, 8, 41, 8),
    5: (41, 5, 3, 41, 5, 3),
    6: (41, 46, 5, 8, 3, 44),
}

# latin square with two-sided identity 0 that is not associative
NON_ASSOCIATIVE = [
    [0, 1, 2, 3, 4],
    [1, 0, 3, 4, 2],
    [2, 3, 4, 0, 1],
    [3, 4, 1, 2, 0],
    [4, 2, 0, 1, 3],
]


def eigvec(ring, r):
    """Column vector (1, w^(r-1), w^(2(r-1)), ...)."""
    return [ring.power((r - 1) * k) for k in range(ring.m)]


def all_ones_projection(n, k):
    """Kills e_1..e_(k-1), sends e_k to the all-ones vector."""
    phi = [[0] * k for _ in range(k)]
    for i in range(k):
        phi[i][k - 1] = 1
    return phi


class TestGroupTable:
    def test_cyclic(self):
        t = GroupTable.cyclic(4)
        assert t.order == 4 and t.identity == 0
        assert t.table[1][3] == 0
        assert t.inverse(1) == 3

    def test_symmetric3_is_a_group(self):
        t = GroupTable.symmetric3()
        assert t.order == 6
        assert t.inverse(4) == 5  # the three-cycles invert each other
        assert all(t.inverse(i) == i for i in (0, 1, 2, 3))

    def test_rejects_non_latin(self):
        with pytest.raises(InvalidTable, match="row"):
            GroupTable(2, 0, ((0, 0), (1, 0)))

    def test_rejects_bad_identity(self):
        with pytest.raises(InvalidTable):
            GroupTable(2, 1, ((0, 1), (1, 0)))

    def test_rejects_non_associative_loop(self):
        with pytest.raises(InvalidTable, match="associativity"):
            GroupTable(5, 0, NON_ASSOCIATIVE)

    def test_rejects_out_of_range(self):
        with pytest.raises(InvalidTable):
            GroupTable(2, 0, ((0, 1), (1, 7)))

    def test_dict_round_trip(self):
        t = GroupTable.symmetric3()
        assert GroupTable.from_dict(t.to_dict()) == t

    def test_from_dict_malformed(self):
        with pytest.raises(InvalidTable):
            GroupTable.from_dict({"order": 2})


class TestRepresentations:
    def test_permutation_rep_golden_matrix(self):
        rep = permutation_rep(GroupTable.symmetric3(), 49)
        assert rep.matrix(2) == RHO_G3

    def test_permutation_rep_identity(self):
        rep = permutation_rep(GroupTable.symmetric3(), 49)
        assert rep.matrix(0) == identity(6)

    def test_permutation_matrices(self):
        rep = permutation_rep(GroupTable.symmetric3(), 49)
        for i in range(6):
            mat = rep.matrix(i)
            assert all(sum(row) == 1 for row in mat)
            assert all(sum(col) == 1 for col in zip(*mat))
            assert math.gcd(det(mat) % 49, 49) == 1

    def test_homomorphism_enforced(self):
        bad = [[1, 1], [0, 1]]
        with pytest.raises(ValueError, match="homomorphism|identity"):
            Representation(GroupTable.cyclic(2), 5, (identity(2), bad))

    def test_regular_rep_swap_for_index_two(self):
        ring = HalidonRing(3, 2, 2)
        rep = regular_rep_cyclic(ring)
        assert rep.matrix(1) == [[0, 1], [1, 0]]

    def test_regular_rep_order(self, z49):
        rep = regular_rep_cyclic(z49)
        g = rep.matrix(1)
        acc = identity(6)
        for _ in range(6):
            acc = mat_mul(acc, g, 49)
        assert acc == identity(6)

    def test_regular_rep_row_eigenvectors(self, z49):
        # (1, w^(r-1), ...) * rho(g) = w^(r-1) * (1, w^(r-1), ...)
        rep = regular_rep_cyclic(z49)
        g = rep.matrix(1)
        for r in range(1, 7):
            v = eigvec(z49, r)
            lam = z49.power(r - 1)
            assert vec_mat(v, g, 49) == [lam * x % 49 for x in v]

    def test_character_of_permutation_rep(self):
        rep = permutation_rep(GroupTable.symmetric3(), 49)
        # acting on itself, only the identity fixes anything
        assert rep.character() == [6, 0, 0, 0, 0, 0]


class TestCyclicDecomposition:
    def test_matches_idempotent_goldens(self, z49):
        rep = regular_rep_cyclic(z49)
        pis = cyclic_decomposition(z49)
        for r, coeffs in Z49_IDEMPOTENTS.items():
            expected = [[0] * 6 for _ in range(6)]
            for i, c in enumerate(coeffs):
                expected = mat_add(
                    expected, mat_scale(c, rep.matrix(i), 49), 49
                )
            assert [list(row) for row in pis[r - 1].matrix] == expected

    def test_complete_orthogonal_idempotent(self, z49, z65):
        for ring in (z49, z65):
            n, m = ring.n, ring.m
            pis = [[list(r) for r in p.matrix] for p in cyclic_decomposition(ring)]
            total = [[0] * m for _ in range(m)]
            for i, p in enumerate(pis):
                total = mat_add(total, p, n)
                for j, q in enumerate(pis):
                    prod = mat_mul(p, q, n)
                    expected = p if i == j else [[0] * m for _ in range(m)]
                    assert prod == expected
            assert total == identity(m)

    def test_images_are_eigenlines(self, z49):
        n, m = z49.n, z49.m
        for r, p in enumerate(cyclic_decomposition(z49), start=1):
            mat = [list(row) for row in p.matrix]
            v = eigvec(z49, r)
            assert mat_vec(mat, v, n) == v
            # every column is a scalar multiple of the eigenvector
            for j in range(m):
                col = [mat[i][j] for i in range(m)]
                scalar = col[0]  # v starts with 1
                assert col == [scalar * x % n for x in v]

    def test_trivial_index(self):
        ring = HalidonRing(7, 1, 1)
        pis = cyclic_decomposition(ring)
        assert len(pis) == 1
        assert [list(r) for r in pis[0].matrix] == [[1]]


class TestAverageProjection:
    def test_s3_golden(self, z49):
        rep = permutation_rep(GroupTable.symmetric3(), 49)
        tau = average_projection(rep, all_ones_projection(49, 6))
        assert [list(row) for row in tau.matrix] == [[41] * 6 for _ in range(6)]
        # 41 is the inverse of the group order
        assert 41 * 6 % 49 == 1

    def test_fixes_equivariant_projection(self, z65):
        rep = regular_rep_cyclic(z65)
        pis = cyclic_decomposition(z65)
        phi = mat_add(
            [list(r) for r in pis[0].matrix],
            [list(r) for r in pis[2].matrix],
            65,
        )
        tau = average_projection(rep, phi)
        assert [list(r) for r in tau.matrix] == phi

    def test_random_submodule_projections(self, z65):
        # project onto a span of eigenvectors along a random complement;
        # averaging must land on the equivariant projection onto that span
        rng = random.Random(151)
        n, m = z65.n, z65.m
        rep = regular_rep_cyclic(z65)
        pis = [[list(r) for r in p.matrix] for p in cyclic_decomposition(z65)]
        for _ in range(20):
            subset = [r for r in range(1, m + 1) if rng.random() < 0.5]
            cols = [eigvec(z65, r) for r in subset]
            while True:
                extra = [
                    [rng.randrange(n) for _ in range(m)]
                    for _ in range(m - len(cols))
                ]
                b = [list(col) for col in zip(*(cols + extra))]
                if math.gcd(det(b) % n, n) == 1:
                    break
            from halidon.linalg import mat_inv

            d = [[1 if i == j and i < len(subset) else 0 for j in range(m)] for i in range(m)]
            phi = mat_mul(b, mat_mul(d, mat_inv(b, n), n), n)
            tau = average_projection(rep, phi)
            expected = [[0] * m for _ in range(m)]
            for r in subset:
                expected = mat_add(expected, pis[r - 1], n)
            assert [list(r) for r in tau.matrix] == expected
            # equivariance
            tau_mat = [list(r) for r in tau.matrix]
            for i in range(m):
                g = rep.matrix(i)
                assert mat_mul(tau_mat, g, n) == mat_mul(g, tau_mat, n)

    def test_non_submodule_projection_rejected(self):
        ring = HalidonRing(5, 2, 4)
        rep = regular_rep_cyclic(ring)
        phi = [[1, 2], [0, 0]]
        assert mat_mul(phi, phi, 5) == phi  # idempotent, but span{e_1} is not stable
        with pytest.raises(NotProjection):
            average_projection(rep, phi)

    def test_order_not_invertible(self):
        rep = permutation_rep(GroupTable.symmetric3(), 3)
        with pytest.raises(OrderNotInvertible):
            average_projection(rep, all_ones_projection(3, 6))


class TestSplitModule:
    def test_s3_golden_split(self, z49):
        rep = permutation_rep(GroupTable.symmetric3(), 49)
        tau = average_projection(rep, all_ones_projection(49, 6))
        sm = split_module(rep, tau)
        assert sm.image_free and sm.complement_free
        assert list(sm.image_basis) == [(1, 1, 1, 1, 1, 1)]
        assert len(sm.complement_basis) == 5
        span_w = Span(49, 6)
        for v in sm.complement_basis:
            span_w.add(list(v))
        for i in range(5):
            diff = [0] * 6
            diff[i], diff[i + 1] = 1, -1 % 49
            assert span_w.contains(diff)
        # the all-ones direction is not inside the complement
        assert not span_w.contains([1] * 6)

    def test_split_spans_are_stable(self, z49):
        rep = permutation_rep(GroupTable.symmetric3(), 49)
        tau = average_projection(rep, all_ones_projection(49, 6))
        sm = split_module(rep, tau)
        for basis in (sm.image_basis, sm.complement_basis):
            span = Span(49, 6)
            for v in basis:
                span.add(list(v))
            for v in basis:
                for i in range(6):
                    assert span.contains(mat_vec(rep.matrix(i), list(v), 49))

    def test_identity_and_zero_tau(self, z65):
        rep = regular_rep_cyclic(z65)
        sm = split_module(rep, Projection(65, identity(4)))
        assert len(sm.image_basis) == 4 and sm.complement_basis == ()
        sm = split_module(rep, Projection(65, [[0] * 4 for _ in range(4)]))
        assert sm.image_basis == () and len(sm.complement_basis) == 4

    def test_directness_exhaustive_z5(self):
        ring = HalidonRing(5, 2, 4)
        rep = regular_rep_cyclic(ring)
        pis = cyclic_decomposition(ring)
        tau = pis[0]
        sm = split_module(rep, tau)
        tau_mat = [list(r) for r in tau.matrix]
        comp = [
            [(int(i == j) - tau_mat[i][j]) % 5 for j in range(2)] for i in range(2)
        ]
        u_span = {
            tuple(sum(c * v[i] for c, v in zip(cs, sm.image_basis)) % 5 for i in range(2))
            for cs in product(range(5), repeat=len(sm.image_basis))
        }
        w_span = {
            tuple(
                sum(c * v[i] for c, v in zip(cs, sm.complement_basis)) % 5
                for i in range(2)
            )
            for cs in product(range(5), repeat=len(sm.complement_basis))
        }
        assert u_span & w_span == {(0, 0)}
        for v in product(range(5), repeat=2):
            tv = mat_vec(tau_mat, list(v), 5)
            cv = mat_vec(comp, list(v), 5)
            assert tuple((a + b) % 5 for a, b in zip(tv, cv)) == v
            assert tuple(tv) in u_span and tuple(cv) in w_span

    def test_rejects_non_projection(self, z65):
        rep = regular_rep_cyclic(z65)
        not_idempotent = [[1, 1, 0, 0], [1, 1, 0, 0], [0] * 4, [0] * 4]
        with pytest.raises(NotProjection):
            split_module(rep, not_idempotent)


def test_projection_class_validates():
    with pytest.raises(NotProjection):
        Projection(5, [[1, 1], [1, 1]])
    p = Projection(5, [[1, 0], [0, 0]])
    assert p.apply([3, 4]) == [3, 0]
