import numpy as np
import pytest

from jtvsampling import (
    EigenBasis,
    SpectralSupport,
    cycle_graph,
    eig_sym,
    gft,
    igft,
    ijft,
    jft,
    joint_basis_columns,
    joint_columns_from_restricted,
    laplacian,
    unvec,
    vec,
)
from jtvsampling.generate import random_connected_graph


def random_laplacian(n, rng):
    return laplacian(random_connected_graph(n, rng))


class TestEigSym:
    def test_star_spectrum(self, ref):
        basis = eig_sym(ref.l_graph)
        assert np.allclose(basis.values, [0.0, 1.0, 1.0, 4.0], atol=1e-9)
        # each eigenvalue annihilates the characteristic determinant
        for lam in basis.values:
            assert abs(np.linalg.det(ref.l_graph - lam * np.eye(4))) < 1e-9

    def test_cycle_spectrum_closed_form(self):
        basis = eig_sym(laplacian(cycle_graph(4)))
        expected = np.sort([2.0 - 2.0 * np.cos(2.0 * np.pi * k / 4.0) for k in range(4)])
        assert np.allclose(basis.values, expected, atol=1e-9)

    def test_identity_matrix(self):
        basis = eig_sym(np.eye(2))
        assert np.allclose(basis.values, [1.0, 1.0])
        assert np.allclose(basis.vectors.T @ basis.vectors, np.eye(2), atol=1e-12)

    def test_non_symmetric_rejected(self):
        with pytest.raises(ValueError, match="symmetric"):
            eig_sym(np.array([[0.0, 1.0], [0.0, 0.0]]))

    def test_non_square_rejected(self):
        with pytest.raises(ValueError, match="square"):
            eig_sym(np.zeros((2, 3)))

    def test_deterministic(self, ref):
        b1 = eig_sym(ref.l_graph)
        b2 = eig_sym(ref.l_graph)
        assert np.array_equal(b1.vectors, b2.vectors)
        assert np.array_equal(b1.values, b2.values)

    def test_sign_convention(self, ref):
        basis = eig_sym(ref.l_graph)
        for k in range(4):
            col = basis.vectors[:, k]
            assert col[int(np.argmax(np.abs(col)))] > 0

    @pytest.mark.parametrize("n", [5, 12, 30])
    def test_reconstruction_and_orthonormality(self, n):
        rng = np.random.default_rng(n)
        lap = random_laplacian(n, rng)
        basis = eig_sym(lap)
        rebuilt = basis.vectors @ np.diag(basis.values) @ basis.vectors.T
        assert np.max(np.abs(lap - rebuilt)) < 1e-8
        assert np.max(np.abs(basis.vectors.T @ basis.vectors - np.eye(n))) < 1e-9
        assert np.all(np.diff(basis.values) >= -1e-12)
        for k in range(n):
            resid = lap @ basis.vectors[:, k] - basis.values[k] * basis.vectors[:, k]
            assert np.max(np.abs(resid)) < 1e-8

    def test_connected_graph_null_vector(self, ref):
        basis = eig_sym(ref.l_graph)
        assert abs(basis.values[0]) < 1e-10
        first = basis.vectors[:, 0]
        assert np.all(first > 0) or np.all(first < 0)


class TestGft:
    def test_eigenvector_maps_to_unit(self, ref):
        basis = eig_sym(ref.l_graph)
        xf = gft(basis, basis.vectors[:, 2])
        expected = np.zeros(4)
        expected[2] = 1.0
        assert np.allclose(xf, expected, atol=1e-10)

    def test_round_trip_and_parseval(self):
        rng = np.random.default_rng(7)
        basis = eig_sym(laplacian(cycle_graph(5)))
        x = rng.normal(size=5)
        xf = gft(basis, x)
        assert np.allclose(igft(basis, xf), x, atol=1e-10)
        assert abs(np.linalg.norm(xf) - np.linalg.norm(x)) < 1e-10

    def test_dimension_mismatch(self):
        basis = eig_sym(np.eye(3))
        with pytest.raises(ValueError, match="length"):
            gft(basis, np.zeros(4))
        with pytest.raises(ValueError, match="length"):
            igft(basis, np.zeros(2))


class TestVec:
    def test_column_major_round_trip(self):
        x = np.arange(12.0).reshape(3, 4)
        v = vec(x)
        assert v[0] == x[0, 0] and v[1] == x[1, 0]  # stacks columns
        assert np.array_equal(unvec(v, 3, 4), x)

    def test_bad_length(self):
        with pytest.raises(ValueError, match="length"):
            unvec(np.zeros(5), 2, 3)


class TestJft:
    def test_zero_signal(self, ref_laplacians):
        lt, lg = ref_laplacians
        bt, bg = eig_sym(lt), eig_sym(lg)
        assert np.array_equal(jft(bt, bg, np.zeros((4, 4))), np.zeros((4, 4)))

    def test_round_trip_and_frobenius(self):
        rng = np.random.default_rng(3)
        bt = eig_sym(laplacian(cycle_graph(5)))
        bg = eig_sym(random_laplacian(4, rng))
        x = rng.normal(size=(4, 5))
        xf = jft(bt, bg, x)
        assert np.max(np.abs(ijft(bt, bg, xf) - x)) < 1e-10
        assert abs(np.linalg.norm(xf) - np.linalg.norm(x)) < 1e-10

    def test_matches_vectorized_transform(self):
        rng = np.random.default_rng(11)
        bt = eig_sym(laplacian(cycle_graph(3)))
        bg = eig_sym(random_laplacian(4, rng))
        x = rng.normal(size=(4, 3))
        xf = jft(bt, bg, x)
        uj = np.kron(bt.vectors, bg.vectors)
        assert np.max(np.abs(vec(xf) - uj.T @ vec(x))) < 1e-10

    def test_dimension_mismatch(self):
        bt = eig_sym(np.eye(3))
        bg = eig_sym(np.eye(4))
        with pytest.raises(ValueError, match="shape"):
            jft(bt, bg, np.zeros((3, 4)))

    def test_reference_block_coefficients(self, ref):
        # the restricted bases recover the occupied coefficient block; the
        # rest of the spectrum carries no additional energy
        block = ref.ug_r.T @ ref.x @ ref.ut_r
        assert np.max(np.abs(block - ref.xf_block)) < 1e-3
        assert abs(np.linalg.norm(ref.x) - np.linalg.norm(block)) < 1e-3


class TestJointBasisColumns:
    def test_reference_product_rows(self, ref):
        uj = joint_columns_from_restricted(ref.ut_r, ref.ug_r, ref.support)
        assert uj.shape == (16, 3)
        rows = uj[[0 * 4 + 0, 0 * 4 + 2, 1 * 4 + 0, 1 * 4 + 2]]
        assert np.max(np.abs(rows - ref.psi_uj)) < 1e-3

    def test_full_support_orthonormal(self):
        rng = np.random.default_rng(5)
        bt = eig_sym(laplacian(cycle_graph(3)))
        bg = eig_sym(random_laplacian(3, rng))
        support = SpectralSupport(
            t_dim=3, g_dim=3,
            pairs=frozenset((jt, jg) for jt in range(3) for jg in range(3)),
        )
        uj = joint_basis_columns(bt, bg, support)
        assert uj.shape == (9, 9)
        assert np.max(np.abs(uj.T @ uj - np.eye(9))) < 1e-9

    def test_single_pair_unit_norm(self):
        bt = eig_sym(laplacian(cycle_graph(3)))
        bg = eig_sym(np.eye(2))
        support = SpectralSupport(t_dim=3, g_dim=2, pairs=frozenset({(0, 0)}))
        uj = joint_basis_columns(bt, bg, support)
        assert np.allclose(uj[:, 0], np.kron(bt.vectors[:, 0], bg.vectors[:, 0]))
        assert abs(np.linalg.norm(uj[:, 0]) - 1.0) < 1e-12

    def test_orthonormal_columns(self):
        rng = np.random.default_rng(9)
        bt = eig_sym(laplacian(cycle_graph(5)))
        bg = eig_sym(random_laplacian(4, rng))
        support = SpectralSupport(
            t_dim=5, g_dim=4, pairs=frozenset({(0, 1), (2, 1), (2, 3), (4, 0)})
        )
        uj = joint_basis_columns(bt, bg, support)
        assert np.max(np.abs(uj.T @ uj - np.eye(4))) < 1e-9

    def test_out_of_range_pair(self):
        bt = eig_sym(np.eye(2))
        bg = eig_sym(np.eye(2))
        support = SpectralSupport(t_dim=3, g_dim=2, pairs=frozenset({(2, 1)}))
        with pytest.raises(ValueError, match="out of range"):
            joint_basis_columns(bt, bg, support)
