"""Symmetric eigendecomposition and graph / joint time-vertex Fourier transforms.

The eigensolver is a cyclic Jacobi sweep: deterministic, dependency-free, and
accurate enough for the dense desk-scale matrices this library targets.
"""

from dataclasses import dataclass

import numpy as np


class JacobiConvergenceError(RuntimeError):
    """Raised when the Jacobi sweep fails to reduce the off-diagonal norm."""


@dataclass(frozen=True)
class EigenBasis:
    """Orthonormal eigenvectors (columns of ``vectors``) with ascending eigenvalues."""

    vectors: np.ndarray
    values: np.ndarray

    @property
    def dim(self):
        return self.vectors.shape[0]


def _offdiag_norm(a):
    # direct sum, not ||A||^2 - ||diag||^2: that difference cancels
    # catastrophically once the off-diagonal part is tiny
    b = a.copy()
    np.fill_diagonal(b, 0.0)
    return np.linalg.norm(b, "fro")


def eig_sym(mat: np.ndarray, max_sweeps: int = 100) -> EigenBasis:
    """Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.

    Deterministic: fixed sweep order, stable ascending sort, and each
    eigenvector scaled so its largest-magnitude entry (lowest index on ties)
    is positive.
    """
    a = np.array(mat, dtype=float)
    n = a.shape[0]
    if a.ndim != 2 or a.shape != (n, n):
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.allclose(a, a.T, atol=1e-10):
        raise ValueError("matrix is not symmetric")
    a = (a + a.T) / 2.0
    v = np.eye(n)
    target = 1e-12 * np.linalg.norm(a, "fro")

    for _ in range(max_sweeps):
        off = _offdiag_norm(a)
        if off <= target:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                # smaller-magnitude tangent root for numerical stability
                if abs(theta) > 1e8:
                    t = 1.0 / (2.0 * theta)
                else:
                    t = np.sign(theta) if theta != 0 else 1.0
                    t = t / (abs(theta) + np.sqrt(theta * theta + 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                col_p, col_q = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p, row_q = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                vec_p, vec_q = v[:, p].copy(), v[:, q].copy()
                v[:, p] = c * vec_p - s * vec_q
                v[:, q] = s * vec_p + c * vec_q
    else:
        raise JacobiConvergenceError(
            f"off-diagonal residual {_offdiag_norm(a):.3e} above threshold "
            f"{target:.3e} after {max_sweeps} sweeps"
        )

    lam = np.diag(a).copy()
    order = np.argsort(lam, kind="stable")
    lam = lam[order]
    v = v[:, order]
    for k in range(n):
        i = int(np.argmax(np.abs(v[:, k])))
        if v[i, k] < 0:
            v[:, k] = -v[:, k]
    return EigenBasis(vectors=v, values=lam)


def gft(basis: EigenBasis, x: np.ndarray) -> np.ndarray:
    """Forward transform: project a vertex-domain signal onto the eigenbasis."""
    x = np.asarray(x, dtype=float)
    if x.shape != (basis.dim,):
        raise ValueError(f"signal length {x.shape} does not match basis dim {basis.dim}")
    return basis.vectors.T @ x


def igft(basis: EigenBasis, xf: np.ndarray) -> np.ndarray:
    """Inverse transform back to the vertex domain."""
    xf = np.asarray(xf, dtype=float)
    if xf.shape != (basis.dim,):
        raise ValueError(f"spectrum length {xf.shape} does not match basis dim {basis.dim}")
    return basis.vectors @ xf


def vec(x_mat: np.ndarray) -> np.ndarray:
    """Column-major vectorization: stacks the T columns of an N x T matrix."""
    return np.asarray(x_mat, dtype=float).flatten(order="F")


def unvec(x: np.ndarray, n: int, t: int) -> np.ndarray:
    """Inverse of :func:`vec`: rebuild the N x T matrix."""
    x = np.asarray(x, dtype=float)
    if x.shape != (n * t,):
        raise ValueError(f"vector length {x.shape} does not match {n}x{t}")
    return x.reshape((n, t), order="F")


def jft(basis_t: EigenBasis, basis_g: EigenBasis, x_mat: np.ndarray) -> np.ndarray:
    """Joint transform of an N x T signal: rows of the result index graph
    frequencies, columns index time frequencies."""
    x_mat = np.asarray(x_mat, dtype=float)
    if x_mat.shape != (basis_g.dim, basis_t.dim):
        raise ValueError(
            f"signal shape {x_mat.shape} does not match bases "
            f"({basis_g.dim}, {basis_t.dim})"
        )
    return basis_g.vectors.T @ x_mat @ basis_t.vectors


def ijft(basis_t: EigenBasis, basis_g: EigenBasis, xf_mat: np.ndarray) -> np.ndarray:
    """Inverse joint transform."""
    xf_mat = np.asarray(xf_mat, dtype=float)
    if xf_mat.shape != (basis_g.dim, basis_t.dim):
        raise ValueError(
            f"spectrum shape {xf_mat.shape} does not match bases "
            f"({basis_g.dim}, {basis_t.dim})"
        )
    return basis_g.vectors @ xf_mat @ basis_t.vectors.T


def joint_columns_from_restricted(ut_r: np.ndarray, ug_r: np.ndarray, support) -> np.ndarray:
    """Joint basis columns built from the restricted time / graph bases.

    Column for support pair (j_t, j_g) is the Kronecker product of the
    corresponding columns; column order follows the support's canonical
    (j_t, j_g) sort. Shape is (N*T, K) without ever forming the full product
    basis.
    """
    ut_r = np.asarray(ut_r, dtype=float)
    ug_r = np.asarray(ug_r, dtype=float)
    tpos = {f: i for i, f in enumerate(support.time_freqs)}
    gpos = {f: i for i, f in enumerate(support.graph_freqs)}
    if ut_r.shape[1] != len(tpos) or ug_r.shape[1] != len(gpos):
        raise ValueError("restricted bases do not match the support's bandwidths")
    cols = [
        np.kron(ut_r[:, tpos[jt]], ug_r[:, gpos[jg]])
        for jt, jg in support.sorted_pairs
    ]
    return np.column_stack(cols)


def joint_basis_columns(basis_t: EigenBasis, basis_g: EigenBasis, support) -> np.ndarray:
    """Joint basis columns selected by a spectral support from full bases."""
    for jt, jg in support.pairs:
        if not (0 <= jt < basis_t.dim and 0 <= jg < basis_g.dim):
            raise ValueError(f"support pair ({jt}, {jg}) out of range")
    ut_r = basis_t.vectors[:, support.time_freqs]
    ug_r = basis_g.vectors[:, support.graph_freqs]
    return joint_columns_from_restricted(ut_r, ug_r, support)
