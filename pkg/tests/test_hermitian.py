"""Tests for the Jacobi eigensolver, Gram builders and min-norm solves."""

import math

import numpy as np
import pytest

from mslab.errors import CertificationError
from mslab.hermitian import (
    HermitianMatrix,
    eigenvalues,
    gram_matrix,
    jacobi_eigh,
    max_eigenpair,
    max_generalized_eigenpair,
    min_norm_solve,
)
from mslab.series import NormKind, polynomial


def _random_hermitian(rng, d):
    A = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    return HermitianMatrix((A + A.conj().T) / 2.0)


class TestHermitianMatrix:
    """Input validation of the matrix wrapper."""

    def test_rejects_non_square(self):
        """Rectangular input is refused."""
        with pytest.raises(ValueError):
            HermitianMatrix(np.ones((2, 3)))

    def test_rejects_hermiticity_drift(self):
        """A visibly non-Hermitian matrix is refused."""
        with pytest.raises(ValueError):
            HermitianMatrix(np.array([[0.0, 1.0], [0.0, 0.0]]))

    def test_symmetrizes_rounding_drift(self):
        """Drift below tolerance is folded away symmetrically."""
        M = HermitianMatrix(np.array([[1.0, 0.5 + 1e-14], [0.5, 2.0]]))
        assert np.max(np.abs(M.entries - M.entries.conj().T)) == 0.0


class TestJacobiEigh:
    """Spectrum of dense Hermitian matrices by cyclic rotations."""

    def test_tridiagonal_closed_form(self):
        """The 3x3 second-difference matrix has eigenvalues 2 and 2 +- sqrt(2)."""
        M = HermitianMatrix(np.array([[2.0, 1.0, 0.0], [1.0, 2.0, 1.0], [0.0, 1.0, 2.0]]))
        vals, vecs = jacobi_eigh(M)
        np.testing.assert_allclose(
            vals, [2.0 - math.sqrt(2.0), 2.0, 2.0 + math.sqrt(2.0)], rtol=1e-14
        )
        np.testing.assert_allclose(
            M.entries @ vecs, vecs * vals[None, :], atol=1e-13
        )

    def test_matches_lapack_on_random_input(self):
        """Values agree with numpy.linalg.eigvalsh across sizes."""
        rng = np.random.default_rng(31)
        for d in (1, 2, 5, 12, 30):
            M = _random_hermitian(rng, d)
            vals = eigenvalues(M)
            np.testing.assert_allclose(vals, np.linalg.eigvalsh(M.entries), atol=1e-11)
            assert np.all(np.diff(vals) >= 0.0)

    def test_vectors_are_unitary(self):
        """Accumulated rotations stay orthonormal."""
        rng = np.random.default_rng(4)
        M = _random_hermitian(rng, 9)
        _, vecs = jacobi_eigh(M)
        np.testing.assert_allclose(vecs.conj().T @ vecs, np.eye(9), atol=1e-13)

    def test_numerically_diagonal_input_converges(self):
        """Off-diagonal entries below the rotation threshold still terminate.

        The off-diagonal mass must be summed directly over off-diagonal
        entries; deriving it as total minus diagonal cancels to rounding
        noise around sqrt(eps) and reports a phantom non-convergence.
        """
        M = np.diag([1.3, 2.7, 0.4]).astype(complex)
        M[0, 1] = M[1, 0] = 2e-17
        M[0, 2] = M[2, 0] = -1.5e-17
        vals, _ = jacobi_eigh(HermitianMatrix(M))
        np.testing.assert_allclose(vals, [0.4, 1.3, 2.7], rtol=1e-15)

    def test_dimension_cap(self):
        """Problems beyond the supported size are refused up front."""
        with pytest.raises(ValueError):
            jacobi_eigh(HermitianMatrix(np.eye(513)))

    def test_deterministic_across_calls(self):
        """The same matrix yields bit-identical values and vectors."""
        rng = np.random.default_rng(77)
        M = _random_hermitian(rng, 7)
        v1, w1 = jacobi_eigh(M)
        v2, w2 = jacobi_eigh(M)
        assert np.array_equal(v1, v2) and np.array_equal(w1, w2)


class TestMaxEigenpair:
    """Top eigenpair extraction with certificates."""

    def test_value_vector_and_residual(self):
        """The returned pair satisfies the eigen-equation at the residual."""
        rng = np.random.default_rng(15)
        M = _random_hermitian(rng, 8)
        pair = max_eigenpair(M)
        np.testing.assert_allclose(pair.value, float(np.linalg.eigvalsh(M.entries)[-1]), atol=1e-12)
        gap = np.linalg.norm(M.entries @ pair.vector - pair.value * pair.vector)
        assert gap <= pair.residual + 1e-13
        np.testing.assert_allclose(np.linalg.norm(pair.vector), 1.0, rtol=1e-13)

    def test_degenerate_top_reports_cluster(self):
        """A repeated top eigenvalue is surfaced through the cluster field."""
        pair = max_eigenpair(HermitianMatrix(np.eye(4)))
        assert len(pair.cluster) == 4
        np.testing.assert_allclose(pair.cluster, [1.0] * 4)

    def test_simple_top_has_singleton_cluster(self):
        """A well-separated top eigenvalue stands alone."""
        pair = max_eigenpair(HermitianMatrix(np.diag([0.0, 1.0, 5.0])))
        assert pair.cluster == (5.0,)
        assert pair.value == 5.0


class TestGeneralizedEigenpair:
    """Pencil problems M v = mu S v with S positive definite."""

    def test_matches_whitened_reduction(self):
        """The top pencil value equals the top eigenvalue after whitening by S."""
        rng = np.random.default_rng(6)
        M = _random_hermitian(rng, 6)
        B = rng.normal(size=(6, 6)) + 1j * rng.normal(size=(6, 6))
        S = HermitianMatrix(B @ B.conj().T + 6.0 * np.eye(6))
        pair = max_generalized_eigenpair(M, S)
        Lc = np.linalg.cholesky(S.entries)
        reduced = np.linalg.solve(Lc, np.linalg.solve(Lc, M.entries).conj().T).conj().T
        expect = float(np.linalg.eigvalsh((reduced + reduced.conj().T) / 2.0)[-1])
        np.testing.assert_allclose(pair.value, expect, rtol=1e-11)
        gap = np.linalg.norm(M.entries @ pair.vector - pair.value * (S.entries @ pair.vector))
        assert gap <= pair.residual + 1e-12

    def test_identity_weight_reduces_to_plain_problem(self):
        """S = I gives back the ordinary top eigenvalue."""
        rng = np.random.default_rng(9)
        M = _random_hermitian(rng, 5)
        pair = max_generalized_eigenpair(M, HermitianMatrix(np.eye(5)))
        np.testing.assert_allclose(pair.value, max_eigenpair(M).value, rtol=1e-12)

    def test_indefinite_weight_rejected(self):
        """A pencil with indefinite S raises the certification error."""
        M = HermitianMatrix(np.eye(2))
        S = HermitianMatrix(np.diag([1.0, -1.0]))
        with pytest.raises(CertificationError):
            max_generalized_eigenpair(M, S)


class TestGramMatrix:
    """Weighted Grams of coefficient families."""

    def test_monomials_give_weight_diagonal(self):
        """Monomial columns produce the diagonal of norm weights."""
        fam = [polynomial([0.0] * k + [1.0]) for k in range(4)]
        G = gram_matrix(fam, NormKind.DIRICHLET)
        np.testing.assert_allclose(G.entries, np.diag([1.0, 2.0, 3.0, 4.0]), atol=0)

    def test_quadratic_form_matches_norm(self):
        """c^* G c equals the squared norm of the combination."""
        rng = np.random.default_rng(12)
        fam = [polynomial(rng.normal(size=6) + 1j * rng.normal(size=6)) for _ in range(3)]
        c = rng.normal(size=3) + 1j * rng.normal(size=3)
        G = gram_matrix(fam, NormKind.BERGMAN)
        combo = np.zeros(6, dtype=complex)
        for ck, f in zip(c, fam):
            combo += ck * f.coeffs
        w = NormKind.BERGMAN.weights(6)
        np.testing.assert_allclose(
            float(np.real(c.conj() @ G.entries @ c)),
            float(np.real(np.vdot(combo * w, combo))),
            rtol=1e-13,
        )

    def test_mixed_lengths_zero_pad(self):
        """Shorter series act as zero-padded columns."""
        G = gram_matrix([polynomial([1.0]), polynomial([0.0, 1.0, 1.0])], NormKind.HARDY)
        np.testing.assert_allclose(G.entries, [[1.0, 0.0], [0.0, 2.0]], atol=0)


class TestMinNormSolve:
    """Weighted minimum-norm interpolation through the dual Gram."""

    def test_single_point_kernel_norm(self):
        """Interpolating value 1 at lam costs exactly 1 - |lam|^2 in squared Hardy norm."""
        for lam in (0.0, 0.3, 0.5 + 0.25j):
            L = 80
            row = np.asarray(np.conj(lam) ** np.arange(L), dtype=complex)
            f, nrm = min_norm_solve(np.ones(L), [(row, 1.0)])
            np.testing.assert_allclose(nrm**2, 1.0 - abs(lam) ** 2, atol=1e-12)
            np.testing.assert_allclose(complex(row @ f.coeffs), 1.0, rtol=1e-12)

    def test_matches_lstsq_on_whitened_system(self):
        """The solution agrees with a least-squares solve of the whitened system."""
        rng = np.random.default_rng(25)
        L, m = 18, 4
        w = rng.uniform(0.5, 3.0, size=L)
        A = rng.normal(size=(m, L)) + 1j * rng.normal(size=(m, L))
        b = rng.normal(size=m) + 1j * rng.normal(size=m)
        f, nrm = min_norm_solve(w, list(zip(A, b)))
        half = np.sqrt(w)
        y, *_ = np.linalg.lstsq(A / half[None, :], b, rcond=None)
        np.testing.assert_allclose(f.coeffs, y / half, atol=1e-10)
        np.testing.assert_allclose(nrm, np.linalg.norm(y), rtol=1e-12)

    def test_duplicate_constraints_rejected(self):
        """A repeated constraint row makes the dual Gram singular."""
        row = np.array([1.0, 0.5, 0.25], dtype=complex)
        with pytest.raises(CertificationError):
            min_norm_solve(np.ones(3), [(row, 1.0), (row, 1.0)])

    def test_row_length_must_match_weights(self):
        """Functional length and weight length are tied together."""
        with pytest.raises(ValueError):
            min_norm_solve(np.ones(4), [(np.ones(3), 1.0)])

    def test_nonpositive_weights_rejected(self):
        """Weights must be strictly positive."""
        with pytest.raises(ValueError):
            min_norm_solve(np.array([1.0, 0.0]), [(np.ones(2), 1.0)])
