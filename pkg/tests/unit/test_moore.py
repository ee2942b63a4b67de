"""Tests for structured diagonalization, the Moore determinant and mixed discriminants."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from quatpluri.core import sampling
from quatpluri.core.errors import NotHyperhermitian, ShapeError, StructureError
from quatpluri.core.moore import (
    diagonalize_hyperhermitian,
    eigenvalue_pairs,
    mixed_discriminant,
    moore_det,
    rho_j_vector,
)
from quatpluri.core.quaternion_core import is_hyperhermitian, tau, tau_array
from quatpluri.models.quaternion import QI, QJ, CMatrix, QMatrix


def hyperhermitian(n: int):
    elements = st.floats(min_value=-2, max_value=2, allow_nan=False)
    return arrays(np.float64, (n, n, 4), elements=elements).map(
        lambda c: (QMatrix.from_components(c) + QMatrix.from_components(c).adjoint()).scale(0.5)
    )


class TestRhoJVector:
    """Tests for the antilinear partner map."""

    def test_squares_to_minus_identity(self, rng):
        v = rng.standard_normal(4) + 1j * rng.standard_normal(4)
        assert np.allclose(rho_j_vector(rho_j_vector(v)), -v)

    def test_partner_is_orthogonal(self, rng):
        v = rng.standard_normal(6) + 1j * rng.standard_normal(6)
        assert abs(np.vdot(v, rho_j_vector(v))) < 1e-12

    def test_maps_eigenvectors_to_eigenvectors(self, rng):
        H = tau_array(sampling.random_hyperhermitian(rng, 3))
        values, vectors = np.linalg.eigh(H)
        w = rho_j_vector(vectors[:, 0])
        assert np.allclose(H @ w, values[0] * w, atol=1e-10)


class TestDiagonalizeHyperhermitian:
    """Tests for diagonalize_hyperhermitian."""

    def test_identity(self):
        spectral = diagonalize_hyperhermitian(QMatrix.identity(3))

        assert spectral.nu == pytest.approx((1.0, 1.0, 1.0))
        assert (spectral.E.adjoint() @ spectral.E).max_abs_diff(QMatrix.identity(3)) < 1e-12

    def test_worked_example(self, two_by_two_hyperhermitian):
        spectral = diagonalize_hyperhermitian(two_by_two_hyperhermitian)
        assert spectral.nu == pytest.approx((2 + math.sqrt(2), 2 - math.sqrt(2)))

    def test_random_matrix_is_diagonalized(self, random_hyperhermitian_3):
        M = random_hyperhermitian_3
        spectral = diagonalize_hyperhermitian(M)
        E = spectral.E

        assert (E.adjoint() @ M @ E).max_abs_diff(spectral.diagonal()) < 1e-10
        assert (E.adjoint() @ E).max_abs_diff(QMatrix.identity(3)) < 1e-12
        assert list(spectral.nu) == sorted(spectral.nu, reverse=True)

    def test_degenerate_spectrum(self, rng):
        """A repeated quaternionic eigenvalue still yields a unitary E."""
        E = sampling.random_unitary(rng, 3)
        M = E @ QMatrix.diagonal([2.0, 2.0, -1.0]) @ E.adjoint()
        M = (M + M.adjoint()).scale(0.5)
        spectral = diagonalize_hyperhermitian(M)

        assert spectral.nu == pytest.approx((2.0, 2.0, -1.0))
        assert (spectral.E.adjoint() @ M @ spectral.E).max_abs_diff(spectral.diagonal()) < 1e-10

    def test_rejects_non_hyperhermitian(self):
        with pytest.raises(NotHyperhermitian):
            diagonalize_hyperhermitian(QMatrix.from_rows([[1.0, QI], [QI, 1.0]]))


class TestMooreDet:
    """Tests for moore_det."""

    def test_identity(self):
        assert moore_det(QMatrix.identity(2)) == pytest.approx(1.0)

    def test_worked_example(self, two_by_two_hyperhermitian):
        """Eigenvalues 2 ± √2 give determinant 2."""
        assert moore_det(two_by_two_hyperhermitian) == pytest.approx(2.0, rel=1e-12)

    def test_diagonal(self):
        assert moore_det(QMatrix.diagonal([2.0, -3.0, 0.5])) == pytest.approx(-3.0)

    def test_agrees_with_complex_determinant(self, rng):
        H = sampling.random_complex_hermitian(rng, 4)
        a, _ = H.complex_parts
        assert moore_det(H) == pytest.approx(np.linalg.det(a).real, rel=1e-9)

    def test_square_is_determinant_of_tau(self, random_hyperhermitian_3):
        d = moore_det(random_hyperhermitian_3)
        assert d * d == pytest.approx(np.linalg.det(tau_array(random_hyperhermitian_3)).real, rel=1e-8)

    def test_congruence_product_rule(self, rng):
        M = sampling.random_hyperhermitian(rng, 3)
        C = sampling.random_qmatrix(rng, 3, 3)
        gram = C.adjoint() @ C
        gram = (gram + gram.adjoint()).scale(0.5)
        congruent = C.adjoint() @ M @ C
        congruent = (congruent + congruent.adjoint()).scale(0.5)

        assert moore_det(congruent) == pytest.approx(moore_det(M) * moore_det(gram), rel=1e-7)


class TestMixedDiscriminant:
    """Tests for mixed_discriminant."""

    def test_equal_arguments_give_moore_det(self, random_hyperhermitian_3):
        M = random_hyperhermitian_3
        assert mixed_discriminant([M, M, M]) == pytest.approx(moore_det(M), rel=1e-8)

    def test_diagonal_pair(self):
        """For n = 2: (a1 b2 + a2 b1) / 2."""
        A = QMatrix.diagonal([2.0, 3.0])
        B = QMatrix.diagonal([5.0, 7.0])
        assert mixed_discriminant([A, B]) == pytest.approx((2 * 7 + 3 * 5) / 2)

    def test_symmetric(self, rng):
        Ms = [sampling.random_hyperhermitian(rng, 3) for _ in range(3)]
        assert mixed_discriminant(Ms) == pytest.approx(mixed_discriminant(Ms[::-1]), rel=1e-10)

    @settings(max_examples=25, deadline=None)
    @given(st.lists(hyperhermitian(3), min_size=3, max_size=3), st.permutations(range(3)))
    def test_invariant_under_permutation(self, Ms, order):
        expected = mixed_discriminant(Ms)
        permuted = mixed_discriminant([Ms[i] for i in order])
        assert permuted == pytest.approx(expected, rel=1e-8, abs=1e-8)

    def test_linear_in_first_slot(self, rng):
        A, B, C = (sampling.random_hyperhermitian(rng, 2) for _ in range(3))
        combined = mixed_discriminant([A.scale(2.0) + B, C])
        expected = 2.0 * mixed_discriminant([A, C]) + mixed_discriminant([B, C])
        assert combined == pytest.approx(expected, rel=1e-8, abs=1e-10)

    def test_arguments_at_tolerance_boundary(self):
        """Each argument passes within tol even though their sum would not."""
        M = QMatrix.from_rows([[1.0, 0.9e-9], [0.0, 1.0]])
        assert is_hyperhermitian(M, 1e-9)

        assert mixed_discriminant([M, M], 1e-9) == pytest.approx(1.0)

    def test_count_must_match_size(self):
        with pytest.raises(ShapeError):
            mixed_discriminant([QMatrix.identity(2)])
        with pytest.raises(ShapeError):
            mixed_discriminant([])

    def test_rejects_non_hyperhermitian(self):
        bad = QMatrix.diagonal([QJ])
        with pytest.raises(NotHyperhermitian):
            mixed_discriminant([bad])


class TestEigenvaluePairs:
    """Tests for eigenvalue_pairs."""

    def test_one_value_per_pair(self, two_by_two_hyperhermitian):
        pairs = eigenvalue_pairs(tau(two_by_two_hyperhermitian))
        assert pairs == pytest.approx((2 + math.sqrt(2), 2 - math.sqrt(2)))

    def test_product_is_moore_det(self, random_hyperhermitian_3):
        pairs = eigenvalue_pairs(tau(random_hyperhermitian_3))
        assert math.prod(pairs) == pytest.approx(moore_det(random_hyperhermitian_3), rel=1e-9)

    def test_rejects_matrix_outside_tau_image(self):
        with pytest.raises(StructureError):
            eigenvalue_pairs(CMatrix.from_array(np.diag([1.0, 2.0])))

    def test_rejects_non_hermitian(self):
        M = tau(QMatrix.from_rows([[1.0, 1.0], [0.0, 1.0]]))
        with pytest.raises(StructureError, match="not Hermitian"):
            eigenvalue_pairs(M)

    def test_fixture_is_hyperhermitian(self, random_hyperhermitian_3):
        assert is_hyperhermitian(random_hyperhermitian_3)
