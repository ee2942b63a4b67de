"""Tests for exterior forms, the real structure and the matrix dictionary."""

import math
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from quatpluri.core import sampling
from quatpluri.core.errors import GradeError, NotReal, NotSkew, ShapeError
from quatpluri.core.exterior import (
    act_matrix_on_form,
    beta_n,
    delta_n,
    elementary_strongly_positive,
    form_to_matrix,
    hh_to_2form,
    is_real_form,
    is_strongly_positive_2form,
    matrix_to_2form,
    normalization_residual,
    normalize_real_2form,
    omega_2n,
    pullback,
    rho_j,
    top_coefficient,
    wedge,
    wedge_all,
    wedge_power,
)
from quatpluri.core.moore import mixed_discriminant
from quatpluri.core.quaternion_core import j_array, tau_array
from quatpluri.models.form import Form, sort_with_sign
from quatpluri.models.quaternion import CMatrix, QMatrix


def _real_skew(M: QMatrix) -> CMatrix:
    return CMatrix.from_array(tau_array(M) @ j_array(M.rows))


def integer_forms(half_dim: int, grade: int):
    """Forms with small complex-integer coefficients, so products stay exact."""
    keys = list(combinations(range(2 * half_dim), grade))

    def build(parts: np.ndarray) -> Form:
        coeffs = {k: complex(re, im) for k, (re, im) in zip(keys, parts, strict=True)}
        return Form(half_dim, grade, coeffs)

    elements = st.integers(min_value=-3, max_value=3)
    return arrays(np.int64, (len(keys), 2), elements=elements).map(build)


class TestSortWithSign:
    def test_transposition_count(self):
        assert sort_with_sign([2, 0, 1]) == (1, (0, 1, 2))
        assert sort_with_sign([1, 0]) == (-1, (0, 1))

    def test_repeated_index_vanishes(self):
        assert sort_with_sign([1, 3, 1])[0] == 0


class TestWedge:
    """Tests for wedge products."""

    def test_one_forms_anticommute(self, rng):
        a = Form.one_form(2, rng.standard_normal(4))
        b = Form.one_form(2, rng.standard_normal(4))
        assert wedge(a, b).max_abs_diff(-wedge(b, a)) < 1e-14

    def test_one_form_squares_to_zero(self, rng):
        a = Form.one_form(2, rng.standard_normal(4) + 1j * rng.standard_normal(4))
        assert wedge(a, a).max_abs() < 1e-14

    def test_beta_power_is_factorial_times_volume(self):
        for n in (1, 2, 3):
            assert top_coefficient(wedge_power(beta_n(n), n)) == pytest.approx(math.factorial(n))

    def test_power_zero_is_one(self):
        assert wedge_power(beta_n(2), 0) == Form.scalar(2, 1.0)

    def test_mismatched_dimensions(self):
        with pytest.raises(ShapeError):
            wedge(beta_n(1), beta_n(2))

    def test_wedge_all_needs_forms(self):
        with pytest.raises(ValueError):
            wedge_all([])


class TestAlgebraicProperties:
    """Exact identities on random integer forms over C^4."""

    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, 4), st.integers(0, 4), st.data())
    def test_graded_commutative(self, k, l, data):
        F = data.draw(integer_forms(2, k))
        G = data.draw(integer_forms(2, l))
        assert wedge(F, G).max_abs_diff(wedge(G, F).scale((-1) ** (k * l))) == 0.0

    @settings(max_examples=30, deadline=None)
    @given(integer_forms(2, 1), integer_forms(2, 2), integer_forms(2, 1))
    def test_associative(self, F, G, H):
        assert wedge(wedge(F, G), H).max_abs_diff(wedge(F, wedge(G, H))) == 0.0

    @settings(max_examples=40, deadline=None)
    @given(st.sampled_from([0, 2, 4]), st.data())
    def test_rho_j_squares_to_identity_on_even_grades(self, k, data):
        F = data.draw(integer_forms(2, k))
        assert rho_j(rho_j(F)).max_abs_diff(F) == 0.0

    @settings(max_examples=30, deadline=None)
    @given(integer_forms(2, 2), integer_forms(2, 2))
    def test_rho_j_is_multiplicative(self, F, G):
        assert rho_j(wedge(F, G)).max_abs_diff(wedge(rho_j(F), rho_j(G))) == 0.0


class TestRealStructure:
    """Tests for rho(j) and reality."""

    def test_beta_is_real(self):
        assert is_real_form(beta_n(3))

    def test_imaginary_multiple_is_not_real(self):
        assert not is_real_form(Form.basis(1, 0, 1, coeff=1j))

    def test_rho_j_is_involution_on_even_grades(self):
        F = Form(2, 2, {(0, 1): 1 + 2j, (1, 3): -0.5j, (2, 3): 3.0})
        assert rho_j(rho_j(F)).max_abs_diff(F) < 1e-15

    def test_rho_j_squares_to_minus_on_one_forms(self, rng):
        F = Form.one_form(2, rng.standard_normal(4) + 1j * rng.standard_normal(4))
        assert rho_j(rho_j(F)).max_abs_diff(-F) < 1e-15

    def test_odd_grade_has_no_reality(self):
        with pytest.raises(GradeError):
            is_real_form(Form.basis(2, 0))

    def test_forms_of_hyperhermitian_matrices_are_real(self, random_hyperhermitian_3):
        assert is_real_form(hh_to_2form(random_hyperhermitian_3))


class TestMatrixDictionary:
    """Tests for the skew matrix ↔ 2-form correspondence."""

    def test_identity_gives_twice_beta(self):
        assert hh_to_2form(QMatrix.identity(2)).max_abs_diff(beta_n(2).scale(2.0)) < 1e-15

    def test_form_to_matrix_inverts(self, rng):
        X = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
        M = CMatrix.from_array(X - X.T)
        assert form_to_matrix(matrix_to_2form(M)).max_abs_diff(M) < 1e-14

    def test_rejects_non_skew(self):
        with pytest.raises(NotSkew):
            matrix_to_2form(CMatrix.from_array(np.eye(2)))

    def test_form_to_matrix_needs_grade_two(self):
        with pytest.raises(GradeError):
            form_to_matrix(Form.basis(2, 0))


class TestTopDegree:
    """Tests for Ω_{2n}, top coefficients and Δₙ."""

    def test_omega_ordering_sign(self):
        assert omega_2n(2).coefficient((0, 1, 2, 3)) == -1

    def test_omega_one(self):
        assert omega_2n(1) == Form.basis(1, 0, 1)

    def test_top_coefficient_of_omega(self):
        assert top_coefficient(omega_2n(3)) == pytest.approx(1.0)

    def test_top_coefficient_needs_top_grade(self):
        with pytest.raises(GradeError):
            top_coefficient(beta_n(2))

    def test_delta_one(self):
        """Δ₁(τ(a)J) = 2a."""
        assert delta_n([_real_skew(QMatrix.identity(1).scale(1.5))]) == pytest.approx(3.0)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_delta_is_scaled_mixed_discriminant(self, n, rng):
        Ms = [sampling.random_hyperhermitian(rng, n) for _ in range(n)]
        delta = delta_n([_real_skew(M) for M in Ms])
        expected = 2**n * math.factorial(n) * mixed_discriminant(Ms)

        assert abs(delta.imag) < 1e-10
        assert delta.real == pytest.approx(expected, rel=1e-8, abs=1e-10)

    def test_delta_rejects_non_real_form(self):
        M = CMatrix.from_array(np.array([[0, 1j], [-1j, 0]]))
        with pytest.raises(NotReal):
            delta_n([M])

    def test_delta_count_must_match_size(self):
        with pytest.raises(ShapeError):
            delta_n([_real_skew(QMatrix.identity(2))])


class TestNormalization:
    """Tests for normalize_real_2form."""

    def test_diagonal_example(self):
        F = hh_to_2form(QMatrix.diagonal([3.0, -1.0]))
        spectral = normalize_real_2form(F)

        assert spectral.nu == pytest.approx((3.0, -1.0))
        assert normalization_residual(form_to_matrix(F), spectral) < 1e-12

    def test_random_real_form(self, rng):
        M = sampling.random_skew(rng, 3, real=True)
        spectral = normalize_real_2form(matrix_to_2form(M))

        assert normalization_residual(M, spectral) < 1e-10
        assert list(spectral.nu) == sorted(spectral.nu, reverse=True)

    def test_rejects_non_real(self):
        with pytest.raises(NotReal):
            normalize_real_2form(Form.basis(1, 0, 1, coeff=1j))

    def test_rejects_other_grades(self):
        with pytest.raises(GradeError):
            normalize_real_2form(omega_2n(2))


class TestPositivity:
    """Tests for strong positivity and elementary forms."""

    def test_identity_form_is_strongly_positive(self):
        assert is_strongly_positive_2form(hh_to_2form(QMatrix.identity(2)))

    def test_indefinite_form_is_not(self):
        assert not is_strongly_positive_2form(hh_to_2form(QMatrix.diagonal([1.0, -1.0])))

    def test_zero_form_is_not(self):
        assert not is_strongly_positive_2form(Form.zero(2, 2))

    def test_coordinate_maps_give_volume(self):
        e0 = QMatrix.from_rows([[1.0, 0.0]])
        e1 = QMatrix.from_rows([[0.0, 1.0]])

        assert elementary_strongly_positive([e0], 2).max_abs_diff(Form.basis(2, 0, 2)) < 1e-15
        assert top_coefficient(elementary_strongly_positive([e0, e1], 2)) == pytest.approx(1.0)

    def test_elementary_forms_are_real(self, rng):
        etas = [sampling.random_qmatrix(rng, 1, 3) for _ in range(2)]
        assert is_real_form(elementary_strongly_positive(etas, 3), tol=1e-10)

    def test_no_maps_gives_one(self):
        assert elementary_strongly_positive([], 2) == Form.scalar(2, 1.0)

    def test_too_many_maps(self):
        eta = QMatrix.from_rows([[1.0]])
        with pytest.raises(ShapeError):
            elementary_strongly_positive([eta, eta], 1)


class TestLinearActions:
    """Tests for act_matrix_on_form and pullback."""

    def test_identity_action(self):
        F = Form(2, 2, {(0, 1): 1.0, (1, 3): 2j})
        assert act_matrix_on_form(CMatrix.from_array(np.eye(4)), F).max_abs_diff(F) < 1e-15

    def test_action_on_top_form_is_determinant(self, rng):
        X = rng.standard_normal((4, 4))
        image = act_matrix_on_form(CMatrix.from_array(X), omega_2n(2))
        assert top_coefficient(image) == pytest.approx(np.linalg.det(X))

    def test_action_shape_mismatch(self):
        with pytest.raises(ShapeError):
            act_matrix_on_form(CMatrix.from_array(np.eye(2)), beta_n(2))

    def test_pullback_along_identity(self):
        assert pullback(QMatrix.identity(2), beta_n(2)).max_abs_diff(beta_n(2)) < 1e-15

    def test_pullback_rejects_wrong_target(self):
        with pytest.raises(ShapeError):
            pullback(QMatrix.identity(3), beta_n(2))
