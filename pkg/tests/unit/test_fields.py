"""Tests for the ∇ operators, z coordinates and standard fields."""

import numpy as np
import pytest

from quatpluri.core.errors import ComplexFieldError, PreconditionError, ShapeError
from quatpluri.core.field_expr import Coord
from quatpluri.core.fields import (
    fundamental_expr,
    half_dim_of,
    jet2_eval,
    nabla,
    nabla_table,
    nabla_vector,
    norm_sq,
    norm_sq_expr,
    z_coords,
)
from quatpluri.core.polynomial import Polynomial


class TestNablaOnCoordinates:
    """∇_{Aα} z^{Bβ} = 2 δ_AB δ_αβ."""

    @pytest.mark.parametrize("n", [1, 2])
    def test_duality_table(self, n):
        z = z_coords(n)
        for A in range(2 * n):
            for alpha in (0, 1):
                for B in range(2 * n):
                    for beta in (0, 1):
                        value = nabla(A, alpha, z[B][beta])
                        expected = 2.0 if (A, alpha) == (B, beta) else 0.0
                        assert value.max_abs_diff(Polynomial.constant(4 * n, expected)) == 0.0

    def test_norm_gradient(self):
        n = 2
        z = z_coords(n)
        for A in range(2 * n):
            for alpha in (0, 1):
                expected = z[A][alpha].conj().scale(2)
                assert nabla(A, alpha, norm_sq(n)).max_abs_diff(expected) == 0.0

    def test_nabla_vector_matches_symbolic(self, rng):
        P = norm_sq(1) * Polynomial.variable(4, 2)
        point = rng.standard_normal(4)
        for alpha in (0, 1):
            pointwise = nabla_vector(P.gradient(point).real, alpha)
            symbolic = [nabla(A, alpha, P).evaluate(point) for A in range(2)]
            assert np.allclose(pointwise, symbolic)

    def test_unknown_operator(self):
        with pytest.raises(ShapeError):
            nabla(2, 0, norm_sq(1))

    def test_table_is_read_only(self):
        with pytest.raises(ValueError):
            nabla_table(1)[0, 0, 0] = 5


class TestHalfDim:
    def test_valid(self):
        assert half_dim_of(8) == 2

    @pytest.mark.parametrize("num_vars", [0, 3, 6])
    def test_invalid(self, num_vars):
        with pytest.raises(ShapeError):
            half_dim_of(num_vars)


class TestStandardFields:
    """Tests for ‖q‖² and the regularized fundamental solution."""

    def test_norm_sq_forms_agree(self, rng):
        point = rng.standard_normal(8)
        assert norm_sq_expr(2).evaluate(point) == pytest.approx(norm_sq(2).evaluate(point).real)

    def test_fundamental_value(self):
        assert fundamental_expr(1, 1.0).evaluate([1.0, 0.0, 0.0, 0.0]) == pytest.approx(-0.5)

    @pytest.mark.parametrize("eps", [0.0, -1e-3])
    def test_fundamental_needs_positive_eps(self, eps):
        with pytest.raises(PreconditionError):
            fundamental_expr(1, eps)


class TestJet2Eval:
    """Tests for jet2_eval on both field representations."""

    def test_polynomial_and_expression_agree(self, rng):
        point = rng.standard_normal(4)
        from_poly = jet2_eval(norm_sq(1), point)
        from_expr = jet2_eval(norm_sq_expr(1), point)

        assert from_poly.value == pytest.approx(from_expr.value)
        assert np.allclose(from_poly.hess, 2 * np.eye(4))
        assert np.allclose(from_expr.hess, 2 * np.eye(4))

    def test_point_dimension_must_match(self):
        with pytest.raises(ShapeError):
            jet2_eval(norm_sq(1), [0.0] * 8)

    def test_complex_polynomial_rejected(self):
        with pytest.raises(ComplexFieldError):
            jet2_eval(Polynomial.variable(4, 0, 1j), [0.0] * 4)

    def test_expression_uses_point_size(self):
        jet = jet2_eval(Coord(0) ** 2, [1.0, 0.0, 0.0, 0.0])
        assert jet.hess.shape == (4, 4)
