"""Tests for d₀, d₁, the Baston operator and the Monge-Ampère operator."""

import math

import numpy as np
import pytest

from quatpluri.core import sampling
from quatpluri.core.baston import (
    FormField,
    baston_matrix,
    baston_point,
    baston_poly,
    d_op,
    fundamental_check,
    fundamental_integral,
    fundamental_limit,
    fundamental_rhs,
    is_closed,
    ma_mixed,
    quaternionic_hessian,
    quaternionic_hessian_direct,
    wedge_fields,
)
from quatpluri.core.errors import ShapeError
from quatpluri.core.exterior import beta_n, is_real_form, top_coefficient, wedge_all
from quatpluri.core.field_expr import Coord
from quatpluri.core.fields import norm_sq, norm_sq_expr
from quatpluri.core.polynomial import Polynomial
from quatpluri.core.quaternion_core import is_hyperhermitian, j_array, tau_array
from quatpluri.models.quaternion import QMatrix


class TestDOperators:
    """Tests for the symbolic route."""

    def test_d_anticommute_and_square_to_zero(self, rng):
        u = sampling.random_polynomial(rng, 8, degree=4)
        for alpha in (0, 1):
            assert d_op(alpha, d_op(alpha, u)).is_zero()
        assert (d_op(0, d_op(1, u)) + d_op(1, d_op(0, u))).is_zero()

    def test_baston_of_norm_is_eight_beta(self):
        form = baston_poly(norm_sq(2)).evaluate(np.zeros(8))
        assert form.max_abs_diff(beta_n(2).scale(8.0)) == 0.0

    def test_linear_field_is_harmonic(self):
        assert baston_poly(Polynomial.linear([1.0, -2.0, 3.0, 0.5])).is_zero()

    def test_baston_form_is_closed(self, rng):
        u = sampling.random_polynomial(rng, 4, degree=3)
        assert is_closed(baston_poly(u))

    def test_generic_field_is_not_closed(self):
        assert not is_closed(norm_sq(1))

    def test_constants_are_closed(self):
        assert is_closed(Polynomial.constant(4, 2.0))

    def test_wedge_fields_degrees(self):
        F = d_op(0, norm_sq(1))
        G = d_op(1, norm_sq(1))
        product = wedge_fields(F, G)

        assert product.grade == 2
        assert wedge_fields(F, F).is_zero()

    def test_form_field_rejects_mixed_spaces(self):
        with pytest.raises(ShapeError):
            FormField(1, 0, {(): norm_sq(2)})


class TestPointwise:
    """Tests for the Hessian route."""

    def test_symbolic_and_pointwise_agree(self, rng):
        u = sampling.random_polynomial(rng, 8, degree=4)
        point = rng.standard_normal(8)
        assert baston_poly(u).evaluate(point).max_abs_diff(baston_point(u, point)) < 1e-10

    def test_baston_form_is_real(self, rng):
        u = sampling.random_polynomial(rng, 8, degree=3)
        assert is_real_form(baston_point(u, rng.standard_normal(8)), tol=1e-10)

    def test_norm_hessian_is_eight_identity(self):
        H = quaternionic_hessian(norm_sq(2), np.zeros(8))
        assert H.max_abs_diff(QMatrix.identity(2).scale(8.0)) < 1e-14

    def test_single_square(self):
        H = quaternionic_hessian(Coord(0) ** 2, np.zeros(4))
        assert H.max_abs_diff(QMatrix.identity(1).scale(2.0)) < 1e-14

    def test_hessian_routes_agree(self, rng):
        u = sampling.random_polynomial(rng, 8, degree=4)
        point = rng.standard_normal(8)
        H = quaternionic_hessian(u, point)

        assert H.max_abs_diff(quaternionic_hessian_direct(u, point)) < 1e-10
        assert is_hyperhermitian(H)

    def test_tau_hessian_relation(self, rng):
        u = sampling.random_polynomial(rng, 8, degree=3)
        point = rng.standard_normal(8)
        lhs = tau_array(quaternionic_hessian(u, point)) @ j_array(2)
        assert np.allclose(lhs, 2 * baston_matrix(u, point).array, atol=1e-10)


class TestMongeAmpere:
    """Tests for ma_mixed."""

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_norm_copies(self, n):
        us = [norm_sq_expr(n)] * n
        assert ma_mixed(us, np.zeros(4 * n)) == pytest.approx(8.0**n)

    def test_single_square(self):
        assert ma_mixed([Coord(0) ** 2], [0.3, 0.1, 0.0, 0.0]) == pytest.approx(2.0)

    def test_linear_field_vanishes(self):
        linear = Coord(0) + 2.0 * Coord(5)
        assert ma_mixed([linear, norm_sq_expr(2)], np.ones(8)) == pytest.approx(0.0, abs=1e-12)

    def test_squares_in_different_slots(self):
        """x0² and x4² on H² give 2."""
        assert ma_mixed([Coord(0) ** 2, Coord(4) ** 2], np.zeros(8)) == pytest.approx(2.0)

    def test_matches_wedge_of_baston_forms(self, rng):
        n = 2
        us = [sampling.random_polynomial(rng, 4 * n, degree=4, min_degree=2) for _ in range(n)]
        point = rng.standard_normal(4 * n)
        wedge = top_coefficient(wedge_all([baston_point(u, point) for u in us]))
        expected = math.factorial(n) * ma_mixed(us, point)

        assert wedge.real == pytest.approx(expected, rel=1e-8, abs=1e-8)

    def test_field_count(self):
        with pytest.raises(ShapeError):
            ma_mixed([norm_sq_expr(2)], np.zeros(8))


class TestFundamentalSolution:
    """Tests for the regularized fundamental solution."""

    def test_at_origin(self):
        lhs, rhs = fundamental_check(1, 1.0, np.zeros(4))
        assert rhs == pytest.approx(8.0)
        assert lhs == pytest.approx(8.0, rel=1e-12)

    def test_on_unit_sphere(self):
        lhs, rhs = fundamental_check(1, 1.0, [1.0, 0.0, 0.0, 0.0])
        assert rhs == pytest.approx(1.0)
        assert lhs == pytest.approx(1.0, rel=1e-12)

    @pytest.mark.parametrize("n", [1, 2])
    def test_random_points(self, n, rng):
        q = rng.standard_normal(4 * n)
        lhs, rhs = fundamental_check(n, 0.5, q)
        assert lhs == pytest.approx(rhs, rel=1e-8)

    def test_limit_approaches_constant(self):
        q = np.array([0.6, 0.0, 0.8, 0.0])
        assert fundamental_limit(1, q, 1e-6) == pytest.approx(8.0, rel=1e-4)

    def test_rhs_formula(self):
        assert fundamental_rhs(2, 1.0, 0.0) == pytest.approx(128.0)

    def test_point_shape(self):
        with pytest.raises(ShapeError):
            fundamental_check(2, 1.0, np.zeros(4))

    def test_total_mass(self):
        result = fundamental_integral(1)
        assert result.expected == pytest.approx(4 * math.pi**2)
        assert result.relative_error < 1e-2
        assert result.tail_bound < 1e-3
