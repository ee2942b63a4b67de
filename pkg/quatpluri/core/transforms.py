"""Quaternionic linear changes of variables q ↦ U q.

Fields use the interleaved coordinate order x_{4l+β}; the real representation
U^R acts in block order (x⁽⁰⁾, …, x⁽³⁾). The permutation P with q^R = P x
converts between them, so U acts on x-coordinates by L = Pᵗ U^R P.
"""

import logging
from collections.abc import Sequence
from enum import Enum
from functools import lru_cache

import numpy as np

from quatpluri.core.baston import baston_point
from quatpluri.core.errors import ShapeError, SingularError
from quatpluri.core.exterior import act_matrix_on_form
from quatpluri.core.field_expr import Coord, FieldExpr
from quatpluri.core.fields import Field, as_field_expr, jet2_eval, nabla_vector
from quatpluri.core.polynomial import Polynomial
from quatpluri.core.quaternion_core import real_rep, tau_array
from quatpluri.models.form import Form
from quatpluri.models.quaternion import CMatrix, QMatrix

logger = logging.getLogger(__name__)

SINGULAR_RCOND = 1e-12


class InvarianceKind(str, Enum):
    D0 = "d0"
    D1 = "d1"
    BASTON = "baston"


@lru_cache(maxsize=16)
def _block_permutation(n: int) -> np.ndarray:
    P = np.zeros((4 * n, 4 * n))
    for beta in range(4):
        for l in range(n):
            P[beta * n + l, 4 * l + beta] = 1.0
    P.setflags(write=False)
    return P


def block_permutation(n: int) -> np.ndarray:
    """Permutation P with q^R = P x (block order from interleaved order)."""
    if n < 1:
        raise ShapeError(f"n must be >= 1, got {n}")
    return _block_permutation(n)


def x_order_map(U: QMatrix) -> np.ndarray:
    """Real 4n×4n matrix L with x(Uq) = L x(q) in interleaved coordinates."""
    if not U.is_square:
        raise ShapeError(f"Expected a square matrix, got {U.shape}")
    P = block_permutation(U.rows)
    return P.T @ real_rep(U).array @ P


def _linear_images(L: np.ndarray) -> list[FieldExpr]:
    images: list[FieldExpr] = []
    for row in L:
        expr: FieldExpr | None = None
        for k, c in enumerate(row):
            if c == 0:
                continue
            term = Coord(k) if c == 1 else float(c) * Coord(k)
            expr = term if expr is None else expr + term
        images.append(expr if expr is not None else 0.0 * Coord(0))
    return images


def pullback_field(U: QMatrix, e: Field) -> FieldExpr:
    """The field q ↦ e(U q)."""
    return as_field_expr(e).substitute(_linear_images(x_order_map(U)))


def pullback_polynomial(U: QMatrix, P: Polynomial) -> Polynomial:
    """The polynomial q ↦ P(U q), substituted exactly."""
    return P.compose_linear(x_order_map(U))


def _check_point(U: QMatrix, q: Sequence[float]) -> np.ndarray:
    point = np.asarray(q, dtype=float)
    if point.shape != (4 * U.rows,):
        raise ShapeError(f"Expected a point in R^{4 * U.rows}, got shape {point.shape}")
    return point


def chain_rule_check(U: QMatrix, e: Field, q: Sequence[float]) -> float:
    """Residual of ∇_{Aα}u|_q = Σ_B conj(τ(U))_{BA} ∇̃_{Bα}e|_{Uq} for u = e∘U.

    Raises:
        DivisionByZeroAt: If e is not evaluable at U q
    """
    point = _check_point(U, q)
    image = x_order_map(U) @ point
    pulled = pullback_field(U, e)
    grad_u = jet2_eval(pulled, point).grad
    grad_e = jet2_eval(as_field_expr(e), image).grad
    T = tau_array(U).conj()
    residual = 0.0
    for alpha in (0, 1):
        lhs = nabla_vector(grad_u, alpha)
        rhs = T.T @ nabla_vector(grad_e, alpha)
        residual = max(residual, float(np.max(np.abs(lhs - rhs))))
    return residual


def basis_change(U: QMatrix) -> CMatrix:
    """conj(τ(U)), sending ω^A to the transformed basis ω̃^A under act_matrix_on_form.

    act(basis_change(U V)) equals act(basis_change(V)) applied after
    act(basis_change(U)).

    Raises:
        SingularError: If τ(U) is numerically singular
    """
    T = tau_array(U)
    s = np.linalg.svd(T, compute_uv=False)
    if s[-1] <= SINGULAR_RCOND * max(s[0], 1.0):
        raise SingularError(f"Matrix is numerically singular (sigma_min {s[-1]:.3e})")
    return CMatrix.from_array(T.conj())


def transformed_form(U: QMatrix, F: Form) -> Form:
    """Re-express a form given in the ω̃ basis in the ω basis."""
    return act_matrix_on_form(basis_change(U), F)


def invariance_check(
    U: QMatrix, e: Field, q: Sequence[float], which: InvarianceKind | str
) -> float:
    """Compare d_α u (or Δu) at q with d̃_α e (or Δ̃e) at U q expressed in the ω basis.

    Returns:
        Max coefficient discrepancy

    Raises:
        DivisionByZeroAt: If e is not evaluable at U q
    """
    which = InvarianceKind(which)
    point = _check_point(U, q)
    image = x_order_map(U) @ point
    pulled = pullback_field(U, e)
    n = U.rows

    if which is InvarianceKind.BASTON:
        here = baston_point(pulled, point)
        there = baston_point(as_field_expr(e), image)
    else:
        alpha = 0 if which is InvarianceKind.D0 else 1
        here = Form.one_form(n, nabla_vector(jet2_eval(pulled, point).grad, alpha))
        there = Form.one_form(n, nabla_vector(jet2_eval(as_field_expr(e), image).grad, alpha))
    return here.max_abs_diff(transformed_form(U, there))
