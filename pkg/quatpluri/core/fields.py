"""The ∇_{Aα} operators, z^{Aα} coordinates and the standard fields on H^n.

Index conventions: A runs over 0 … 2n-1 and α ∈ {0, 1} stands for 0′, 1′.
For l < n the operators are

    ∇_{l0′}     =  ∂_{4l}   + i ∂_{4l+1}      ∇_{l1′}     = -∂_{4l+2} - i ∂_{4l+3}
    ∇_{(n+l)0′} =  ∂_{4l+2} - i ∂_{4l+3}      ∇_{(n+l)1′} =  ∂_{4l}   - i ∂_{4l+1}
"""

import logging
from collections.abc import Sequence
from functools import lru_cache

import numpy as np

from quatpluri.core.errors import ComplexFieldError, PreconditionError, ShapeError
from quatpluri.core.field_expr import Coord, FieldExpr, Jet2
from quatpluri.core.polynomial import Polynomial

logger = logging.getLogger(__name__)

Field = FieldExpr | Polynomial


@lru_cache(maxsize=16)
def _nabla_table(n: int) -> np.ndarray:
    C = np.zeros((2 * n, 2, 4 * n), dtype=complex)
    for l in range(n):
        C[l, 0, 4 * l] = 1
        C[l, 0, 4 * l + 1] = 1j
        C[l, 1, 4 * l + 2] = -1
        C[l, 1, 4 * l + 3] = -1j
        C[n + l, 0, 4 * l + 2] = 1
        C[n + l, 0, 4 * l + 3] = -1j
        C[n + l, 1, 4 * l] = 1
        C[n + l, 1, 4 * l + 1] = -1j
    C.setflags(write=False)
    return C


def nabla_table(n: int) -> np.ndarray:
    """Coefficients C[A, α, j] with ∇_{Aα} = Σ_j C[A, α, j] ∂/∂x_j (read-only)."""
    if n < 1:
        raise ShapeError(f"n must be >= 1, got {n}")
    return _nabla_table(n)


def half_dim_of(num_vars: int) -> int:
    if num_vars < 4 or num_vars % 4:
        raise ShapeError(f"Fields live on R^{{4n}}, got {num_vars} variables")
    return num_vars // 4


def nabla(A: int, alpha: int, P: Polynomial) -> Polynomial:
    """Apply ∇_{Aα} to a polynomial on R^{4n}."""
    n = half_dim_of(P.num_vars)
    if not 0 <= A < 2 * n or alpha not in (0, 1):
        raise ShapeError(f"No operator ∇_({A},{alpha}') for n={n}")
    row = nabla_table(n)[A, alpha]
    result = Polynomial.zero(P.num_vars)
    for j in np.flatnonzero(row):
        result = result + P.derivative(int(j)).scale(complex(row[j]))
    return result


def nabla_vector(grad: np.ndarray, alpha: int) -> np.ndarray:
    """(∇_{Aα}u)_A at a point, from the real gradient of u there."""
    n = half_dim_of(len(grad))
    return nabla_table(n)[:, alpha, :] @ np.asarray(grad, dtype=complex)


def z_coords(n: int) -> list[list[Polynomial]]:
    """The 2n×2 table z^{Aα}, indexed [A][α]."""
    if n < 1:
        raise ShapeError(f"n must be >= 1, got {n}")
    size = 4 * n

    def x(j: int, coeff: complex = 1.0) -> Polynomial:
        return Polynomial.variable(size, j, coeff)

    table = [[Polynomial.zero(size)] * 2 for _ in range(2 * n)]
    for l in range(n):
        table[l][0] = x(4 * l) + x(4 * l + 1, -1j)
        table[l][1] = x(4 * l + 2, -1) + x(4 * l + 3, 1j)
        table[n + l][0] = x(4 * l + 2) + x(4 * l + 3, 1j)
        table[n + l][1] = x(4 * l) + x(4 * l + 1, 1j)
    return table


def norm_sq(n: int) -> Polynomial:
    """‖q‖² = Σ_j x_j² on R^{4n}."""
    size = 4 * n
    result = Polynomial.zero(size)
    for j in range(size):
        result = result + Polynomial.variable(size, j) ** 2
    return result


def norm_sq_expr(n: int) -> FieldExpr:
    expr: FieldExpr = Coord(0) ** 2
    for j in range(1, 4 * n):
        expr = expr + Coord(j) ** 2
    return expr


def fundamental_expr(n: int, eps: float) -> FieldExpr:
    """-1 / (‖q‖² + ε).

    Raises:
        PreconditionError: If eps is not positive
    """
    if eps <= 0:
        raise PreconditionError(f"eps must be positive, got {eps}")
    return -1.0 / (norm_sq_expr(n) + eps)


def as_field_expr(field: Field) -> FieldExpr:
    return field.to_expr() if isinstance(field, Polynomial) else field


def jet2_eval(field: Field, q: Sequence[float]) -> Jet2:
    """Value, gradient and Hessian of a field at q.

    Raises:
        DivisionByZeroAt: If a denominator vanishes at q
        ShapeError: If the field uses coordinates beyond q
    """
    point = np.asarray(q, dtype=float)
    if isinstance(field, Polynomial):
        if field.num_vars != len(point):
            raise ShapeError(f"Polynomial on R^{field.num_vars} evaluated at R^{len(point)}")
        if not field.is_real():
            raise ComplexFieldError("Jets are defined for real fields only")
        return Jet2(
            field.evaluate(point).real,
            field.gradient(point).real,
            field.hessian(point).real,
        )
    return field.jet(point)
