"""The operators d₀, d₁, the Baston operator and the quaternionic Monge-Ampère operator.

For a real function u on H^n = R^{4n}, d_α u = Σ_A ∇_{Aα}u ω^A and the Baston
operator is Δu = d₀d₁u, whose coefficient matrix is

    Δ_AB u = ½ (∇_{A0′}∇_{B1′}u - ∇_{B0′}∇_{A1′}u).

There are two routes: symbolic on polynomial form fields, and pointwise from
the real Hessian of a field expression.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field

import numpy as np
from scipy import integrate

from quatpluri.core.errors import ShapeError
from quatpluri.core.exterior import matrix_to_2form, top_coefficient, wedge_power
from quatpluri.core.fields import (
    Field,
    fundamental_expr,
    half_dim_of,
    jet2_eval,
    nabla,
    nabla_table,
)
from quatpluri.core.moore import mixed_discriminant
from quatpluri.core.polynomial import Polynomial
from quatpluri.core.quaternion_core import DEFAULT_TOL
from quatpluri.models.form import Form, Index, sort_with_sign
from quatpluri.models.quaternion import ONE, QI, QJ, QK, CMatrix, QMatrix, Quaternion

logger = logging.getLogger(__name__)


# ===== Polynomial form fields =====


@dataclass(frozen=True)
class FormField:
    """Σ_I f_I ω^I with polynomial coefficients f_I on R^{4n}."""

    half_dim: int
    grade: int
    terms: Mapping[Index, Polynomial] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean: dict[Index, Polynomial] = {}
        for key, coeff in self.terms.items():
            key = tuple(int(i) for i in key)
            if len(key) != self.grade or any(a >= b for a, b in zip(key, key[1:], strict=False)):
                raise ValueError(f"Key {key} is not a strictly increasing grade-{self.grade} key")
            if key and (key[0] < 0 or key[-1] >= 2 * self.half_dim):
                raise ValueError(f"Key {key} out of range for C^{2 * self.half_dim}")
            if coeff.num_vars != self.num_vars:
                raise ShapeError(f"Coefficient on {key} is not a polynomial on R^{self.num_vars}")
            if not coeff.is_zero():
                clean[key] = coeff
        object.__setattr__(self, "terms", clean)

    @property
    def num_vars(self) -> int:
        return 4 * self.half_dim

    @classmethod
    def scalar(cls, u: Polynomial) -> FormField:
        return cls(half_dim_of(u.num_vars), 0, {(): u})

    @classmethod
    def zero(cls, half_dim: int, grade: int) -> FormField:
        return cls(half_dim, grade, {})

    @classmethod
    def coerce(cls, value: FormField | Polynomial) -> FormField:
        return value if isinstance(value, FormField) else cls.scalar(value)

    def coefficient(self, key: Index) -> Polynomial:
        return self.terms.get(tuple(key), Polynomial.zero(self.num_vars))

    def is_zero(self) -> bool:
        return not self.terms

    def _check_compatible(self, other: FormField) -> None:
        if (self.half_dim, self.grade) != (other.half_dim, other.grade):
            raise ShapeError(
                f"Incompatible form fields: (n={self.half_dim}, k={self.grade}) vs "
                f"(n={other.half_dim}, k={other.grade})"
            )

    def __add__(self, other: FormField) -> FormField:
        self._check_compatible(other)
        terms = dict(self.terms)
        for key, coeff in other.terms.items():
            terms[key] = terms[key] + coeff if key in terms else coeff
        return FormField(self.half_dim, self.grade, terms)

    def __neg__(self) -> FormField:
        return self.scale(-1)

    def __sub__(self, other: FormField) -> FormField:
        return self + (-other)

    def scale(self, factor: complex | Polynomial) -> FormField:
        return FormField(
            self.half_dim, self.grade, {k: c * factor for k, c in self.terms.items()}
        )

    def max_abs(self) -> float:
        return max((c.max_abs() for c in self.terms.values()), default=0.0)

    def max_abs_diff(self, other: FormField) -> float:
        return (self - other).max_abs()

    def evaluate(self, point: Sequence[float]) -> Form:
        """The constant form obtained by evaluating every coefficient at a point."""
        return Form(
            self.half_dim, self.grade, {k: c.evaluate(point) for k, c in self.terms.items()}
        )


def wedge_fields(F: FormField, G: FormField) -> FormField:
    """F∧G with polynomial coefficients multiplied."""
    if F.half_dim != G.half_dim:
        raise ShapeError("Cannot wedge form fields over different spaces")
    terms: dict[Index, Polynomial] = {}
    for key_f, c_f in F.terms.items():
        for key_g, c_g in G.terms.items():
            sign, key = sort_with_sign(key_f + key_g)
            if sign:
                product = (c_f * c_g).scale(sign)
                terms[key] = terms[key] + product if key in terms else product
    return FormField(F.half_dim, F.grade + G.grade, terms)


def d_op(alpha: int, F: FormField | Polynomial) -> FormField:
    """d_α F = Σ_I Σ_A ∇_{Aα} f_I ω^A∧ω^I; raises the grade by one."""
    F = FormField.coerce(F)
    n = F.half_dim
    terms: dict[Index, Polynomial] = {}
    for key, coeff in F.terms.items():
        for A in range(2 * n):
            sign, new_key = sort_with_sign((A,) + key)
            if not sign:
                continue
            term = nabla(A, alpha, coeff).scale(sign)
            terms[new_key] = terms[new_key] + term if new_key in terms else term
    return FormField(n, F.grade + 1, terms)


def is_closed(F: FormField | Polynomial) -> bool:
    """True iff d₀F = 0 and d₁F = 0 exactly."""
    return d_op(0, F).is_zero() and d_op(1, F).is_zero()


def baston_poly(u: Polynomial) -> FormField:
    """Δu = d₀d₁u; the coefficient on (A, B), A < B, is 2Δ_AB u."""
    return d_op(0, d_op(1, u))


# ===== Pointwise route =====


def _require_point(u: Field, q: Sequence[float]) -> tuple[int, np.ndarray]:
    point = np.asarray(q, dtype=float)
    n = half_dim_of(len(point))
    if isinstance(u, Polynomial) and u.num_vars != len(point):
        raise ShapeError(f"Polynomial on R^{u.num_vars} evaluated at R^{len(point)}")
    return n, point


def baston_matrix_from_hessian(hess: np.ndarray) -> np.ndarray:
    """Skew matrix (Δ_AB u) from the real 4n×4n Hessian of u."""
    n = half_dim_of(hess.shape[0])
    C = nabla_table(n)
    # G[A, B] = ∇_{A0′}∇_{B1′}u
    G = np.einsum("aj,jk,bk->ab", C[:, 0, :], hess, C[:, 1, :])
    return 0.5 * (G - G.T)


def baston_matrix(u: Field, q: Sequence[float]) -> CMatrix:
    """(Δ_AB u)(q) as a complex skew 2n×2n matrix.

    Raises:
        DivisionByZeroAt: If the field is not evaluable at q
    """
    _, point = _require_point(u, q)
    return CMatrix.from_array(baston_matrix_from_hessian(jet2_eval(u, point).hess))


def baston_point(u: Field, q: Sequence[float]) -> Form:
    """The 2-form Δu at q, i.e. matrix_to_2form of (Δ_AB u)(q).

    Raises:
        DivisionByZeroAt: If the field is not evaluable at q
    """
    return matrix_to_2form(baston_matrix(u, q))


def quaternionic_hessian(u: Field, q: Sequence[float]) -> QMatrix:
    """The hyperhermitian matrix (∂²u/∂q̄_l∂q_k) at q.

    Assembled as 2(Δ_{l(n+k)}u + Δ_{lk}u j), so that τ(Hess) J = 2(Δ_AB u).

    Raises:
        DivisionByZeroAt: If the field is not evaluable at q
    """
    n, _ = _require_point(u, q)
    D = baston_matrix(u, q).array
    H = QMatrix.from_complex_parts(2.0 * D[:n, n:], 2.0 * D[:n, :n])
    # hyperhermitian up to rounding; project onto the exact subspace
    return (H + H.adjoint()).scale(0.5)


_UNITS = (ONE, QI, QJ, QK)


def quaternionic_hessian_direct(u: Field, q: Sequence[float]) -> QMatrix:
    """(∂/∂q̄_l)(∂/∂q_k)u computed by quaternion arithmetic on the real Hessian.

    ∂/∂q̄ = Σ_a e_a ∂_a and ∂/∂q = Σ_b ∂_b ē_b, so the (l, k) entry is
    Σ_{a,b} e_a ē_b ∂²u/∂x_{4l+a}∂x_{4k+b}.
    """
    n, point = _require_point(u, q)
    hess = jet2_eval(u, point).hess
    rows = []
    for l in range(n):
        row = []
        for k in range(n):
            entry = Quaternion()
            for a, e_a in enumerate(_UNITS):
                for b, e_b in enumerate(_UNITS):
                    entry = entry + (e_a * e_b.conj()) * float(hess[4 * l + a, 4 * k + b])
            row.append(entry)
        rows.append(row)
    return QMatrix.from_rows(rows)


def ma_mixed(us: Sequence[Field], q: Sequence[float], tol: float = DEFAULT_TOL) -> float:
    """Mixed quaternionic Monge-Ampère operator det(u₁, …, uₙ) at q.

    Raises:
        ShapeError: If the number of fields differs from n
        DivisionByZeroAt: If some field is not evaluable at q
    """
    point = np.asarray(q, dtype=float)
    n = half_dim_of(len(point))
    if len(us) != n:
        raise ShapeError(f"Expected {n} fields for a point in R^{4 * n}, got {len(us)}")
    hessians = [quaternionic_hessian(f, point) for f in us]
    scale = max((h.max_abs() for h in hessians), default=1.0)
    return mixed_discriminant(hessians, tol * max(1.0, scale))


# ===== Fundamental solution =====


def fundamental_rhs(n: int, eps: float, s: float) -> float:
    """8ⁿ n! ε / (s + ε)^{2n+1} with s = ‖q‖²."""
    return 8.0**n * math.factorial(n) * eps / (s + eps) ** (2 * n + 1)


def fundamental_check(n: int, eps: float, q: Sequence[float]) -> tuple[float, float]:
    """Compare (Δu)^{∧n} for u = -1/(‖q‖²+ε) with its closed form.

    Returns:
        (lhs, rhs): the Ω_{2n} coefficient of (Δu)^{∧n} at q, and
        8ⁿ n! ε/(‖q‖²+ε)^{2n+1}
    """
    point = np.asarray(q, dtype=float)
    if point.shape != (4 * n,):
        raise ShapeError(f"Expected a point in R^{4 * n}, got shape {point.shape}")
    form = baston_point(fundamental_expr(n, eps), point)
    lhs = top_coefficient(wedge_power(form, n))
    return float(lhs.real), fundamental_rhs(n, eps, float(point @ point))


def fundamental_limit(n: int, q: Sequence[float], eps: float) -> float:
    """|lhs(ε)| (‖q‖²)^{2n+1} / ε, which tends to 8ⁿ n! as ε → 0 for q ≠ 0."""
    lhs, _ = fundamental_check(n, eps, q)
    s = float(np.dot(q, q))
    return abs(lhs) * s ** (2 * n + 1) / eps


@dataclass(frozen=True)
class IntegralResult:
    value: float
    expected: float
    tail_bound: float

    @property
    def relative_error(self) -> float:
        return abs(self.value - self.expected) / abs(self.expected)


def fundamental_integral(n: int, eps: float = 1.0, cutoff: float = 1e3) -> IntegralResult:
    """Integrate 8ⁿ n! ε/(‖q‖²+ε)^{2n+1} over R^{4n} radially.

    The sphere S^{4n-1} has area 2π^{2n}/(2n-1)!. Quadrature runs up to the
    cutoff; beyond it the integrand is bounded by K r^{-3}, giving a tail of
    at most K/(2R²). The exact total is 8ⁿ n! π^{2n}/(2n)!.
    """
    area = 2.0 * math.pi ** (2 * n) / math.factorial(2 * n - 1)
    K = 8.0**n * math.factorial(n) * eps * area

    def radial(r: float) -> float:
        return K * r ** (4 * n - 1) / (r * r + eps) ** (2 * n + 1)

    knee = 10.0 * math.sqrt(eps)
    inner, _ = integrate.quad(radial, 0.0, knee, limit=200)
    outer, _ = integrate.quad(radial, knee, cutoff, limit=200)
    expected = 8.0**n * math.factorial(n) * math.pi ** (2 * n) / math.factorial(2 * n)
    tail = K / (2.0 * cutoff * cutoff)
    logger.debug(f"Radial integral n={n}: {inner + outer:.12g} (tail <= {tail:.3e})")
    return IntegralResult(value=inner + outer, expected=expected, tail_bound=tail)

