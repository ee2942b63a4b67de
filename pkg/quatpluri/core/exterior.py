"""Exterior algebra over C^{2n} with the rho(j) real structure.

Basis one-forms are ω^0 … ω^{2n-1}. A 2-form is stored on sorted index pairs,
so the double sum Σ_{A,B} M_AB ω^A∧ω^B of a skew matrix M lands on key (A, B)
with coefficient 2 M_AB.
"""

import logging
from collections.abc import Sequence
from functools import reduce
from itertools import combinations

import numpy as np

from quatpluri.core.errors import GradeError, NotReal, NotSkew, ShapeError
from quatpluri.core.moore import diagonalize_hyperhermitian
from quatpluri.core.quaternion_core import (
    DEFAULT_TOL,
    j_array,
    require_hyperhermitian,
    tau_array,
    tau_inverse_array,
)
from quatpluri.models.form import Form, Index, sort_with_sign
from quatpluri.models.quaternion import CMatrix, QMatrix
from quatpluri.models.spectral import SpectralData

logger = logging.getLogger(__name__)


# ===== Products =====


def wedge(F: Form, G: Form) -> Form:
    """Exterior product F∧G; terms with a repeated index vanish."""
    if F.half_dim != G.half_dim:
        raise ShapeError(f"Cannot wedge forms over C^{2 * F.half_dim} and C^{2 * G.half_dim}")
    terms: dict[Index, complex] = {}
    for key_f, c_f in F.terms.items():
        for key_g, c_g in G.terms.items():
            sign, key = sort_with_sign(key_f + key_g)
            if sign:
                terms[key] = terms.get(key, 0j) + sign * c_f * c_g
    return Form(F.half_dim, F.grade + G.grade, terms)


def wedge_all(forms: Sequence[Form]) -> Form:
    """F_1∧F_2∧…∧F_k, left to right."""
    if not forms:
        raise ValueError("wedge_all needs at least one form")
    return reduce(wedge, forms)


def wedge_power(F: Form, k: int) -> Form:
    """The k-th exterior power F∧…∧F; k = 0 gives the scalar 1."""
    if k == 0:
        return Form.scalar(F.half_dim, 1.0)
    return wedge_all([F] * k)


# ===== Real structure =====


def rho_j(F: Form) -> Form:
    """Antilinear action of right multiplication by j.

    Coefficients are conjugated and each ω^l goes to ω^{n+l}, each ω^{n+l}
    to -ω^l. On grade k, applying it twice multiplies by (-1)^k.
    """
    n = F.half_dim
    terms: dict[Index, complex] = {}
    for key, coeff in F.terms.items():
        factor = 1
        image = []
        for a in key:
            if a < n:
                image.append(a + n)
            else:
                image.append(a - n)
                factor = -factor
        sign, new_key = sort_with_sign(image)
        terms[new_key] = terms.get(new_key, 0j) + sign * factor * coeff.conjugate()
    return Form(n, F.grade, terms)


def is_real_form(F: Form, tol: float = DEFAULT_TOL) -> bool:
    """True iff rho(j)F = F within tol.

    Raises:
        GradeError: On odd grade
    """
    if F.grade % 2:
        raise GradeError(f"Reality is defined on even grades, got grade {F.grade}")
    return rho_j(F).max_abs_diff(F) <= tol


def require_real(F: Form, tol: float = DEFAULT_TOL) -> None:
    if not is_real_form(F, tol):
        raise NotReal(f"Form is not fixed by rho(j) (defect {rho_j(F).max_abs_diff(F):.3e})")


# ===== Matrix dictionary =====


def _require_skew(A: np.ndarray, tol: float) -> None:
    rows, cols = A.shape
    if rows != cols or rows % 2:
        raise ShapeError(f"Expected a square matrix of even size, got {A.shape}")
    defect = float(np.max(np.abs(A + A.T), initial=0.0))
    if defect > tol:
        raise NotSkew(f"Matrix is not skew symmetric (defect {defect:.3e})")


def matrix_to_2form(M: CMatrix, tol: float = DEFAULT_TOL) -> Form:
    """The 2-form Σ_{A,B} M_AB ω^A∧ω^B of a skew 2n×2n matrix.

    Raises:
        NotSkew: If Mᵗ != -M within tol
    """
    A = M.array
    _require_skew(A, tol)
    size = A.shape[0]
    terms = {
        (a, b): complex(A[a, b] - A[b, a]) for a in range(size) for b in range(a + 1, size)
    }
    return Form(size // 2, 2, terms)


def form_to_matrix(F: Form) -> CMatrix:
    """The unique skew matrix M with F = Σ_{A,B} M_AB ω^A∧ω^B."""
    if F.grade != 2:
        raise GradeError(f"Expected a 2-form, got grade {F.grade}")
    size = 2 * F.half_dim
    A = np.zeros((size, size), dtype=complex)
    for (a, b), coeff in F.terms.items():
        A[a, b] = 0.5 * coeff
        A[b, a] = -0.5 * coeff
    return CMatrix.from_array(A)


def hh_to_2form(M: QMatrix, tol: float = DEFAULT_TOL) -> Form:
    """The real 2-form of a hyperhermitian matrix, built from tau(M) J.

    Raises:
        NotHyperhermitian: If M is not hyperhermitian within tol
    """
    require_hyperhermitian(M, tol)
    # skew defect of tau(M) J is at most twice the hyperhermitian defect
    return matrix_to_2form(CMatrix.from_array(tau_array(M) @ j_array(M.rows)), 2 * tol)


# ===== Distinguished forms =====


def beta_n(n: int) -> Form:
    """βₙ = Σ_l ω^l∧ω^{n+l}."""
    if n < 1:
        raise ShapeError(f"beta_n needs n >= 1, got {n}")
    return Form(n, 2, {(l, n + l): 1.0 for l in range(n)})


def omega_2n(n: int) -> Form:
    """Ω_{2n} = ω^0∧ω^n∧ω^1∧ω^{n+1}∧…∧ω^{n-1}∧ω^{2n-1}."""
    if n < 1:
        raise ShapeError(f"omega_2n needs n >= 1, got {n}")
    return wedge_all([Form.basis(n, l, n + l) for l in range(n)])


def top_coefficient(F: Form) -> complex:
    """The scalar c with F = c Ω_{2n} for a top-grade form."""
    n = F.half_dim
    if F.grade != 2 * n:
        raise GradeError(f"Expected top grade {2 * n}, got {F.grade}")
    top_key = tuple(range(2 * n))
    return F.coefficient(top_key) / omega_2n(n).coefficient(top_key)


def delta_n(Ms: Sequence[CMatrix], tol: float = DEFAULT_TOL) -> complex:
    """Δₙ(M⁽¹⁾, …, M⁽ⁿ⁾): the coefficient of Ω_{2n} in ω_1∧…∧ω_n.

    Raises:
        NotSkew: If some M is not skew symmetric
        NotReal: If some associated 2-form is not real
        ShapeError: If the number of matrices does not match their size
    """
    n = len(Ms)
    if n == 0:
        raise ShapeError("delta_n needs at least one matrix")
    forms = []
    for M in Ms:
        if M.shape != (2 * n, 2 * n):
            raise ShapeError(f"Expected {n} matrices of size {2 * n}, got {M.shape}")
        F = matrix_to_2form(M, tol)
        require_real(F, tol)
        forms.append(F)
    return top_coefficient(wedge_all(forms))


# ===== Normalization =====


def normal_form_matrix(nu: Sequence[float]) -> CMatrix:
    """The antidiagonal block matrix [[0, diag ν], [-diag ν, 0]]."""
    D = np.diag(np.asarray(nu, dtype=float))
    Z = np.zeros_like(D)
    return CMatrix.from_array(np.block([[Z, D], [-D, Z]]))


def normalization_residual(M: CMatrix, spectral: SpectralData) -> float:
    """max |τ(E)ᵗ M τ(E) - normal_form_matrix(ν)|."""
    T = tau_array(spectral.E)
    reduced = T.T @ M.array @ T
    return float(np.max(np.abs(reduced - normal_form_matrix(spectral.nu).array), initial=0.0))


def normalize_real_2form(F: Form, tol: float = DEFAULT_TOL) -> SpectralData:
    """Bring a real 2-form to normal form by a quaternionic unitary change of basis.

    Returns (E, ν) with τ(E)ᵗ M τ(E) = [[0, diag ν], [-diag ν, 0]] for
    M = form_to_matrix(F), i.e. F = 2 Σ ν_l ω̃^l∧ω̃^{n+l} in the new basis.

    Raises:
        GradeError: If F is not a 2-form
        NotReal: If F is not real within tol
    """
    if F.grade != 2:
        raise GradeError(f"Expected a 2-form, got grade {F.grade}")
    require_real(F, tol)
    M = form_to_matrix(F).array
    # M = tau(H) J and J^{-1} = -J
    H = tau_inverse_array(-M @ j_array(F.half_dim), tol)
    spectral = diagonalize_hyperhermitian(H, tol)
    E = tau_inverse_array(tau_array(spectral.E).conj(), tol)
    return SpectralData(E=E, nu=spectral.nu)


def is_strongly_positive_2form(F: Form, tol: float = DEFAULT_TOL) -> bool:
    """True iff all normal-form eigenvalues are >= -tol and one exceeds tol.

    Raises:
        NotReal: If F is not real within tol
    """
    nu = normalize_real_2form(F, tol).nu
    return min(nu) >= -tol and max(nu) > tol


# ===== Linear actions =====


def _transform(matrix: np.ndarray, F: Form, target_half_dim: int) -> Form:
    """Send ω^A to Σ_B matrix[A, B] ω^B and extend multiplicatively."""
    k = F.grade
    target_dim = 2 * target_half_dim
    if k == 0:
        return Form(target_half_dim, 0, dict(F.terms))
    targets = list(combinations(range(target_dim), k))
    terms: dict[Index, complex] = {}
    for key, coeff in F.terms.items():
        rows = matrix[list(key), :]
        for target in targets:
            minor = complex(np.linalg.det(rows[:, list(target)]))
            if minor != 0:
                terms[target] = terms.get(target, 0j) + coeff * minor
    return Form(target_half_dim, k, terms)


def act_matrix_on_form(M: CMatrix, F: Form) -> Form:
    """C-linear action ω^A ↦ Σ_B M_AB ω^B of a 2n×2n matrix, extended multiplicatively.

    Raises:
        ShapeError: If M is not 2n×2n for the form's n
    """
    size = 2 * F.half_dim
    if M.shape != (size, size):
        raise ShapeError(f"Expected a {size}x{size} matrix, got {M.shape}")
    return _transform(M.array, F, F.half_dim)


def pullback(A: QMatrix, F: Form) -> Form:
    """Pull a form on C^{2m} back along the right H-linear map A: H^k → H^m.

    Each ω̃^p goes to Σ_j τ(A)_pj ω^j.

    Raises:
        ShapeError: If A does not have m rows for the form's m
    """
    if A.rows != F.half_dim:
        raise ShapeError(f"Map with {A.rows} rows cannot pull back a form over H^{F.half_dim}")
    return _transform(tau_array(A), F, A.cols)


def elementary_strongly_positive(etas: Sequence[QMatrix], n: int) -> Form:
    """η₁*ω̃⁰∧η₁*ω̃¹∧…∧η_k*ω̃⁰∧η_k*ω̃¹ for right H-linear maps η_j: H^n → H.

    Raises:
        ShapeError: If some η is not 1×n or there are more than n of them
    """
    if len(etas) > n:
        raise ShapeError(f"At most {n} maps allowed, got {len(etas)}")
    if not etas:
        return Form.scalar(n, 1.0)
    line = Form.basis(1, 0, 1)
    factors = []
    for eta in etas:
        if eta.shape != (1, n):
            raise ShapeError(f"Expected a 1x{n} map, got {eta.shape}")
        factors.append(pullback(eta, line))
    return wedge_all(factors)

