"""Structure-preserving diagonalization, Moore determinant and mixed discriminant.

A hyperhermitian M is diagonalized through the complex Hermitian matrix
tau(M). Eigenvalues of tau(M) come in pairs; within each eigenspace a unit
vector v and its partner rho(j)v span a quaternionic line, and the matrix
[v_0 .. v_{n-1} | rho(j)v_0 .. rho(j)v_{n-1}] is tau of a quaternionic unitary.
"""

import logging
import math
from collections.abc import Sequence
from itertools import combinations

import numpy as np

from quatpluri.core.eigensolver import jacobi_eigh
from quatpluri.core.errors import PairingError, ShapeError, StructureError
from quatpluri.core.quaternion_core import (
    DEFAULT_TOL,
    j_array,
    quaternionic_defect,
    require_hyperhermitian,
    tau_array,
    tau_inverse_array,
)
from quatpluri.models.quaternion import CMatrix, QMatrix
from quatpluri.models.spectral import SpectralData

logger = logging.getLogger(__name__)

# Pairing and clustering tolerance, relative to max(1, |lambda|), in units of tol
PAIR_FACTOR = 1e3


def rho_j_vector(v: np.ndarray) -> np.ndarray:
    """Apply the antilinear map v ↦ Jᵗ conj(v) to a length-2n vector (or columns).

    Applying it twice gives -v. If v is an eigenvector of tau(M), so is the
    image, with the same eigenvalue, and the two are orthogonal.
    """
    v = np.asarray(v, dtype=complex)
    n = v.shape[0] // 2
    return j_array(n).T @ v.conj()


def _pair_tol(tol: float, value: float) -> float:
    return PAIR_FACTOR * tol * max(1.0, abs(value))


def _clusters(values: np.ndarray, tol: float) -> list[list[int]]:
    """Group descending values into runs of numerically equal entries."""
    groups: list[list[int]] = []
    for i, value in enumerate(values):
        if groups and values[groups[-1][-1]] - value <= _pair_tol(tol, value):
            groups[-1].append(i)
        else:
            groups.append([i])
    return groups


def _quaternionic_basis(W: np.ndarray, count: int) -> list[np.ndarray]:
    """Pick `count` vectors from span(W) so that they and their partners are orthonormal.

    Pivoted modified Gram-Schmidt: at each step the candidate with the largest
    residual after removing span{v, rho(j)v} for all chosen v is taken.
    """
    chosen: list[np.ndarray] = []
    basis: list[np.ndarray] = []
    residuals = [W[:, c].copy() for c in range(W.shape[1])]
    for _ in range(count):
        for r in residuals:
            for b in basis:
                r -= (b.conj() @ r) * b
        norms = [float(np.linalg.norm(r)) for r in residuals]
        best = int(np.argmax(norms))
        if norms[best] < 0.1:
            raise PairingError("Eigenspace is not closed under rho(j)")
        v = residuals[best] / norms[best]
        w = rho_j_vector(v)
        # w is orthogonal to v in exact arithmetic; reorthogonalize against rounding
        w = w - (v.conj() @ w) * v
        w /= np.linalg.norm(w)
        chosen.append(v)
        basis.extend([v, w])
    return chosen


def _structured_eigh(H: np.ndarray, tol: float) -> tuple[np.ndarray, np.ndarray]:
    """Return (nu, Q) with Q = tau(E) unitary and Qᴴ H Q = diag(nu, nu)."""
    values, vectors = jacobi_eigh(H)

    chosen: list[np.ndarray] = []
    nus: list[float] = []
    for group in _clusters(values, tol):
        if len(group) % 2:
            raise PairingError(
                f"Eigenvalue cluster near {values[group[0]]:.6g} has odd size {len(group)}"
            )
        picked = _quaternionic_basis(vectors[:, group], len(group) // 2)
        if len(group) > 2:
            logger.debug(f"Degenerate cluster of size {len(group)} near {values[group[0]]:.6g}")
        for v in picked:
            chosen.append(v)
            nus.append(float((v.conj() @ H @ v).real))

    order = np.argsort(-np.array(nus), kind="stable")
    V = np.column_stack([chosen[i] for i in order])
    Q = np.hstack([V, rho_j_vector(V)])
    nu = np.array(nus)[order]
    return nu, Q


def diagonalize_hyperhermitian(M: QMatrix, tol: float = DEFAULT_TOL) -> SpectralData:
    """Diagonalize a hyperhermitian matrix by a quaternionic unitary.

    Args:
        M: Hyperhermitian n×n quaternionic matrix
        tol: Structural tolerance

    Returns:
        SpectralData (E, nu) with E* M E = diag(nu), nu descending

    Raises:
        NotHyperhermitian: If M is not hyperhermitian within tol
        ConvergenceError: If the Hermitian eigensolve fails
        PairingError: If eigenvalues of tau(M) do not pair up
    """
    require_hyperhermitian(M, tol)
    nu, Q = _structured_eigh(tau_array(M), tol)
    E = tau_inverse_array(Q, tol)
    return SpectralData(E=E, nu=tuple(float(x) for x in nu))


def moore_det(M: QMatrix, tol: float = DEFAULT_TOL) -> float:
    """Moore determinant of a hyperhermitian matrix: the product of its eigenvalues.

    Raises:
        NotHyperhermitian: If M is not hyperhermitian within tol
    """
    return diagonalize_hyperhermitian(M, tol).product()


def mixed_discriminant(Ms: Sequence[QMatrix], tol: float = DEFAULT_TOL) -> float:
    """Mixed discriminant of n hyperhermitian n×n matrices by polarization.

    det(M_1, ..., M_n) = (1/n!) Σ_{S ⊆ {1..n}} (-1)^{n-|S|} det(Σ_{i∈S} M_i)

    Raises:
        ShapeError: If the number of matrices differs from their size or sizes mix
        NotHyperhermitian: If any argument is not hyperhermitian
    """
    n = len(Ms)
    if n == 0:
        raise ShapeError("Mixed discriminant needs at least one matrix")
    for M in Ms:
        if M.shape != (n, n):
            raise ShapeError(f"Expected {n} matrices of size {n}x{n}, got {M.shape}")
        require_hyperhermitian(M, tol)
    # exact projections; every partial sum stays hyperhermitian
    parts = [(M + M.adjoint()).scale(0.5) for M in Ms]

    total = 0.0
    for size in range(1, n + 1):
        sign = (-1) ** (n - size)
        for subset in combinations(parts, size):
            partial = subset[0]
            for M in subset[1:]:
                partial = partial + M
            total += sign * moore_det(partial, tol)
    return total / math.factorial(n)


def eigenvalue_pairs(H: CMatrix, tol: float = DEFAULT_TOL) -> tuple[float, ...]:
    """One eigenvalue per pair of a Hermitian matrix in the image of tau.

    Args:
        H: Complex 2n×2n Hermitian matrix with J conj(H) = H J
        tol: Structural tolerance

    Returns:
        n eigenvalues, descending; their product is the Moore determinant of
        tau_inverse(H)

    Raises:
        StructureError: If H is not Hermitian or not in the image of tau
        PairingError: If sorted eigenvalues do not match in consecutive pairs
    """
    A = H.array
    if quaternionic_defect(A) > tol:
        raise StructureError("Matrix does not commute with the quaternionic structure")
    hermitian_defect = float(np.max(np.abs(A - A.conj().T), initial=0.0))
    if hermitian_defect > tol:
        raise StructureError(f"Matrix is not Hermitian (defect {hermitian_defect:.3e})")

    values, _ = jacobi_eigh(A)
    pairs: list[float] = []
    for k in range(0, len(values), 2):
        hi, lo = values[k], values[k + 1]
        if hi - lo > _pair_tol(tol, hi):
            raise PairingError(f"Eigenvalues {hi:.6g} and {lo:.6g} do not pair")
        pairs.append(float(0.5 * (hi + lo)))
    return tuple(pairs)
