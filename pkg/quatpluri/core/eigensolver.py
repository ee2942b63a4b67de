"""Cyclic Jacobi eigensolver for complex Hermitian matrices."""

import logging

import numpy as np

from quatpluri.core.errors import ConvergenceError, ShapeError

logger = logging.getLogger(__name__)

ROTATION_THRESHOLD = 1e-13
MAX_SWEEPS = 30


def _off_norm(A: np.ndarray) -> float:
    off = A - np.diag(np.diag(A))
    return float(np.linalg.norm(off))


def _rotation(A: np.ndarray, p: int, q: int) -> np.ndarray:
    """2×2 unitary block annihilating A[p, q]."""
    apq = A[p, q]
    r = abs(apq)
    phase = np.exp(-1j * np.angle(apq))
    theta = (A[q, q].real - A[p, p].real) / (2.0 * r)
    t = np.sign(theta) / (abs(theta) + np.sqrt(theta * theta + 1.0))
    if theta == 0.0:
        t = 1.0
    c = 1.0 / np.sqrt(t * t + 1.0)
    s = t * c
    # diag(1, e^{-i phi}) makes the pair real, then a real Jacobi rotation
    return np.array([[c, s], [-s * phase, c * phase]], dtype=complex)


def jacobi_eigh(
    H: np.ndarray,
    threshold: float = ROTATION_THRESHOLD,
    max_sweeps: int = MAX_SWEEPS,
) -> tuple[np.ndarray, np.ndarray]:
    """Diagonalize a complex Hermitian matrix by cyclic Jacobi rotations.

    Args:
        H: Square complex Hermitian array (only its Hermitian part is used)
        threshold: Relative off-diagonal threshold, scaled by the Frobenius norm
        max_sweeps: Sweep limit before giving up

    Returns:
        (eigenvalues, eigenvectors) with eigenvalues sorted descending (stable
        on ties) and eigenvectors as orthonormal columns

    Raises:
        ConvergenceError: If the off-diagonal norm is still above threshold
            after max_sweeps sweeps
    """
    H = np.asarray(H, dtype=complex)
    if H.ndim != 2 or H.shape[0] != H.shape[1]:
        raise ShapeError(f"Expected a square matrix, got shape {H.shape}")

    size = H.shape[0]
    A = 0.5 * (H + H.conj().T)
    V = np.eye(size, dtype=complex)
    scale = float(np.linalg.norm(A))
    target = threshold * scale

    sweeps = 0
    while _off_norm(A) > target:
        if sweeps >= max_sweeps:
            raise ConvergenceError(
                f"Jacobi did not converge in {max_sweeps} sweeps "
                f"(off-diagonal norm {_off_norm(A):.3e})"
            )
        for p in range(size - 1):
            for q in range(p + 1, size):
                if abs(A[p, q]) <= target / size:
                    continue
                g = _rotation(A, p, q)
                A[:, [p, q]] = A[:, [p, q]] @ g
                A[[p, q], :] = g.conj().T @ A[[p, q], :]
                V[:, [p, q]] = V[:, [p, q]] @ g
        sweeps += 1

    logger.debug(f"Jacobi converged: size={size} sweeps={sweeps} off={_off_norm(A):.2e}")

    eigenvalues = np.diag(A).real.copy()
    order = np.argsort(-eigenvalues, kind="stable")
    return eigenvalues[order], V[:, order]
