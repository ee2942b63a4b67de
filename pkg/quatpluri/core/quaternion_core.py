"""Quaternion arithmetic, the tau embedding and structural predicates.

tau sends a quaternionic p×m matrix M = a + b j (a, b complex) to the complex
2p×2m block matrix [[a, -b], [conj(b), conj(a)]]. It is an algebra map for the
right H-module convention used throughout the package.
"""

import logging
from enum import Enum
from functools import lru_cache

import numpy as np

from quatpluri.core.errors import NotHyperhermitian, ShapeError, StructureError
from quatpluri.models.quaternion import CMatrix, QMatrix, Quaternion, RealRep

logger = logging.getLogger(__name__)

DEFAULT_TOL = 1e-9


class QuatOp(str, Enum):
    """Scalar quaternion operations."""

    MUL = "mul"
    ADD = "add"
    CONJ = "conj"
    ABS2 = "abs2"


class StructureKind(str, Enum):
    """Structural properties of square matrices."""

    HYPERHERMITIAN = "hyperhermitian"
    QUATERNIONIC_UNITARY = "quaternionic_unitary"
    COMPLEX_SYMPLECTIC_UNITARY = "complex_symplectic_unitary"


def quat_arith(
    a: Quaternion, b: Quaternion | None = None, op: QuatOp | str = QuatOp.MUL
) -> Quaternion | float:
    """Apply a scalar quaternion operation.

    Args:
        a: First operand
        b: Second operand (ignored by conj and abs2)
        op: One of mul, add, conj, abs2

    Returns:
        Quaternion result, or a real number for abs2
    """
    op = QuatOp(op)
    if op is QuatOp.CONJ:
        return a.conj()
    if op is QuatOp.ABS2:
        return a.abs2()
    if b is None:
        raise ValueError(f"{op.value} needs two operands")
    return a * b if op is QuatOp.MUL else a + b


# ===== tau embedding =====


@lru_cache(maxsize=32)
def _j_array(n: int) -> np.ndarray:
    eye = np.eye(n)
    zero = np.zeros((n, n))
    J = np.block([[zero, eye], [-eye, zero]]).astype(complex)
    J.setflags(write=False)
    return J


def j_array(n: int) -> np.ndarray:
    """The 2n×2n matrix J = [[0, I], [-I, 0]] as a read-only array."""
    if n < 1:
        raise ShapeError(f"J needs n >= 1, got {n}")
    return _j_array(n)


def j_matrix(n: int) -> CMatrix:
    """The 2n×2n matrix J = [[0, I], [-I, 0]]; J² = -I and Jᵗ = -J."""
    return CMatrix.from_array(j_array(n))


def tau_array(M: QMatrix) -> np.ndarray:
    """tau(M) as a complex array of shape (2p, 2m)."""
    a, b = M.complex_parts
    return np.block([[a, -b], [b.conj(), a.conj()]])


def tau(M: QMatrix) -> CMatrix:
    """Embed a quaternionic p×m matrix as a complex 2p×2m matrix."""
    return CMatrix.from_array(tau_array(M))


def quaternionic_defect(M: np.ndarray) -> float:
    """max |J conj(M) - M J|, zero exactly on the image of tau."""
    M = np.asarray(M, dtype=complex)
    rows, cols = M.shape
    if rows != cols or rows % 2:
        raise ShapeError(f"Expected a square matrix of even size, got {M.shape}")
    J = j_array(rows // 2)
    return float(np.max(np.abs(J @ M.conj() - M @ J), initial=0.0))


def tau_inverse_array(M: np.ndarray, tol: float = DEFAULT_TOL) -> QMatrix:
    """Recover the quaternionic matrix from a complex array in the image of tau."""
    M = np.asarray(M, dtype=complex)
    defect = quaternionic_defect(M)
    if defect > tol:
        raise StructureError(f"J conj(M) != M J (defect {defect:.3e} > tol {tol:.1e})")
    n = M.shape[0] // 2
    a = M[:n, :n]
    b = M[:n, n:]
    # M = [[a, b], [-conj(b), conj(a)]] = tau(a - b j)
    return QMatrix.from_complex_parts(a, -b)


def tau_inverse(M: CMatrix, tol: float = DEFAULT_TOL) -> QMatrix:
    """Inverse of tau on complex matrices with J conj(M) = M J.

    Raises:
        ShapeError: If M is not square of even size
        StructureError: If the commutation defect exceeds tol
    """
    return tau_inverse_array(M.array, tol)


# ===== Structural predicates =====


def _require_square(rows: int, cols: int) -> None:
    if rows != cols:
        raise ShapeError(f"Expected a square matrix, got {rows}x{cols}")


def hyperhermitian_defect(M: QMatrix) -> float:
    """max |M_jk - conj(M_kj)| over all entries."""
    _require_square(M.rows, M.cols)
    return M.max_abs_diff(M.adjoint())


def is_hyperhermitian(M: QMatrix, tol: float = DEFAULT_TOL) -> bool:
    return hyperhermitian_defect(M) <= tol


def require_hyperhermitian(M: QMatrix, tol: float = DEFAULT_TOL) -> None:
    """Raise NotHyperhermitian unless M is hyperhermitian within tol."""
    defect = hyperhermitian_defect(M)
    if defect > tol:
        raise NotHyperhermitian(f"Matrix is not hyperhermitian (defect {defect:.3e})")


def structural_predicate(
    M: QMatrix | CMatrix, kind: StructureKind | str, tol: float = DEFAULT_TOL
) -> bool:
    """Test a structural property of a square matrix.

    Args:
        M: QMatrix for hyperhermitian / quaternionic_unitary, CMatrix for
            complex_symplectic_unitary
        kind: Property to test
        tol: Absolute max-norm tolerance

    Returns:
        True if the property holds within tol

    Raises:
        ShapeError: On non-square input
    """
    kind = StructureKind(kind)
    _require_square(M.rows, M.cols)

    if kind is StructureKind.HYPERHERMITIAN:
        if not isinstance(M, QMatrix):
            raise TypeError("hyperhermitian expects a QMatrix")
        return is_hyperhermitian(M, tol)

    if kind is StructureKind.QUATERNIONIC_UNITARY:
        if not isinstance(M, QMatrix):
            raise TypeError("quaternionic_unitary expects a QMatrix")
        return (M.adjoint() @ M).max_abs_diff(QMatrix.identity(M.rows)) <= tol

    if not isinstance(M, CMatrix):
        raise TypeError("complex_symplectic_unitary expects a CMatrix")
    if M.rows % 2:
        raise ShapeError(f"Symplectic test needs even size, got {M.rows}")
    A = M.array
    J = j_array(M.rows // 2)
    unitary = np.max(np.abs(A.conj().T @ A - np.eye(M.rows)), initial=0.0) <= tol
    symplectic = np.max(np.abs(A @ J @ A.T - J), initial=0.0) <= tol
    return bool(unitary and symplectic)


# ===== Real representation =====


def real_rep(U: QMatrix) -> RealRep:
    """The 4n×4n real matrix of q ↦ U q in block coordinates (x⁽⁰⁾, …, x⁽³⁾).

    With U = U0 + i U1 + j U2 + k U3 (real blocks), (U q)^R = U^R q^R.
    """
    _require_square(U.rows, U.cols)
    U0, U1, U2, U3 = (U.components[..., c] for c in range(4))
    block = np.block(
        [
            [U0, -U1, -U2, -U3],
            [U1, U0, -U3, U2],
            [U2, U3, U0, -U1],
            [U3, -U2, U1, U0],
        ]
    )
    return RealRep.from_array(block)


def real_vec(q: QMatrix | list[Quaternion] | tuple[Quaternion, ...]) -> RealRep:
    """Stack the real parts of a quaternionic vector in block order.

    Args:
        q: Column QMatrix (n×1) or sequence of quaternions

    Returns:
        RealRep of shape (4n,): (x⁽⁰⁾, x⁽¹⁾, x⁽²⁾, x⁽³⁾)
    """
    if isinstance(q, QMatrix):
        if q.cols != 1:
            raise ShapeError(f"Expected a column vector, got {q.shape}")
        comp = q.components[:, 0, :]
    else:
        comp = np.array([Quaternion.coerce(v).as_tuple() for v in q], dtype=float)
    return RealRep.from_array(comp.T.reshape(-1))
