"""Reproducible random inputs for the verification suites.

Every (suite, case) pair owns an independent PCG64 stream derived from the
user seed, so a single failing case can be replayed in isolation.
"""

import zlib

import numpy as np

from quatpluri.core.moore import diagonalize_hyperhermitian
from quatpluri.core.polynomial import Polynomial
from quatpluri.core.quaternion_core import j_array, tau_array
from quatpluri.models.quaternion import CMatrix, QMatrix

MIN_SINGULAR_VALUE = 0.1
MAX_REJECTIONS = 1000


def case_rng(seed: int, suite: str, case: int) -> np.random.Generator:
    """Generator for one case of one suite."""
    tag = zlib.crc32(suite.encode("utf-8"))
    sequence = np.random.SeedSequence(seed, spawn_key=(tag, case))
    return np.random.Generator(np.random.PCG64(sequence))


def random_qmatrix(rng: np.random.Generator, p: int, m: int) -> QMatrix:
    """Standard-normal quaternion components."""
    return QMatrix.from_components(rng.standard_normal((p, m, 4)))


def random_hyperhermitian(rng: np.random.Generator, n: int) -> QMatrix:
    X = random_qmatrix(rng, n, n)
    return (X + X.adjoint()).scale(0.5)


def random_complex_hermitian(rng: np.random.Generator, n: int) -> QMatrix:
    """A complex Hermitian matrix viewed as quaternionic (zero j-part)."""
    X = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return QMatrix.from_complex_parts(0.5 * (X + X.conj().T), np.zeros((n, n)))


def random_gl(rng: np.random.Generator, n: int) -> QMatrix:
    """Invertible U with smallest singular value of τ(U) at least 0.1."""
    for _ in range(MAX_REJECTIONS):
        U = random_qmatrix(rng, n, n)
        if np.linalg.svd(tau_array(U), compute_uv=False)[-1] >= MIN_SINGULAR_VALUE:
            return U
    raise RuntimeError("Could not sample a well-conditioned matrix")


def random_unitary(rng: np.random.Generator, n: int) -> QMatrix:
    """Quaternionic unitary from diagonalizing a random hyperhermitian matrix."""
    return diagonalize_hyperhermitian(random_hyperhermitian(rng, n)).E


def random_skew(rng: np.random.Generator, n: int, real: bool) -> CMatrix:
    """Skew 2n×2n complex matrix; when real, of the form τ(M) J for hyperhermitian M."""
    if real:
        M = tau_array(random_hyperhermitian(rng, n)) @ j_array(n)
        return CMatrix.from_array(0.5 * (M - M.T))
    X = rng.standard_normal((2 * n, 2 * n)) + 1j * rng.standard_normal((2 * n, 2 * n))
    return CMatrix.from_array(X - X.T)


def random_polynomial(
    rng: np.random.Generator,
    num_vars: int,
    degree: int,
    terms: int = 6,
    min_degree: int = 0,
) -> Polynomial:
    """Real polynomial with small nonzero integer coefficients.

    Integer coefficients keep symbolic differentiation and products exact.
    """
    result = Polynomial.zero(num_vars)
    for _ in range(terms):
        total = int(rng.integers(min_degree, degree + 1))
        exp = [0] * num_vars
        for j in rng.integers(0, num_vars, size=total):
            exp[int(j)] += 1
        coeff = int(rng.choice([-3, -2, -1, 1, 2, 3]))
        result = result + Polynomial(num_vars, {tuple(exp): coeff})
    return result


def random_point(rng: np.random.Generator, num_vars: int, scale: float = 1.0) -> np.ndarray:
    return scale * rng.standard_normal(num_vars)
