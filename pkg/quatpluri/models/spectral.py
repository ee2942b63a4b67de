"""Spectral data of a hyperhermitian matrix."""

from dataclasses import dataclass

import numpy as np

from .quaternion import QMatrix


@dataclass(frozen=True)
class SpectralData:
    """A quaternionic unitary E together with real eigenvalues nu (descending).

    For the source matrix M, E* M E = diag(nu) within tolerance.
    """

    E: QMatrix
    nu: tuple[float, ...]

    @property
    def n(self) -> int:
        return len(self.nu)

    def product(self) -> float:
        """Product of the eigenvalues."""
        return float(np.prod(self.nu)) if self.nu else 1.0

    def diagonal(self) -> QMatrix:
        return QMatrix.diagonal(self.nu)
