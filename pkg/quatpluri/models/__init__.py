"""Value types for quaternionic linear algebra and verification reports."""

from .form import Form
from .quaternion import CMatrix, QMatrix, Quaternion, RealRep
from .report import CheckResult, SuiteReport
from .spectral import SpectralData

__all__ = [
    "Quaternion",
    "QMatrix",
    "CMatrix",
    "RealRep",
    "SpectralData",
    "Form",
    "CheckResult",
    "SuiteReport",
]
