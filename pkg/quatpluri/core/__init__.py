"""Core algorithms: tau embedding, Moore determinant, exterior forms, Baston operator."""

from .errors import PreconditionError, QuatPluriError
from .moore import diagonalize_hyperhermitian, mixed_discriminant, moore_det
from .suites import SuiteConfig, run_suite

__all__ = [
    "QuatPluriError",
    "PreconditionError",
    "diagonalize_hyperhermitian",
    "moore_det",
    "mixed_discriminant",
    "SuiteConfig",
    "run_suite",
]
