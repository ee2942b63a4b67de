"""Exception hierarchy for quatpluri.

Every failure raised by the library derives from QuatPluriError. The CLI maps
PreconditionError subclasses to exit code 3 and DocumentError to exit code 2.
"""

from collections.abc import Sequence


class QuatPluriError(Exception):
    """Base exception for all quatpluri errors."""


class PreconditionError(QuatPluriError):
    """Input violates a structural precondition of an operation."""


class ShapeError(PreconditionError):
    """Matrix or form dimensions are inconsistent."""


class StructureError(PreconditionError):
    """Matrix does not have the required quaternionic structure."""


class NotHyperhermitian(StructureError):
    """Quaternionic matrix is not hyperhermitian within tolerance."""


class NotSkew(PreconditionError):
    """Complex matrix is not skew symmetric within tolerance."""


class NotReal(PreconditionError):
    """Form is not fixed by rho(j) within tolerance."""


class GradeError(PreconditionError):
    """Operation is undefined for the grade of the given form."""


class SingularError(PreconditionError):
    """Matrix is numerically singular."""


class ComplexFieldError(PreconditionError):
    """Operation needs a real-valued field but got complex coefficients."""


class DivisionByZeroAt(PreconditionError):
    """A field expression has a vanishing denominator at the evaluation point."""

    def __init__(self, point: Sequence[float]):
        """Initialize with the offending point.

        Args:
            point: Real coordinates where the denominator vanished
        """
        self.point = tuple(float(x) for x in point)
        super().__init__(f"Denominator vanishes at {self.point}")


class ConvergenceError(QuatPluriError):
    """Iterative eigensolver did not converge."""


class PairingError(QuatPluriError):
    """Eigenvalues of a tau-image do not occur in matching pairs."""


class DocumentError(QuatPluriError):
    """JSON document is malformed or does not match its schema."""


class UnknownSuiteError(QuatPluriError):
    """Requested verification suite does not exist."""

    def __init__(self, name: str, known: Sequence[str]):
        self.name = name
        self.known = tuple(known)
        super().__init__(f"Unknown suite '{name}' (known: {', '.join(self.known)})")
