"""
Shared sample data and common scenarios for the unit tests.

Random inputs come from the same seeded streams the verification suites use,
so a failing test can be replayed with the CLI.
"""

import numpy as np
import pytest

from quatpluri.core import sampling
from quatpluri.models.quaternion import QI, QJ, QMatrix
from tests.fixtures.builders import (
    FormDocBuilder,
    PolynomialDocBuilder,
    QMatrixDocBuilder,
    fundamental_solution_doc,
)

# ============================================================================
# Random streams
# ============================================================================


@pytest.fixture
def rng() -> np.random.Generator:
    """Generator for test-local randomness."""
    return sampling.case_rng(20240101, "unit-tests", 0)


@pytest.fixture
def random_hyperhermitian_3(rng):
    return sampling.random_hyperhermitian(rng, 3)


# ============================================================================
# Worked examples
# ============================================================================


@pytest.fixture
def two_by_two_hyperhermitian() -> QMatrix:
    """[[2, i+j], [-i-j, 2]]: eigenvalues 2 ± √2, Moore determinant 2."""
    off = QI + QJ
    return QMatrix.from_rows([[2.0, off], [-off, 2.0]])


@pytest.fixture
def two_by_two_doc() -> str:
    return (
        QMatrixDocBuilder(2)
        .with_entry(0, 0, 2.0)
        .with_entry(0, 1, (0.0, 1.0, 1.0, 0.0))
        .with_entry(1, 0, (0.0, -1.0, -1.0, 0.0))
        .with_entry(1, 1, 2.0)
        .to_json()
    )


@pytest.fixture
def identity_doc() -> str:
    return QMatrixDocBuilder(2).identity().to_json()


@pytest.fixture
def two_beta_doc() -> str:
    """2β₂, the form of the identity matrix."""
    return FormDocBuilder(2, 2).beta(2.0).to_json()


@pytest.fixture
def non_real_doc() -> str:
    """i·ω⁰∧ω¹ for n = 1."""
    return FormDocBuilder(1, 2).with_term([0, 1], im=1.0).to_json()


@pytest.fixture
def norm_sq_doc() -> str:
    return PolynomialDocBuilder(1).norm_sq().to_json()


@pytest.fixture
def fundamental_doc() -> dict:
    return fundamental_solution_doc(1, 1.0)
