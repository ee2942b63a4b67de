"""Quaternion, quaternionic matrix and complex matrix value types."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

# Basis order of quaternion components: 1, i, j, k
QUATERNION_UNITS = ("1", "i", "j", "k")


@dataclass(frozen=True)
class Quaternion:
    """A quaternion w + x i + y j + z k with ij = k."""

    w: float = 0.0
    x: float = 0.0
    y: float = 0.0
    z: float = 0.0

    @classmethod
    def from_complex_pair(cls, a: complex, b: complex) -> Quaternion:
        """Build a + b j from complex a and b."""
        return cls(a.real, a.imag, b.real, b.imag)

    @classmethod
    def coerce(cls, value: Quaternion | complex | float | int) -> Quaternion:
        """Accept a quaternion, or embed a real or complex number."""
        if isinstance(value, Quaternion):
            return value
        c = complex(value)
        return cls(c.real, c.imag, 0.0, 0.0)

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.w, self.x, self.y, self.z)

    def complex_pair(self) -> tuple[complex, complex]:
        """Return (a, b) with self = a + b j."""
        return complex(self.w, self.x), complex(self.y, self.z)

    def conj(self) -> Quaternion:
        """Quaternionic conjugate: negates the i, j, k parts."""
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def abs2(self) -> float:
        """Squared norm w² + x² + y² + z²."""
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def __add__(self, other: Quaternion | complex | float | int) -> Quaternion:
        o = Quaternion.coerce(other)
        return Quaternion(self.w + o.w, self.x + o.x, self.y + o.y, self.z + o.z)

    __radd__ = __add__

    def __neg__(self) -> Quaternion:
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __sub__(self, other: Quaternion | complex | float | int) -> Quaternion:
        return self + (-Quaternion.coerce(other))

    def __rsub__(self, other: Quaternion | complex | float | int) -> Quaternion:
        return Quaternion.coerce(other) - self

    def __mul__(self, other: Quaternion | complex | float | int) -> Quaternion:
        o = Quaternion.coerce(other)
        return Quaternion(
            self.w * o.w - self.x * o.x - self.y * o.y - self.z * o.z,
            self.w * o.x + self.x * o.w + self.y * o.z - self.z * o.y,
            self.w * o.y - self.x * o.z + self.y * o.w + self.z * o.x,
            self.w * o.z + self.x * o.y - self.y * o.x + self.z * o.w,
        )

    def __rmul__(self, other: Quaternion | complex | float | int) -> Quaternion:
        return Quaternion.coerce(other) * self


# Named units
ONE = Quaternion(1.0, 0.0, 0.0, 0.0)
QI = Quaternion(0.0, 1.0, 0.0, 0.0)
QJ = Quaternion(0.0, 0.0, 1.0, 0.0)
QK = Quaternion(0.0, 0.0, 0.0, 1.0)


def _frozen(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


@dataclass(frozen=True)
class QMatrix:
    """A dense p×m quaternionic matrix stored row-major."""

    rows: int
    cols: int
    entries: tuple[Quaternion, ...] = field(repr=False)

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"QMatrix expects {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    # ===== Constructors =====

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Quaternion | complex | float | int]]) -> QMatrix:
        """Build from nested rows of quaternions or numbers."""
        p = len(rows)
        m = len(rows[0]) if p else 0
        if any(len(r) != m for r in rows):
            raise ValueError("Ragged rows")
        return cls(p, m, tuple(Quaternion.coerce(v) for r in rows for v in r))

    @classmethod
    def from_components(cls, components: np.ndarray) -> QMatrix:
        """Build from a real array of shape (p, m, 4)."""
        comp = np.asarray(components, dtype=float)
        p, m, _ = comp.shape
        flat = comp.reshape(p * m, 4)
        return cls(p, m, tuple(Quaternion(*map(float, row)) for row in flat))

    @classmethod
    def from_complex_parts(cls, a: np.ndarray, b: np.ndarray) -> QMatrix:
        """Build a + b j from complex matrices a and b."""
        a = np.atleast_2d(np.asarray(a, dtype=complex))
        b = np.atleast_2d(np.asarray(b, dtype=complex))
        comp = np.stack([a.real, a.imag, b.real, b.imag], axis=-1)
        return cls.from_components(comp)

    @classmethod
    def identity(cls, n: int) -> QMatrix:
        return cls.diagonal([1.0] * n)

    @classmethod
    def diagonal(cls, values: Iterable[Quaternion | complex | float | int]) -> QMatrix:
        vals = [Quaternion.coerce(v) for v in values]
        n = len(vals)
        return cls.from_rows([[vals[i] if i == j else Quaternion() for j in range(n)] for i in range(n)])

    # ===== Views =====

    @cached_property
    def components(self) -> np.ndarray:
        """Read-only real array of shape (rows, cols, 4)."""
        comp = np.array([q.as_tuple() for q in self.entries], dtype=float)
        return _frozen(comp.reshape(self.rows, self.cols, 4))

    @cached_property
    def complex_parts(self) -> tuple[np.ndarray, np.ndarray]:
        """Complex (a, b) with self = a + b j."""
        c = self.components
        return _frozen(c[..., 0] + 1j * c[..., 1]), _frozen(c[..., 2] + 1j * c[..., 3])

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, index: tuple[int, int]) -> Quaternion:
        i, j = index
        return self.entries[i * self.cols + j]

    # ===== Algebra =====

    def adjoint(self) -> QMatrix:
        """Quaternionic conjugate transpose M*."""
        a, b = self.complex_parts
        # conj(a + b j) = conj(a) - b j entrywise
        return QMatrix.from_complex_parts(a.conj().T, -b.T)

    def __add__(self, other: QMatrix) -> QMatrix:
        return QMatrix.from_components(self.components + other.components)

    def __sub__(self, other: QMatrix) -> QMatrix:
        return QMatrix.from_components(self.components - other.components)

    def __neg__(self) -> QMatrix:
        return QMatrix.from_components(-self.components)

    def scale(self, factor: float) -> QMatrix:
        """Multiply by a real scalar."""
        return QMatrix.from_components(float(factor) * self.components)

    def __matmul__(self, other: QMatrix) -> QMatrix:
        if self.cols != other.rows:
            raise ValueError(f"Cannot multiply {self.shape} by {other.shape}")
        a, b = self.complex_parts
        c, d = other.complex_parts
        # (a + b j)(c + d j) = ac - b conj(d) + (ad + b conj(c)) j, using j z = conj(z) j
        return QMatrix.from_complex_parts(a @ c - b @ d.conj(), a @ d + b @ c.conj())

    def max_abs_diff(self, other: QMatrix) -> float:
        return float(np.max(np.abs(self.components - other.components), initial=0.0))

    def max_abs(self) -> float:
        return float(np.max(np.abs(self.components), initial=0.0))


@dataclass(frozen=True)
class CMatrix:
    """A dense p×m complex matrix stored row-major."""

    rows: int
    cols: int
    entries: tuple[complex, ...] = field(repr=False)

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"CMatrix expects {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_array(cls, array: np.ndarray) -> CMatrix:
        arr = np.atleast_2d(np.asarray(array, dtype=complex))
        p, m = arr.shape
        return cls(p, m, tuple(complex(v) for v in arr.reshape(-1)))

    @cached_property
    def array(self) -> np.ndarray:
        """Read-only complex array of shape (rows, cols)."""
        return _frozen(np.array(self.entries, dtype=complex).reshape(self.rows, self.cols))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, index: tuple[int, int]) -> complex:
        i, j = index
        return self.entries[i * self.cols + j]

    def __matmul__(self, other: CMatrix) -> CMatrix:
        return CMatrix.from_array(self.array @ other.array)

    def conj(self) -> CMatrix:
        return CMatrix.from_array(self.array.conj())

    def transpose(self) -> CMatrix:
        return CMatrix.from_array(self.array.T)

    def adjoint(self) -> CMatrix:
        return CMatrix.from_array(self.array.conj().T)

    def max_abs_diff(self, other: CMatrix) -> float:
        return float(np.max(np.abs(self.array - other.array), initial=0.0))


@dataclass(frozen=True)
class RealRep:
    """Real representation of a quaternionic matrix (4n×4n) or vector (4n).

    Block order is (x⁽⁰⁾, x⁽¹⁾, x⁽²⁾, x⁽³⁾): all real parts first, then all
    i-parts, and so on.
    """

    shape: tuple[int, ...]
    values: tuple[float, ...] = field(repr=False)

    @classmethod
    def from_array(cls, array: np.ndarray) -> RealRep:
        arr = np.asarray(array, dtype=float)
        return cls(tuple(arr.shape), tuple(float(v) for v in arr.reshape(-1)))

    @cached_property
    def array(self) -> np.ndarray:
        return _frozen(np.array(self.values, dtype=float).reshape(self.shape))
