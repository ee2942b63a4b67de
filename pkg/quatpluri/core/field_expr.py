"""Closed-form real field expressions and second-order jets.

A FieldExpr is an immutable expression tree over constants, coordinates x_j
and the operations + - × ÷ and integer powers. Evaluating it on Jet2 values
gives the value, gradient and Hessian at a point exactly up to rounding.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from collections.abc import Sequence
from dataclasses import dataclass
from typing import ClassVar

import numpy as np

from quatpluri.core.errors import DivisionByZeroAt, ShapeError


@dataclass(frozen=True, eq=False)
class Jet2:
    """Value, gradient and Hessian of a real field at one point.

    Every operation builds the Hessian from symmetric pieces, so it stays
    exactly symmetric.
    """

    value: float
    grad: np.ndarray
    hess: np.ndarray

    @classmethod
    def constant(cls, num_vars: int, value: float) -> Jet2:
        return cls(float(value), np.zeros(num_vars), np.zeros((num_vars, num_vars)))

    @classmethod
    def variable(cls, num_vars: int, index: int, value: float) -> Jet2:
        grad = np.zeros(num_vars)
        grad[index] = 1.0
        return cls(float(value), grad, np.zeros((num_vars, num_vars)))

    @property
    def num_vars(self) -> int:
        return len(self.grad)

    def __add__(self, other: Jet2) -> Jet2:
        return Jet2(self.value + other.value, self.grad + other.grad, self.hess + other.hess)

    def __sub__(self, other: Jet2) -> Jet2:
        return Jet2(self.value - other.value, self.grad - other.grad, self.hess - other.hess)

    def __neg__(self) -> Jet2:
        return Jet2(-self.value, -self.grad, -self.hess)

    def __mul__(self, other: Jet2) -> Jet2:
        cross = np.outer(self.grad, other.grad)
        return Jet2(
            self.value * other.value,
            self.value * other.grad + other.value * self.grad,
            self.value * other.hess + other.value * self.hess + (cross + cross.T),
        )

    def reciprocal(self, point: Sequence[float]) -> Jet2:
        """1/self; point is only used for the error report."""
        if self.value == 0.0:
            raise DivisionByZeroAt(point)
        inv = 1.0 / self.value
        return Jet2(
            inv,
            -inv * inv * self.grad,
            -inv * inv * self.hess + 2.0 * inv**3 * np.outer(self.grad, self.grad),
        )

    def power(self, exponent: int, point: Sequence[float]) -> Jet2:
        if exponent < 0:
            return self.power(-exponent, point).reciprocal(point)
        result = Jet2.constant(self.num_vars, 1.0)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result


class FieldExpr(ABC):
    """Base class of expression nodes; supports Python arithmetic operators."""

    tag: ClassVar[str] = ""

    @abstractmethod
    def jet(self, point: Sequence[float]) -> Jet2:
        ...

    @abstractmethod
    def evaluate(self, point: Sequence[float]) -> float:
        ...

    @abstractmethod
    def substitute(self, images: Sequence[FieldExpr]) -> FieldExpr:
        """Replace every coordinate x_j by images[j]."""

    @abstractmethod
    def max_coord(self) -> int:
        """Largest coordinate index used, or -1 for a constant expression."""

    def __add__(self, other: FieldExpr | float) -> FieldExpr:
        return Add(self, as_expr(other))

    def __radd__(self, other: float) -> FieldExpr:
        return Add(as_expr(other), self)

    def __sub__(self, other: FieldExpr | float) -> FieldExpr:
        return Sub(self, as_expr(other))

    def __rsub__(self, other: float) -> FieldExpr:
        return Sub(as_expr(other), self)

    def __mul__(self, other: FieldExpr | float) -> FieldExpr:
        return Mul(self, as_expr(other))

    def __rmul__(self, other: float) -> FieldExpr:
        return Mul(as_expr(other), self)

    def __truediv__(self, other: FieldExpr | float) -> FieldExpr:
        return Div(self, as_expr(other))

    def __rtruediv__(self, other: float) -> FieldExpr:
        return Div(as_expr(other), self)

    def __pow__(self, exponent: int) -> FieldExpr:
        return Pow(self, exponent)

    def __neg__(self) -> FieldExpr:
        return Mul(Const(-1.0), self)


def as_expr(value: FieldExpr | float) -> FieldExpr:
    return value if isinstance(value, FieldExpr) else Const(float(value))


def _check_point(point: Sequence[float], index: int) -> None:
    if index >= len(point):
        raise ShapeError(f"Coordinate x_{index} needs a point in R^{index + 1} or larger")


@dataclass(frozen=True)
class Const(FieldExpr):
    value: float
    tag: ClassVar[str] = "const"

    def jet(self, point: Sequence[float]) -> Jet2:
        return Jet2.constant(len(point), self.value)

    def evaluate(self, point: Sequence[float]) -> float:
        return self.value

    def substitute(self, images: Sequence[FieldExpr]) -> FieldExpr:
        return self

    def max_coord(self) -> int:
        return -1


@dataclass(frozen=True)
class Coord(FieldExpr):
    index: int
    tag: ClassVar[str] = "coord"

    def jet(self, point: Sequence[float]) -> Jet2:
        _check_point(point, self.index)
        return Jet2.variable(len(point), self.index, point[self.index])

    def evaluate(self, point: Sequence[float]) -> float:
        _check_point(point, self.index)
        return float(point[self.index])

    def substitute(self, images: Sequence[FieldExpr]) -> FieldExpr:
        return images[self.index]

    def max_coord(self) -> int:
        return self.index


@dataclass(frozen=True)
class _Binary(FieldExpr):
    left: FieldExpr
    right: FieldExpr

    def substitute(self, images: Sequence[FieldExpr]) -> FieldExpr:
        return type(self)(self.left.substitute(images), self.right.substitute(images))

    def max_coord(self) -> int:
        return max(self.left.max_coord(), self.right.max_coord())


@dataclass(frozen=True)
class Add(_Binary):
    tag: ClassVar[str] = "add"

    def jet(self, point: Sequence[float]) -> Jet2:
        return self.left.jet(point) + self.right.jet(point)

    def evaluate(self, point: Sequence[float]) -> float:
        return self.left.evaluate(point) + self.right.evaluate(point)


@dataclass(frozen=True)
class Sub(_Binary):
    tag: ClassVar[str] = "sub"

    def jet(self, point: Sequence[float]) -> Jet2:
        return self.left.jet(point) - self.right.jet(point)

    def evaluate(self, point: Sequence[float]) -> float:
        return self.left.evaluate(point) - self.right.evaluate(point)


@dataclass(frozen=True)
class Mul(_Binary):
    tag: ClassVar[str] = "mul"

    def jet(self, point: Sequence[float]) -> Jet2:
        return self.left.jet(point) * self.right.jet(point)

    def evaluate(self, point: Sequence[float]) -> float:
        return self.left.evaluate(point) * self.right.evaluate(point)


@dataclass(frozen=True)
class Div(_Binary):
    tag: ClassVar[str] = "div"

    def jet(self, point: Sequence[float]) -> Jet2:
        return self.left.jet(point) * self.right.jet(point).reciprocal(point)

    def evaluate(self, point: Sequence[float]) -> float:
        denominator = self.right.evaluate(point)
        if denominator == 0.0:
            raise DivisionByZeroAt(point)
        return self.left.evaluate(point) / denominator


@dataclass(frozen=True)
class Pow(FieldExpr):
    base: FieldExpr
    exponent: int
    tag: ClassVar[str] = "pow"

    def jet(self, point: Sequence[float]) -> Jet2:
        return self.base.jet(point).power(self.exponent, point)

    def evaluate(self, point: Sequence[float]) -> float:
        value = self.base.evaluate(point)
        if self.exponent < 0 and value == 0.0:
            raise DivisionByZeroAt(point)
        return float(value**self.exponent)

    def substitute(self, images: Sequence[FieldExpr]) -> FieldExpr:
        return Pow(self.base.substitute(images), self.exponent)

    def max_coord(self) -> int:
        return self.base.max_coord()
