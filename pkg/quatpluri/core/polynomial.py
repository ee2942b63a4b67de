"""Multivariate polynomials with complex coefficients on R^{4n}.

Coordinates are x_0 … x_{4n-1}, with q_l = x_{4l} + x_{4l+1} i + x_{4l+2} j + x_{4l+3} k.
A polynomial is a sparse map from exponent vectors to coefficients. Integer
coefficients stay exact under every operation here except compose_linear
with non-integer matrices.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field

import numpy as np

from quatpluri.core.errors import ComplexFieldError, ShapeError
from quatpluri.core.field_expr import Const, Coord, FieldExpr

Exponent = tuple[int, ...]

Scalar = complex | float | int


@dataclass(frozen=True)
class Polynomial:
    """Σ c_e x^e over exponent vectors e of length num_vars."""

    num_vars: int
    terms: Mapping[Exponent, complex] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean: dict[Exponent, complex] = {}
        for exp, coeff in self.terms.items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != self.num_vars:
                raise ShapeError(f"Exponent {exp} does not have {self.num_vars} entries")
            if any(e < 0 for e in exp):
                raise ValueError(f"Negative exponent in {exp}")
            c = complex(coeff)
            if c != 0:
                clean[exp] = c
        object.__setattr__(self, "terms", clean)

    # ===== Constructors =====

    @classmethod
    def zero(cls, num_vars: int) -> Polynomial:
        return cls(num_vars, {})

    @classmethod
    def constant(cls, num_vars: int, value: Scalar) -> Polynomial:
        return cls(num_vars, {(0,) * num_vars: value})

    @classmethod
    def variable(cls, num_vars: int, index: int, coeff: Scalar = 1.0) -> Polynomial:
        """coeff · x_index."""
        if not 0 <= index < num_vars:
            raise ShapeError(f"Variable x_{index} out of range for {num_vars} variables")
        exp = [0] * num_vars
        exp[index] = 1
        return cls(num_vars, {tuple(exp): coeff})

    @classmethod
    def linear(cls, coefficients: Iterable[Scalar]) -> Polynomial:
        """Σ_j c_j x_j."""
        coeffs = list(coefficients)
        num_vars = len(coeffs)
        result = cls.zero(num_vars)
        for j, c in enumerate(coeffs):
            if c != 0:
                result = result + cls.variable(num_vars, j, c)
        return result

    # ===== Queries =====

    def coefficient(self, exp: Exponent) -> complex:
        return self.terms.get(tuple(exp), 0j)

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def is_real(self) -> bool:
        return all(c.imag == 0 for c in self.terms.values())

    def max_abs(self) -> float:
        return max((abs(c) for c in self.terms.values()), default=0.0)

    def max_abs_diff(self, other: Polynomial) -> float:
        return (self - other).max_abs()

    # ===== Ring structure =====

    def _coerce(self, other: Polynomial | Scalar) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.num_vars != self.num_vars:
                raise ShapeError(
                    f"Polynomials in {self.num_vars} and {other.num_vars} variables do not mix"
                )
            return other
        return Polynomial.constant(self.num_vars, other)

    def __add__(self, other: Polynomial | Scalar) -> Polynomial:
        o = self._coerce(other)
        terms = dict(self.terms)
        for exp, coeff in o.terms.items():
            terms[exp] = terms.get(exp, 0j) + coeff
        return Polynomial(self.num_vars, terms)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return self.scale(-1)

    def __sub__(self, other: Polynomial | Scalar) -> Polynomial:
        return self + (-self._coerce(other))

    def __rsub__(self, other: Polynomial | Scalar) -> Polynomial:
        return self._coerce(other) - self

    def scale(self, factor: Scalar) -> Polynomial:
        return Polynomial(self.num_vars, {e: factor * c for e, c in self.terms.items()})

    def __mul__(self, other: Polynomial | Scalar) -> Polynomial:
        if not isinstance(other, Polynomial):
            return self.scale(other)
        o = self._coerce(other)
        terms: dict[Exponent, complex] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2, strict=True))
                terms[exp] = terms.get(exp, 0j) + c1 * c2
        return Polynomial(self.num_vars, terms)

    __rmul__ = __mul__

    def __pow__(self, power: int) -> Polynomial:
        if power < 0:
            raise ValueError("Polynomial powers must be non-negative")
        result = Polynomial.constant(self.num_vars, 1)
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    # ===== Calculus =====

    def derivative(self, index: int) -> Polynomial:
        """∂/∂x_index."""
        if not 0 <= index < self.num_vars:
            raise ShapeError(f"Variable x_{index} out of range for {self.num_vars} variables")
        terms: dict[Exponent, complex] = {}
        for exp, coeff in self.terms.items():
            power = exp[index]
            if power:
                lowered = exp[:index] + (power - 1,) + exp[index + 1 :]
                terms[lowered] = terms.get(lowered, 0j) + power * coeff
        return Polynomial(self.num_vars, terms)

    def conj(self) -> Polynomial:
        """Coefficient-wise complex conjugate."""
        return Polynomial(self.num_vars, {e: c.conjugate() for e, c in self.terms.items()})

    def evaluate(self, point: Sequence[float]) -> complex:
        x = np.asarray(point, dtype=float)
        if x.shape != (self.num_vars,):
            raise ShapeError(f"Expected a point in R^{self.num_vars}, got shape {x.shape}")
        return complex(sum(c * np.prod(x ** np.array(e)) for e, c in self.terms.items()))

    def gradient(self, point: Sequence[float]) -> np.ndarray:
        return np.array([self.derivative(j).evaluate(point) for j in range(self.num_vars)])

    def hessian(self, point: Sequence[float]) -> np.ndarray:
        """Matrix of second partial derivatives at a point (complex)."""
        first = [self.derivative(j) for j in range(self.num_vars)]
        H = np.zeros((self.num_vars, self.num_vars), dtype=complex)
        for j in range(self.num_vars):
            for k in range(j, self.num_vars):
                H[j, k] = H[k, j] = first[j].derivative(k).evaluate(point)
        return H

    def compose_linear(self, L: np.ndarray) -> Polynomial:
        """Substitute x ↦ L x, i.e. x_j ↦ Σ_k L_jk x_k."""
        L = np.asarray(L)
        if L.shape != (self.num_vars, self.num_vars):
            raise ShapeError(f"Expected a {self.num_vars}x{self.num_vars} matrix, got {L.shape}")
        images = [Polynomial.linear(L[j]) for j in range(self.num_vars)]
        result = Polynomial.zero(self.num_vars)
        for exp, coeff in self.terms.items():
            term = Polynomial.constant(self.num_vars, coeff)
            for j, power in enumerate(exp):
                if power:
                    term = term * images[j] ** power
            result = result + term
        return result

    def to_expr(self) -> FieldExpr:
        """The same real polynomial as a field expression.

        Raises:
            ComplexFieldError: If some coefficient is not real
        """
        if not self.is_real():
            raise ComplexFieldError("Only real polynomials convert to field expressions")
        expr: FieldExpr = Const(0.0)
        for exp, coeff in sorted(self.terms.items()):
            term: FieldExpr = Const(coeff.real)
            for j, power in enumerate(exp):
                if power:
                    term = term * (Coord(j) ** power if power > 1 else Coord(j))
            expr = expr + term
        return expr

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exp, coeff in sorted(self.terms.items(), reverse=True):
            monomial = "*".join(
                f"x{j}" if p == 1 else f"x{j}^{p}" for j, p in enumerate(exp) if p
            )
            parts.append(f"({coeff:g})" + (f"*{monomial}" if monomial else ""))
        return " + ".join(parts)
