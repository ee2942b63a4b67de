"""Sparse elements of the exterior algebra over C^{2n}."""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field

Index = tuple[int, ...]


def sort_with_sign(indices: Iterable[int]) -> tuple[int, Index]:
    """Sort an index sequence, returning the permutation sign and sorted key.

    The sign is 0 when an index repeats (the wedge product vanishes).
    """
    items = list(indices)
    if len(set(items)) != len(items):
        return 0, ()
    sign = 1
    # insertion sort, counting transpositions
    for i in range(1, len(items)):
        j = i
        while j > 0 and items[j - 1] > items[j]:
            items[j - 1], items[j] = items[j], items[j - 1]
            sign = -sign
            j -= 1
    return sign, tuple(items)


@dataclass(frozen=True)
class Form:
    """A homogeneous element of ∧^k C^{2n}.

    Keys are strictly increasing index tuples of length ``grade`` with entries
    below ``2 * half_dim``; exact zero coefficients are never stored.
    """

    half_dim: int
    grade: int
    terms: Mapping[Index, complex] = field(default_factory=dict)

    def __post_init__(self) -> None:
        dim = 2 * self.half_dim
        clean: dict[Index, complex] = {}
        for key, coeff in self.terms.items():
            key = tuple(int(i) for i in key)
            if len(key) != self.grade:
                raise ValueError(f"Key {key} does not have grade {self.grade}")
            if any(a >= b for a, b in zip(key, key[1:], strict=False)):
                raise ValueError(f"Key {key} is not strictly increasing")
            if key and (key[0] < 0 or key[-1] >= dim):
                raise ValueError(f"Key {key} out of range for C^{dim}")
            c = complex(coeff)
            if c != 0:
                clean[key] = c
        object.__setattr__(self, "terms", clean)

    # ===== Constructors =====

    @classmethod
    def zero(cls, half_dim: int, grade: int) -> Form:
        return cls(half_dim, grade, {})

    @classmethod
    def scalar(cls, half_dim: int, value: complex) -> Form:
        return cls(half_dim, 0, {(): value})

    @classmethod
    def basis(cls, half_dim: int, *indices: int, coeff: complex = 1.0) -> Form:
        """The form coeff·ω^{i1}∧…∧ω^{ik}; indices need not be sorted."""
        sign, key = sort_with_sign(indices)
        return cls(half_dim, len(indices), {key: sign * coeff} if sign else {})

    @classmethod
    def one_form(cls, half_dim: int, coefficients: Iterable[complex]) -> Form:
        """Σ_A c_A ω^A from a length-2n coefficient vector."""
        return cls(half_dim, 1, {(a,): c for a, c in enumerate(coefficients)})

    # ===== Queries =====

    def coefficient(self, key: Index) -> complex:
        return self.terms.get(tuple(key), 0j)

    def is_zero(self) -> bool:
        return not self.terms

    def max_abs(self) -> float:
        return max((abs(c) for c in self.terms.values()), default=0.0)

    def max_abs_diff(self, other: Form) -> float:
        self._check_compatible(other)
        keys = set(self.terms) | set(other.terms)
        return max((abs(self.coefficient(k) - other.coefficient(k)) for k in keys), default=0.0)

    # ===== Linear structure =====

    def _check_compatible(self, other: Form) -> None:
        if self.half_dim != other.half_dim or self.grade != other.grade:
            raise ValueError(
                f"Incompatible forms: (n={self.half_dim}, k={self.grade}) vs "
                f"(n={other.half_dim}, k={other.grade})"
            )

    def __add__(self, other: Form) -> Form:
        self._check_compatible(other)
        terms = dict(self.terms)
        for key, coeff in other.terms.items():
            terms[key] = terms.get(key, 0j) + coeff
        return Form(self.half_dim, self.grade, terms)

    def __neg__(self) -> Form:
        return self.scale(-1.0)

    def __sub__(self, other: Form) -> Form:
        return self + (-other)

    def scale(self, factor: complex) -> Form:
        return Form(self.half_dim, self.grade, {k: factor * c for k, c in self.terms.items()})

    def __mul__(self, factor: complex) -> Form:
        return self.scale(factor)

    __rmul__ = __mul__

    def conj(self) -> Form:
        """Coefficient-wise complex conjugate."""
        return Form(self.half_dim, self.grade, {k: c.conjugate() for k, c in self.terms.items()})
