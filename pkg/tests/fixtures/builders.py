"""
Fixture builders for the JSON documents consumed by the CLI.

Builders produce plain dicts (and their JSON text) in the wire encodings, so
tests exercise the same parsing path as real inputs.

Usage:
    from tests.fixtures.builders import QMatrixDocBuilder, FormDocBuilder

    doc = (QMatrixDocBuilder(2)
        .with_entry(0, 0, 2.0)
        .with_entry(0, 1, (0, 1, 1, 0))
        .with_entry(1, 0, (0, -1, -1, 0))
        .with_entry(1, 1, 2.0)
        .to_json())
"""

import json
from typing import Any


def _quaternion(value: float | tuple[float, float, float, float]) -> list[float]:
    if isinstance(value, tuple):
        return [float(v) for v in value]
    return [float(value), 0.0, 0.0, 0.0]


class QMatrixDocBuilder:
    """Builder for quaternion-matrix documents (row-major [w, x, y, z] entries)."""

    def __init__(self, rows: int, cols: int | None = None):
        self._rows = rows
        self._cols = cols if cols is not None else rows
        self._data = [[0.0, 0.0, 0.0, 0.0] for _ in range(self._rows * self._cols)]

    def with_entry(
        self, row: int, col: int, value: float | tuple[float, float, float, float]
    ) -> "QMatrixDocBuilder":
        """Set one entry; a bare float is a real quaternion."""
        self._data[row * self._cols + col] = _quaternion(value)
        return self

    def identity(self) -> "QMatrixDocBuilder":
        for l in range(min(self._rows, self._cols)):
            self.with_entry(l, l, 1.0)
        return self

    def diagonal(self, *values: float) -> "QMatrixDocBuilder":
        for l, v in enumerate(values):
            self.with_entry(l, l, v)
        return self

    def build(self) -> dict[str, Any]:
        return {"rows": self._rows, "cols": self._cols, "data": [list(q) for q in self._data]}

    def to_json(self) -> str:
        return json.dumps(self.build())


class FormDocBuilder:
    """Builder for exterior-form documents."""

    def __init__(self, n: int, grade: int):
        self._n = n
        self._grade = grade
        self._terms: list[dict[str, Any]] = []

    def with_term(self, idx: list[int], re: float = 0.0, im: float = 0.0) -> "FormDocBuilder":
        self._terms.append({"idx": list(idx), "re": re, "im": im})
        return self

    def beta(self, scale: float = 1.0) -> "FormDocBuilder":
        """Add scale·Σ ω^l∧ω^{n+l}."""
        for l in range(self._n):
            self.with_term([l, self._n + l], re=scale)
        return self

    def build(self) -> dict[str, Any]:
        return {"n": self._n, "grade": self._grade, "terms": list(self._terms)}

    def to_json(self) -> str:
        return json.dumps(self.build())


class PolynomialDocBuilder:
    """Builder for polynomial documents on R^{4n}."""

    def __init__(self, n: int):
        self._vars = 4 * n
        self._terms: list[dict[str, Any]] = []

    def with_monomial(
        self, powers: dict[int, int], re: float = 1.0, im: float = 0.0
    ) -> "PolynomialDocBuilder":
        """Add re·Π x_j^{powers[j]}."""
        exp = [0] * self._vars
        for j, p in powers.items():
            exp[j] = p
        self._terms.append({"exp": exp, "re": re, "im": im})
        return self

    def norm_sq(self) -> "PolynomialDocBuilder":
        for j in range(self._vars):
            self.with_monomial({j: 2})
        return self

    def build(self) -> dict[str, Any]:
        return {"vars": self._vars, "terms": list(self._terms)}

    def to_json(self) -> str:
        return json.dumps(self.build())


def fundamental_solution_doc(n: int, eps: float) -> dict[str, Any]:
    """Expression tree for -1 / (‖q‖² + ε)."""
    total: dict[str, Any] = {"tag": "const", "value": eps}
    for j in range(4 * n):
        square = {"tag": "pow", "base": {"tag": "coord", "index": j}, "exponent": 2}
        total = {"tag": "add", "left": total, "right": square}
    return {"tag": "div", "left": {"tag": "const", "value": -1.0}, "right": total}
