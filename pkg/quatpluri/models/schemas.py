"""JSON documents for the command-line interfaces.

Encodings:
    quaternion   [w, x, y, z]
    qmatrix      {"rows": p, "cols": m, "data": [[w, x, y, z], ...]} row-major
    cmatrix      {"rows": p, "cols": m, "re": [...], "im": [...]} row-major
    form         {"n": n, "grade": k, "terms": [{"idx": [...], "re": ..., "im": ...}]}
    polynomial   {"vars": 4n, "terms": [{"exp": [...], "re": ..., "im": ...}]}
    field        {"tag": "add", "left": ..., "right": ...} and friends
    spectral     {"E": <qmatrix>, "nu": [...]}
"""

from __future__ import annotations

import json
from typing import Annotated, Any, Literal

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from quatpluri.core.errors import DocumentError, ShapeError
from quatpluri.core.field_expr import Add, Const, Coord, Div, FieldExpr, Mul, Pow, Sub
from quatpluri.core.polynomial import Polynomial
from quatpluri.models.form import Form
from quatpluri.models.quaternion import CMatrix, QMatrix
from quatpluri.models.spectral import SpectralData

QuaternionDoc = Annotated[list[float], Field(min_length=4, max_length=4)]


class _Document(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)


# ===== Matrices =====


class QMatrixDoc(_Document):
    rows: int = Field(ge=1)
    cols: int = Field(ge=1)
    data: list[QuaternionDoc]

    @model_validator(mode="after")
    def _check_size(self) -> QMatrixDoc:
        if len(self.data) != self.rows * self.cols:
            raise ValueError(f"Expected {self.rows * self.cols} entries, got {len(self.data)}")
        return self

    def to_domain(self) -> QMatrix:
        return QMatrix.from_components(
            np.asarray(self.data, dtype=float).reshape(self.rows, self.cols, 4)
        )

    @classmethod
    def from_domain(cls, M: QMatrix) -> QMatrixDoc:
        data = M.components.reshape(-1, 4).tolist()
        return cls(rows=M.rows, cols=M.cols, data=data)


class CMatrixDoc(_Document):
    rows: int = Field(ge=1)
    cols: int = Field(ge=1)
    re: list[float]
    im: list[float]

    @model_validator(mode="after")
    def _check_size(self) -> CMatrixDoc:
        size = self.rows * self.cols
        if len(self.re) != size or len(self.im) != size:
            raise ValueError(f"Expected {size} real and imaginary parts")
        return self

    def to_domain(self) -> CMatrix:
        re = np.asarray(self.re, dtype=float)
        im = np.asarray(self.im, dtype=float)
        return CMatrix.from_array((re + 1j * im).reshape(self.rows, self.cols))

    @classmethod
    def from_domain(cls, M: CMatrix) -> CMatrixDoc:
        flat = M.array.reshape(-1)
        return cls(rows=M.rows, cols=M.cols, re=flat.real.tolist(), im=flat.imag.tolist())


# ===== Forms and polynomials =====


class FormTermDoc(_Document):
    idx: list[int]
    re: float = 0.0
    im: float = 0.0


class FormDoc(_Document):
    n: int = Field(ge=1)
    grade: int = Field(ge=0)
    terms: list[FormTermDoc] = Field(default_factory=list)

    def to_domain(self) -> Form:
        terms: dict[tuple[int, ...], complex] = {}
        for term in self.terms:
            key = tuple(term.idx)
            if key in terms:
                raise ValueError(f"Duplicate index {list(key)}")
            terms[key] = complex(term.re, term.im)
        return Form(self.n, self.grade, terms)

    @classmethod
    def from_domain(cls, F: Form) -> FormDoc:
        terms = [
            FormTermDoc(idx=list(key), re=c.real, im=c.imag) for key, c in sorted(F.terms.items())
        ]
        return cls(n=F.half_dim, grade=F.grade, terms=terms)


class MonomialDoc(_Document):
    exp: list[int]
    re: float = 0.0
    im: float = 0.0


class PolynomialDoc(_Document):
    vars: int = Field(ge=1)
    terms: list[MonomialDoc] = Field(default_factory=list)

    def to_domain(self) -> Polynomial:
        result = Polynomial.zero(self.vars)
        for term in self.terms:
            result = result + Polynomial(self.vars, {tuple(term.exp): complex(term.re, term.im)})
        return result


# ===== Field expressions =====


class ConstDoc(_Document):
    tag: Literal["const"]
    value: float

    def to_domain(self) -> FieldExpr:
        return Const(self.value)


class CoordDoc(_Document):
    tag: Literal["coord"]
    index: int = Field(ge=0)

    def to_domain(self) -> FieldExpr:
        return Coord(self.index)


class BinaryDoc(_Document):
    tag: Literal["add", "sub", "mul", "div"]
    left: FieldDoc
    right: FieldDoc

    def to_domain(self) -> FieldExpr:
        node = {"add": Add, "sub": Sub, "mul": Mul, "div": Div}[self.tag]
        return node(self.left.to_domain(), self.right.to_domain())


class PowDoc(_Document):
    tag: Literal["pow"]
    base: FieldDoc
    exponent: int

    def to_domain(self) -> FieldExpr:
        return Pow(self.base.to_domain(), self.exponent)


FieldDoc = Annotated[ConstDoc | CoordDoc | BinaryDoc | PowDoc, Field(discriminator="tag")]

BinaryDoc.model_rebuild()
PowDoc.model_rebuild()


class _FieldEnvelope(_Document):
    root: FieldDoc


def field_to_doc(expr: FieldExpr) -> dict[str, Any]:
    """Serialize a field expression tree."""
    if isinstance(expr, Const):
        return {"tag": "const", "value": expr.value}
    if isinstance(expr, Coord):
        return {"tag": "coord", "index": expr.index}
    if isinstance(expr, Pow):
        return {"tag": "pow", "base": field_to_doc(expr.base), "exponent": expr.exponent}
    if isinstance(expr, Add | Sub | Mul | Div):
        return {"tag": expr.tag, "left": field_to_doc(expr.left), "right": field_to_doc(expr.right)}
    raise TypeError(f"Cannot serialize {type(expr).__name__}")


# ===== Spectral data =====


class SpectralDoc(_Document):
    E: QMatrixDoc
    nu: list[float]

    def to_domain(self) -> SpectralData:
        return SpectralData(E=self.E.to_domain(), nu=tuple(self.nu))

    @classmethod
    def from_domain(cls, spectral: SpectralData) -> SpectralDoc:
        return cls(E=QMatrixDoc.from_domain(spectral.E), nu=list(spectral.nu))


# ===== Parsing entry points =====


def _load(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f"Invalid JSON: {e}") from e


def _validate(model: type[_Document], raw: Any) -> Any:
    try:
        return model.model_validate(raw).to_domain()  # type: ignore[attr-defined]
    except ValidationError as e:
        raise DocumentError(f"Invalid {model.__name__}: {e}") from e
    except (ValueError, ShapeError) as e:
        raise DocumentError(str(e)) from e


def parse_qmatrix(text: str) -> QMatrix:
    """Parse a quaternion-matrix document.

    Raises:
        DocumentError: If the text is not valid JSON or does not match the schema
    """
    return _validate(QMatrixDoc, _load(text))


def parse_cmatrix(text: str) -> CMatrix:
    return _validate(CMatrixDoc, _load(text))


def parse_form(text: str) -> Form:
    """Parse a form document.

    Raises:
        DocumentError: On malformed JSON, schema mismatch or invalid index keys
    """
    return _validate(FormDoc, _load(text))


def parse_spectral(text: str) -> SpectralData:
    return _validate(SpectralDoc, _load(text))


def parse_field(text: str) -> FieldExpr | Polynomial:
    """Parse either a polynomial document or a field expression tree.

    A document with a "vars" key is a polynomial, one with a "tag" key is an
    expression tree.

    Raises:
        DocumentError: If the document is neither
    """
    raw = _load(text)
    if isinstance(raw, dict) and "vars" in raw:
        return _validate(PolynomialDoc, raw)
    if isinstance(raw, dict) and "tag" in raw:
        try:
            return _FieldEnvelope.model_validate({"root": raw}).root.to_domain()
        except ValidationError as e:
            raise DocumentError(f"Invalid field expression: {e}") from e
    raise DocumentError("Field documents need a 'vars' (polynomial) or 'tag' (expression) key")
