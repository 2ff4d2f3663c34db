"""JSON matrix files and text scalars.

A matrix file looks like::

    {
      "field_mode": "rational",
      "n": 2,
      "diag": ["1", "2"],
      "anti": ["3", "4"]
    }

Rational entries are strings (``"3"``, ``"-7/2"``) or JSON integers. Float
entries are JSON numbers, written with ``repr`` so that a write/parse round
trip is bit-exact.
"""
from __future__ import annotations

import json
import logging
import math
import re
from fractions import Fraction
from pathlib import Path
from typing import Union

from .core import FIELDS, FLOAT, RATIONAL, XMatrix, infer_field
from .errors import InvalidScalar, ParseError
from .companion import RealFactorization
from .spectral import MonicPoly

log = logging.getLogger(__name__)

_RATIONAL_TEXT = re.compile(r"^\s*[+-]?\d+(\s*/\s*\d+)?\s*$")

PathLike = Union[str, Path]


def _reject_constant(name):
    raise ValueError(f"{name} is not allowed")


def _loads(text: str):
    try:
        return json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno) from exc
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def _entry(value, mode: str, where: str):
    if isinstance(value, bool):
        raise ParseError(f"boolean {value!r} is not a number", field=where)
    if mode == RATIONAL:
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, str):
            try:
                return Fraction(value.strip())
            except (ValueError, ZeroDivisionError):
                raise ParseError(f"{value!r} is not a rational literal", field=where) from None
        raise ParseError(f"rational entries must be strings or integers, got {value!r}",
                         field=where)
    if isinstance(value, (int, float)):
        x = float(value)
        if not math.isfinite(x):
            raise ParseError(f"non-finite value {value!r}", field=where)
        return x
    raise ParseError(f"float64 entries must be JSON numbers, got {value!r}", field=where)


def matrix_from_text(text: str) -> XMatrix:
    obj = _loads(text)
    if not isinstance(obj, dict):
        raise ParseError("top level must be a JSON object", line=1)
    for key in ("field_mode", "n", "diag", "anti"):
        if key not in obj:
            raise ParseError("missing", field=key)
    extra = sorted(set(obj) - {"field_mode", "n", "diag", "anti"})
    if extra:
        raise ParseError(f"unknown key(s) {', '.join(extra)}")
    mode = obj["field_mode"]
    if mode not in FIELDS:
        raise ParseError(f"must be one of {', '.join(FIELDS)}, got {mode!r}", field="field_mode")
    n = obj["n"]
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ParseError(f"must be a positive integer, got {n!r}", field="n")
    vals = {}
    for key in ("diag", "anti"):
        seq = obj[key]
        if not isinstance(seq, list):
            raise ParseError("must be a list", field=key)
        if len(seq) != n:
            raise ParseError(f"has {len(seq)} entries but n = {n}", field=key)
        vals[key] = [_entry(v, mode, f"{key}[{k + 1}]") for k, v in enumerate(seq)]
    if n % 2 and vals["anti"][n // 2] != 0:
        log.warning("anti-diagonal center entry %s folded into diag[%d]",
                    vals["anti"][n // 2], n // 2 + 1)
    return XMatrix(vals["diag"], vals["anti"], field=mode)


def _literal(v, mode: str):
    # floats go out via repr so they parse back to the same bits
    return float(v) if mode == FLOAT else str(v)


def matrix_to_text(a: XMatrix) -> str:
    mode = a.field
    diag = [_literal(v, mode) for v in a.d.tolist()]
    anti = [_literal(v, mode) for v in a.e.tolist()]
    return ("{\n"
            f'  "field_mode": {json.dumps(mode)},\n'
            f'  "n": {a.n},\n'
            f'  "diag": {json.dumps(diag)},\n'
            f'  "anti": {json.dumps(anti)}\n'
            "}\n")


def parse_matrix(path: PathLike) -> XMatrix:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc
    return matrix_from_text(text)


def write_matrix(a: XMatrix, path: PathLike) -> None:
    Path(path).write_text(matrix_to_text(a), encoding="utf-8")


def scalar_literal(v) -> str:
    """Text form of a scalar: ``p/q`` for rationals, ``repr`` for floats."""
    if isinstance(v, float):
        return repr(v)
    return str(v)


def parse_scalar_text(text: str):
    """``"3"`` and ``"-7/2"`` become Fractions; anything else must parse as a float."""
    if _RATIONAL_TEXT.match(text):
        try:
            return Fraction(text.replace(" ", ""))
        except ZeroDivisionError:
            raise InvalidScalar(f"zero denominator in {text!r}") from None
    try:
        x = float(text)
    except ValueError:
        raise InvalidScalar(f"{text!r} is not a number") from None
    if not math.isfinite(x):
        raise InvalidScalar(f"non-finite value {text!r}")
    return x


def parse_coeffs(text: str) -> MonicPoly:
    """Comma-separated ascending coefficients ``a0,...,a_{n-1}`` of a monic polynomial."""
    parts = [p for p in text.split(",")]
    if not text.strip() or any(not p.strip() for p in parts):
        raise ParseError("expected a comma-separated list of coefficients", field="coeffs")
    try:
        vals = [parse_scalar_text(p) for p in parts]
    except InvalidScalar as exc:
        raise ParseError(str(exc), field="coeffs") from exc
    if infer_field(vals) == FLOAT:
        vals = [float(v) for v in vals]
    return MonicPoly(tuple(vals))


def factors_from_text(text: str) -> RealFactorization:
    """``{"linear": [...], "quadratics": [[beta, gamma], ...]}`` with the entry rules above."""
    obj = _loads(text)
    if not isinstance(obj, dict):
        raise ParseError("top level must be a JSON object", line=1)
    extra = sorted(set(obj) - {"linear", "quadratics"})
    if extra:
        raise ParseError(f"unknown key(s) {', '.join(extra)}")
    linear = obj.get("linear", [])
    quads = obj.get("quadratics", [])
    if not isinstance(linear, list):
        raise ParseError("must be a list", field="linear")
    if not isinstance(quads, list) or any(not isinstance(q, list) or len(q) != 2 for q in quads):
        raise ParseError("must be a list of [beta, gamma] pairs", field="quadratics")
    raw = linear + [x for q in quads for x in q]
    mode = FLOAT if any(isinstance(x, float) for x in raw) else RATIONAL
    lin = [_entry(v, mode, f"linear[{k + 1}]") for k, v in enumerate(linear)]
    qs = [(_entry(b, mode, f"quadratics[{k + 1}][1]"), _entry(g, mode, f"quadratics[{k + 1}][2]"))
          for k, (b, g) in enumerate(quads)]
    if not lin and not qs:
        raise ParseError("factorisation is empty")
    return RealFactorization(tuple(lin), tuple(qs))


def parse_factors(path: PathLike) -> RealFactorization:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc
    return factors_from_text(text)


__all__ = ["parse_matrix", "write_matrix", "matrix_from_text", "matrix_to_text",
           "scalar_literal", "parse_scalar_text", "parse_coeffs", "parse_factors",
           "factors_from_text"]
