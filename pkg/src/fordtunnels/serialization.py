"""Rep documents (JSON) and canonical report text.

A rep document looks like::

    {
      "t_alpha": [100, 0],
      "t_beta": [0, 100],
      "gammas": [[[[0, 0], [1, 0]], [[-1, 0], [0, -5]]], ...],
      "tol": 1e-9,
      "family": "prop42", "params": [2.0]
    }

Complex numbers are ``[re, im]`` pairs (a bare real number is accepted too)
and matrices are row-major.  ``tol``, ``family`` and ``params`` are optional.
Rep documents keep full float precision so that they round-trip exactly;
reports use 12 significant digits.
"""

from __future__ import annotations

import dataclasses
import json
import math
import warnings

from .errors import ParseError, SingularMatrix, ValidationError
from .geometry import Geodesic, GeodesicSegment, IsometricSphere
from .group import DET_TOL, CompressionBodyRep, Parallelogram, Word, validate
from .moebius import DEFAULT_TOL, INF, HalfSpacePoint, MoebiusMap, normalize

KNOWN_KEYS = {"format", "version", "t_alpha", "t_beta", "gammas", "tol", "family", "params"}
FAMILIES = {"simple-ford", "prop42", "thm43"}


class DeterminantNormalized(UserWarning):
    """A generator in a parsed document did not have determinant 1 and was rescaled."""


def _number(x, field: str) -> float:
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        raise ParseError(f"{field}: expected a number, got {json.dumps(x)}")
    if not math.isfinite(x):
        raise ParseError(f"{field}: non-finite number")
    return float(x)


def _complex(x, field: str) -> complex:
    if isinstance(x, list):
        if len(x) != 2:
            raise ParseError(f"{field}: expected [re, im], got a list of length {len(x)}")
        return complex(_number(x[0], f"{field}[0]"), _number(x[1], f"{field}[1]"))
    return complex(_number(x, field), 0.0)


def _matrix(x, field: str) -> MoebiusMap:
    if not isinstance(x, list) or len(x) != 2:
        raise ParseError(f"{field}: expected two rows")
    rows = []
    for i, row in enumerate(x):
        if not isinstance(row, list) or len(row) != 2:
            raise ParseError(f"{field}[{i}]: expected a row of two entries")
        rows.append([_complex(e, f"{field}[{i}][{j}]") for j, e in enumerate(row)])
    return MoebiusMap.from_rows(rows)


def parse_rep_data(data) -> CompressionBodyRep:
    """Build and validate a rep from an already decoded document."""
    if not isinstance(data, dict):
        raise ParseError("document root must be an object")
    for key in ("t_alpha", "t_beta", "gammas"):
        if key not in data:
            raise ParseError(f"missing field {key!r}")
    unknown = sorted(set(data) - KNOWN_KEYS)
    if unknown:
        raise ParseError(f"unknown field(s): {', '.join(unknown)}")
    t_alpha = _complex(data["t_alpha"], "t_alpha")
    t_beta = _complex(data["t_beta"], "t_beta")
    if not isinstance(data["gammas"], list):
        raise ParseError("gammas: expected a list of matrices")
    tol = _number(data["tol"], "tol") if "tol" in data else DEFAULT_TOL
    if tol <= 0:
        raise ParseError("tol: must be positive")
    family = data.get("family")
    if family is not None and family not in FAMILIES:
        raise ParseError(f"family: unknown family {family!r}")
    params = data.get("params", [])
    if not isinstance(params, list):
        raise ParseError("params: expected a list of numbers")
    params = tuple(_number(p, f"params[{i}]") for i, p in enumerate(params))
    gammas = []
    for i, raw in enumerate(data["gammas"]):
        field = f"gammas[{i}]"
        g = _matrix(raw, field)
        if abs(g.det - 1) > DET_TOL:
            try:
                g = normalize(g)
            except SingularMatrix as exc:
                raise ValidationError(f"{field}: {exc}") from exc
            warnings.warn(f"{field}: determinant rescaled to 1", DeterminantNormalized, stacklevel=3)
        gammas.append(g)
    rep = CompressionBodyRep(t_alpha, t_beta, tuple(gammas), tol=tol, family=family, params=params)
    report = validate(rep)
    if not report.ok:
        detail = next(c.detail for c in report.checks if c.name == report.failure)
        raise ValidationError(f"{report.failure} failed ({detail})")
    return rep


def parse_rep(document: str) -> CompressionBodyRep:
    try:
        data = json.loads(document)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    return parse_rep_data(data)


def load_rep(path) -> CompressionBodyRep:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc
    return parse_rep(text)


def _pair(z: complex) -> list:
    return [z.real + 0.0, z.imag + 0.0]


def rep_to_data(rep: CompressionBodyRep) -> dict:
    data = {
        "t_alpha": _pair(rep.t_alpha),
        "t_beta": _pair(rep.t_beta),
        "gammas": [[[_pair(e) for e in row] for row in g.rows()] for g in rep.gammas],
        "tol": rep.tol,
    }
    if rep.family is not None:
        data["family"] = rep.family
        data["params"] = list(rep.params)
    return data


def serialize_rep(rep: CompressionBodyRep) -> str:
    return json.dumps(rep_to_data(rep), indent=2, sort_keys=True) + "\n"


def format_float(x: float) -> str:
    """12 significant digits, lowercase exponent, no trailing zeros, no negative zero."""
    if math.isnan(x):
        return '"nan"'
    if math.isinf(x):
        return '"inf"' if x > 0 else '"-inf"'
    s = format(x, ".12g")
    return "0" if s in ("-0", "0") else s


def to_plain(obj):
    """Convert toolkit results into JSON-ready values."""
    if obj is None or isinstance(obj, (bool, str)):
        return obj
    if obj is INF:
        return "inf"
    if isinstance(obj, int):
        return obj
    if isinstance(obj, float):
        return obj
    if isinstance(obj, complex):
        return _pair(obj)
    if isinstance(obj, Word):
        return str(obj)
    if isinstance(obj, MoebiusMap):
        return [[_pair(e) for e in row] for row in obj.rows()]
    if isinstance(obj, HalfSpacePoint):
        return {"z": _pair(obj.z), "h": obj.h}
    if isinstance(obj, IsometricSphere):
        out = {"center": _pair(obj.center), "radius": obj.radius}
        if obj.owner is not None:
            out["owner"] = str(obj.owner)
        return out
    if isinstance(obj, Geodesic):
        return {"endpoints": [to_plain(e) for e in obj.endpoints]}
    if isinstance(obj, GeodesicSegment):
        return {"carrier": to_plain(obj.carrier), "start": to_plain(obj.start), "end": to_plain(obj.end)}
    if isinstance(obj, Parallelogram):
        return {"base": _pair(obj.base), "v1": _pair(obj.v1), "v2": _pair(obj.v2)}
    if isinstance(obj, tuple) and hasattr(obj, "_asdict"):
        return {k: to_plain(v) for k, v in obj._asdict().items()}
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: to_plain(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(k): to_plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_plain(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _encode(value, indent: int) -> str:
    pad = "  " * (indent + 1)
    end = "  " * indent
    if value is None:
        return "null"
    if value is True:
        return "true"
    if value is False:
        return "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return format_float(value)
    if isinstance(value, str):
        return json.dumps(value, ensure_ascii=False)
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = [f"{pad}{json.dumps(k)}: {_encode(value[k], indent + 1)}" for k in sorted(value)]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(value, list):
        if not value:
            return "[]"
        if all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in value):
            return "[" + ", ".join(_encode(v, indent) for v in value) + "]"
        return "[\n" + ",\n".join(pad + _encode(v, indent + 1) for v in value) + "\n" + end + "]"
    raise TypeError(f"cannot encode {type(value).__name__}")


def canonical_dumps(obj) -> str:
    """Deterministic JSON text: sorted keys, two-space indent, 12-digit floats."""
    return _encode(to_plain(obj), 0) + "\n"


def report(kind: str, result, **extra) -> str:
    doc = {"kind": kind, "result": result}
    doc.update(extra)
    return canonical_dumps(doc)
