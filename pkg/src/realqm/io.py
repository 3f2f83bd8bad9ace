"""JSON file formats for complex and realified matrices.

Complex matrix::

    {"rows": r, "cols": c, "data": [[[re, im], ...], ...]}

Realified matrix::

    {"rows": 2r, "cols": 2c, "data": [[x, ...], ...], "kind": "operator" | "state" | "ket"}

A realified ket is stored as a single column (``cols`` = 1).
"""

import json

import numpy as np

from .exceptions import ValidationError
from .realify import RealifiedKet, RealifiedOperator, RealifiedState

REALIFIED_KINDS = ("operator", "state", "ket")


class FormatError(ValidationError):
    """A matrix file does not parse in the expected format."""


def _load(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, UnicodeDecodeError) as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path} is not valid JSON: {exc}") from exc


def _shape(payload):
    if not isinstance(payload, dict):
        raise FormatError("top level must be a JSON object")
    try:
        rows, cols, data = payload["rows"], payload["cols"], payload["data"]
    except KeyError as exc:
        raise FormatError(f"missing field {exc}") from exc
    if not (isinstance(rows, int) and isinstance(cols, int)) or rows < 1 or cols < 1:
        raise FormatError("rows and cols must be positive integers")
    if not isinstance(data, list) or len(data) != rows or any(
            not isinstance(row, list) or len(row) != cols for row in data):
        raise FormatError(f"data must be {rows} rows of {cols} entries")
    return rows, cols, data


def complex_from_payload(payload):
    rows, cols, data = _shape(payload)
    try:
        arr = np.array(data, dtype=float)
    except (TypeError, ValueError) as exc:
        raise FormatError(f"complex entries must be [re, im] pairs: {exc}") from exc
    if arr.shape != (rows, cols, 2):
        raise FormatError("complex entries must be [re, im] pairs")
    if not np.all(np.isfinite(arr)):
        raise FormatError("entries must be finite")
    return arr[..., 0] + 1j * arr[..., 1]


def complex_to_payload(A):
    A = np.asarray(A, dtype=complex)
    if A.ndim == 1:
        A = A.reshape(-1, 1)
    return {
        "rows": int(A.shape[0]),
        "cols": int(A.shape[1]),
        "data": [[[float(z.real), float(z.imag)] for z in row] for row in A],
    }


def realified_from_payload(payload, kind=None):
    rows, cols, data = _shape(payload)
    file_kind = payload.get("kind", "operator")
    if file_kind not in REALIFIED_KINDS:
        raise FormatError(f"unknown kind {file_kind!r}")
    if kind is not None and kind != file_kind:
        raise FormatError(f"file holds a {file_kind}, expected a {kind}")
    try:
        arr = np.array(data, dtype=float)
    except (TypeError, ValueError) as exc:
        raise FormatError(f"realified entries must be numbers: {exc}") from exc
    if arr.shape != (rows, cols):
        raise FormatError("realified entries must be numbers")
    if not np.all(np.isfinite(arr)):
        raise FormatError("entries must be finite")
    if file_kind == "ket":
        if cols != 1 or rows % 2:
            raise FormatError("a realified ket is a single column of even length")
        return RealifiedKet(arr[:, 0])
    # Block-structure failures propagate as BlockStructureViolation.
    if file_kind == "state":
        return RealifiedState(arr)
    return RealifiedOperator(arr)


def realified_to_payload(M):
    if isinstance(M, RealifiedKet):
        kind, data = "ket", M.data.reshape(-1, 1)
    elif isinstance(M, RealifiedState):
        kind, data = "state", M.data
    elif isinstance(M, RealifiedOperator):
        kind, data = "operator", M.data
    else:
        raise TypeError(f"cannot serialize {type(M).__name__}")
    return {
        "rows": int(data.shape[0]),
        "cols": int(data.shape[1]),
        "kind": kind,
        "data": [[float(x) for x in row] for row in data],
    }


def read_complex(path):
    return complex_from_payload(_load(path))


def read_realified(path, kind=None):
    return realified_from_payload(_load(path), kind)


def write_json(path, payload):
    from .report import dumps, write_atomic
    write_atomic(path, dumps(payload))


def write_complex(path, A):
    write_json(path, complex_to_payload(A))


def write_realified(path, M):
    write_json(path, realified_to_payload(M))
