"""JSON code documents.

A document is a single object::

    {"alpha":[1,2,0],"field":{"m":1,"p":5},"k":2,"kind":"grs","v":[1,1,1]}

``field.reduction`` is present exactly when ``m > 1``.  Element values use the
packed-integer encoding of :mod:`grsequiv.field`.  Canonical emission is
compact JSON with sorted keys and a single trailing LF.
"""

from __future__ import annotations

import json

from .codes import Code, code_from_dict
from .errors import DocumentError
from .field import FieldSpec, field_new

_CODE_KEYS = {"field", "kind", "k", "alpha", "v"}


def _int(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DocumentError(f"{where} must be an integer, got {value!r}")
    return value


def _int_list(value, where: str) -> list[int]:
    if not isinstance(value, list):
        raise DocumentError(f"{where} must be a list of integers")
    return [_int(x, f"{where}[{i}]") for i, x in enumerate(value)]


def field_from_dict(doc) -> FieldSpec:
    if not isinstance(doc, dict):
        raise DocumentError("field must be an object")
    extra = set(doc) - {"p", "m", "reduction"}
    if extra:
        raise DocumentError(f"unknown field keys: {sorted(extra)}")
    if "p" not in doc or "m" not in doc:
        raise DocumentError("field needs p and m")
    p, m = _int(doc["p"], "field.p"), _int(doc["m"], "field.m")
    if m > 1 and "reduction" not in doc:
        raise DocumentError("field.reduction is required when m > 1")
    if m <= 1 and "reduction" in doc:
        raise DocumentError("field.reduction must be absent when m = 1")
    red = _int_list(doc["reduction"], "field.reduction") if "reduction" in doc else None
    return field_new(p, m, red)


def code_from_document(doc) -> Code:
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    missing = _CODE_KEYS - set(doc)
    if missing:
        raise DocumentError(f"missing keys: {sorted(missing)}")
    extra = set(doc) - _CODE_KEYS
    if extra:
        raise DocumentError(f"unknown keys: {sorted(extra)}")
    F = field_from_dict(doc["field"])
    if doc["kind"] not in ("grs", "egrs"):
        raise DocumentError(f"kind must be 'grs' or 'egrs', got {doc['kind']!r}")
    return code_from_dict(
        {
            "kind": doc["kind"],
            "k": _int(doc["k"], "k"),
            "alpha": _int_list(doc["alpha"], "alpha"),
            "v": _int_list(doc["v"], "v"),
        },
        F,
    )


def loads(text: str) -> Code:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"malformed JSON: {exc}") from None
    return code_from_document(doc)


def dumps(code: Code) -> str:
    return json.dumps(code.to_dict(), sort_keys=True, separators=(",", ":")) + "\n"
