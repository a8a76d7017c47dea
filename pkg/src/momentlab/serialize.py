"""JSON encoding of exact values and sequence documents.

A value is either a rational string (``"p/q"`` or ``"p"``) or, when it is
a non-constant polynomial, the canonical term list produced by
:meth:`MultiPoly.to_json`.  Documents carry ``"v": 1``.
"""
import json

from .exactalg.poly import MultiPoly
from .exactalg.rational import format_rational, is_scalar, parse_rational

SCHEMA_VERSION = 1

__all__ = [
    "SCHEMA_VERSION", "value_to_json", "value_from_json", "dumps", "loads",
    "DocumentError",
]


class DocumentError(ValueError):
    """Malformed input document (a usage error, not a math error)."""


def value_to_json(v):
    if isinstance(v, MultiPoly):
        if v.is_constant():
            return format_rational(v.constant_term())
        return v.to_json()
    if is_scalar(v):
        return format_rational(v)
    raise TypeError(f"cannot serialize {type(v).__name__}")


def value_from_json(data):
    if isinstance(data, list):
        p = MultiPoly.from_json(data)
        return p.constant_term() if p.is_constant() else p
    if isinstance(data, (str, int)) and not isinstance(data, bool):
        return parse_rational(data)
    raise DocumentError(f"not an exact value: {data!r}")


def dumps(doc):
    return json.dumps(doc, ensure_ascii=True)


def loads(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    if doc.get("v") != SCHEMA_VERSION:
        raise DocumentError(f"unsupported document version {doc.get('v')!r}")
    return doc
