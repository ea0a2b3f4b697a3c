"""JSON encoding helpers shared by reports, certificates and the CLI."""
from __future__ import annotations

import json
from enum import Enum
from fractions import Fraction
from typing import Any


def rational_to_json(q: Fraction) -> dict:
    q = Fraction(q)
    return {"num": q.numerator, "den": q.denominator}


def rational_from_json(obj) -> Fraction:
    if isinstance(obj, dict):
        den = int(obj["den"])
        if den <= 0:
            raise ValueError("rational denominator must be positive")
        return Fraction(int(obj["num"]), den)
    if isinstance(obj, str):
        return Fraction(obj)
    if isinstance(obj, int):
        return Fraction(obj)
    raise ValueError(f"cannot read rational from {obj!r}")


def encode(obj: Any) -> Any:
    """Turn library values into plain JSON-compatible data."""
    if hasattr(obj, "to_json"):
        return obj.to_json()
    if isinstance(obj, Enum):
        return getattr(obj, "label", obj.name)
    if isinstance(obj, Fraction):
        return rational_to_json(obj)
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, float, str)):
        return obj
    if isinstance(obj, dict):
        return {str(k): encode(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [encode(x) for x in obj]
    raise TypeError(f"no JSON encoding for {type(obj).__name__}")


def dumps(obj: Any, pretty: bool = False) -> str:
    if pretty:
        return json.dumps(encode(obj), sort_keys=True, indent=2)
    return json.dumps(encode(obj), sort_keys=True, separators=(",", ":"))
