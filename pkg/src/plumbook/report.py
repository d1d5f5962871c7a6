"""Deterministic rendering of report dictionaries.

Reports are plain dicts built by the CLI in a fixed key order.  Two
output formats: JSON (machine) and an indented key/value text (human).
Both are byte-deterministic for identical inputs.  Rationals render as
"p/q" with positive denominator, collapsed to "p" when integral; bools
render as yes/no in the text format.
"""

from __future__ import annotations

import json
from fractions import Fraction

_INDENT = "  "


def rational_str(value) -> str:
    """Canonical "p/q" rendering, "p" when the denominator is 1."""
    frac = Fraction(value)
    if frac.denominator == 1:
        return str(frac.numerator)
    return f"{frac.numerator}/{frac.denominator}"


def _jsonable(value):
    if isinstance(value, bool) or isinstance(value, (int, str)) or value is None:
        return value
    if isinstance(value, Fraction):
        return rational_str(value)
    if isinstance(value, dict):
        return {str(key): _jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(item) for item in value]
    raise TypeError(f"cannot serialize {type(value).__name__} into a report")


def render_json(data: dict) -> str:
    """JSON with two-space indent, keys in insertion order, trailing newline."""
    return json.dumps(_jsonable(data), indent=2, sort_keys=False) + "\n"


def _scalar_str(value) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, Fraction):
        return rational_str(value)
    if isinstance(value, (list, tuple)):
        return "(" + ", ".join(_scalar_str(item) for item in value) + ")"
    return str(value)


def _is_block(value) -> bool:
    # values rendered as indented sub-blocks rather than on the key's line
    if isinstance(value, dict):
        return True
    if isinstance(value, (list, tuple)):
        return any(isinstance(item, dict) for item in value)
    return False


def _render_block(data: dict, depth: int, lines: list) -> None:
    pad = _INDENT * depth
    for key, value in data.items():
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            _render_block(value, depth + 1, lines)
        elif _is_block(value):
            lines.append(f"{pad}{key}:")
            for item in value:
                if isinstance(item, dict):
                    lines.append(f"{pad}{_INDENT}-")
                    _render_block(item, depth + 2, lines)
                else:
                    lines.append(f"{pad}{_INDENT}- {_scalar_str(item)}")
        else:
            lines.append(f"{pad}{key}: {_scalar_str(value)}")


def render_text(data: dict) -> str:
    """Indented "key: value" listing with a trailing newline."""
    lines: list = []
    _render_block(data, 0, lines)
    return "\n".join(lines) + "\n"
