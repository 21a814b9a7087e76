"""Stable JSON report helpers.

Reports keep insertion key order and are rendered identically across runs.
Integers above the 53-bit float-safe range are emitted as decimal strings
so JavaScript-side consumers cannot silently truncate them.
"""

from __future__ import annotations

import json

SAFE_INT = (1 << 53) - 1


def encode_int(value: int):
    return value if -SAFE_INT <= value <= SAFE_INT else str(value)


def dumps(document: dict) -> str:
    """Render a report document deterministically (keys in insertion order)."""
    return json.dumps(document, indent=2, sort_keys=False) + "\n"
