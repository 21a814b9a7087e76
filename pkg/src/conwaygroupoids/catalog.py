"""Named registry of the designs and pliable functions the toolkit ships.

Labels are stable wire-format identifiers: ``pg23``, ``boolean:m``,
``symplectic:m``, ``quadratic:m:eps`` and ``pairs:n`` for designs;
``paley6``, ``affine:k``, ``group:<file>`` and ``design:<label>`` for
pliable functions. Heavy groupoid builds are cached per (label, base).
"""

from __future__ import annotations

import json
from functools import lru_cache
from pathlib import Path

from .designs import (
    Hypergraph,
    boolean_system,
    pairs_hypergraph,
    pg23,
    profile,
    quadratic_system,
    symplectic_system,
)
from .groupoid import ConwayGroupoid, build_groupoid
from .pliable import (
    PliableFunction,
    affine_complement,
    from_design,
    from_group,
    paley6,
)

DESIGN_FAMILIES = [
    {
        "family": "pg23",
        "syntax": "pg23",
        "description": "projective plane of order 3: 13 points, 13 lines",
    },
    {
        "family": "boolean",
        "syntax": "boolean:m (m >= 2)",
        "description": "zero-sum quadruples of GF(2)^m; trivial hole stabilizer",
    },
    {
        "family": "symplectic",
        "syntax": "symplectic:m (m >= 2)",
        "description": "zero-sum quadruples of GF(2)^(2m) with even form total",
    },
    {
        "family": "quadratic",
        "syntax": "quadratic:m:eps (m >= 3, or 2:0)",
        "description": "shifted quadratic forms of one type, zero-sum quadruples",
    },
    {
        "family": "pairs",
        "syntax": "pairs:n (n >= 3)",
        "description": "n coupled pairs; pliable and connected but not a 2-design",
    },
]

PLIABLE_FAMILIES = [
    {
        "family": "paley6",
        "syntax": "paley6",
        "description": "doubled-pair moves of the 2-(6,3,2) triple system",
    },
    {
        "family": "affine",
        "syntax": "affine:k (k >= 2)",
        "description": "point reflections over the affine-complement triples on GF(3)^k",
    },
    {
        "family": "group",
        "syntax": "group:<table.json>",
        "description": "right-multiplication moves of a finite group",
    },
    {
        "family": "design",
        "syntax": "design:<label or file>",
        "description": "the pliable function carried by a supersimple design",
    },
]

DEFAULT_DESIGNS = (
    "pg23",
    "boolean:2",
    "boolean:3",
    "boolean:4",
    "symplectic:2",
    "symplectic:3",
    "quadratic:2:0",
    "quadratic:3:0",
    "quadratic:3:1",
    "pairs:3",
    "pairs:4",
    "pairs:5",
    "pairs:6",
)

SUPERSIMPLE_CATALOG = (
    "pg23",
    "boolean:2",
    "boolean:3",
    "boolean:4",
    "symplectic:2",
    "symplectic:3",
    "quadratic:2:0",
    "quadratic:3:0",
    "quadratic:3:1",
)


def get_design(label: str) -> Hypergraph:
    """Resolve a design label; raises ValueError for unknown syntax."""
    parts = label.split(":")
    kind = parts[0]
    try:
        if kind == "pg23" and len(parts) == 1:
            return pg23()
        if kind == "boolean" and len(parts) == 2:
            return boolean_system(int(parts[1]))
        if kind == "symplectic" and len(parts) == 2:
            return symplectic_system(int(parts[1]))
        if kind == "quadratic" and len(parts) == 3:
            return quadratic_system(int(parts[1]), int(parts[2]))
        if kind == "pairs" and len(parts) == 2:
            return pairs_hypergraph(int(parts[1]))
    except ValueError as exc:
        raise ValueError(f"bad design label {label!r}: {exc}") from exc
    raise ValueError(f"unknown design label {label!r}")


def load_design(spec: str) -> Hypergraph:
    """A design label, or the path of a design JSON file."""
    path = Path(spec)
    if path.suffix == ".json" or path.exists():
        return Hypergraph.from_json(json.loads(path.read_text()))
    return get_design(spec)


def get_pliable(spec: str) -> PliableFunction:
    if spec == "paley6":
        return paley6()
    if spec.startswith("affine:"):
        return affine_complement(int(spec.split(":", 1)[1]))
    if spec.startswith("group:"):
        table = json.loads(Path(spec.split(":", 1)[1]).read_text())
        return from_group(table)
    if spec.startswith("design:"):
        return from_design(load_design(spec.split(":", 1)[1]))
    raise ValueError(f"unknown pliable-function spec {spec!r}")


@lru_cache(maxsize=64)
def groupoid_for(label: str, base: int = 0) -> ConwayGroupoid:
    return build_groupoid(get_design(label), base)


def catalog_entries() -> list[dict]:
    out = []
    for label in DEFAULT_DESIGNS:
        h = get_design(label)
        prof = profile(h)
        out.append(
            {
                "label": label,
                "points": h.n,
                "blocks": len(h.blocks),
                "lambda": prof.lam,
                "supersimple": prof.is_supersimple,
            }
        )
    return out
