"""Named quandle constructors and quandle file loading."""

from __future__ import annotations

import json
from pathlib import Path

from .errors import InputError
from .finite import (
    FiniteQuandle,
    alexander_quandle,
    dihedral_quandle,
    genus2_seventeen,
    transposition_quandle,
    trivial_quandle,
)

NAMED = {
    "dihedral": (dihedral_quandle, 1),
    "alexander": (alexander_quandle, 2),
    "conj-transpositions": (transposition_quandle, 1),
    "trivial": (trivial_quandle, 1),
    "genus2-17": (genus2_seventeen, 0),
}


def from_name(spec: str) -> FiniteQuandle:
    """Build a quandle from ``name:arg:arg``, e.g. ``alexander:7:2``."""
    name, *args = spec.split(":")
    if name not in NAMED:
        raise InputError(f"unknown quandle constructor {name!r}; known: {', '.join(sorted(NAMED))}")
    build, arity = NAMED[name]
    if len(args) != arity:
        raise InputError(f"{name} takes {arity} argument(s), got {len(args)}")
    try:
        values = [int(a) for a in args]
    except ValueError as exc:
        raise InputError(f"constructor arguments must be integers: {spec!r}") from exc
    if name in ("dihedral", "conj-transpositions", "trivial") and values[0] < 1:
        raise InputError(f"{name} needs a positive size")
    return build(*values)


def load_quandle(spec) -> FiniteQuandle:
    """Resolve a constructor name, a JSON object, or a path to a JSON file."""
    if isinstance(spec, FiniteQuandle):
        return spec
    if isinstance(spec, dict):
        return FiniteQuandle.from_json(spec)
    spec = str(spec)
    path = Path(spec)
    if spec.endswith(".json") or (path.exists() and path.is_file()):
        try:
            data = json.loads(path.read_text())
        except FileNotFoundError as exc:
            raise InputError(f"no such file: {spec}") from exc
        except json.JSONDecodeError as exc:
            raise InputError(f"{spec} is not valid JSON: {exc}") from exc
        return FiniteQuandle.from_json(data)
    return from_name(spec)
