"""Reading systems and probability structures from JSON documents."""
from __future__ import annotations

import json
from pathlib import Path

from .bodies import ArcBody, Polytope, arc_body_from_json
from .errors import ParseError
from .geometry import parse_scalar
from .gpm import ProbabilityStructure
from .gpt import DualEffectBody, GptSystem, Observable


def _vector(raw, n=None):
    if not isinstance(raw, list) or not raw:
        raise ParseError(f"expected a non-empty list of numbers, got {raw!r}")
    try:
        v = tuple(parse_scalar(c) for c in raw)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad coordinate in {raw!r}: {exc}") from exc
    if n is not None and len(v) != n:
        raise ParseError(f"vector {raw!r} has length {len(v)}, expected {n}")
    return v


def parse_body(raw, n: int):
    """A vertex list (exact strings), ``{"vertices": ...}``, an arc body, or ``{"dual_of": ...}``."""
    if isinstance(raw, list):
        return Polytope([_vector(p, n) for p in raw]) if raw else _empty()
    if not isinstance(raw, dict):
        raise ParseError(f"a body must be a list or an object, got {type(raw).__name__}")
    if "vertices" in raw:
        return parse_body(raw["vertices"], n)
    if "dual_of" in raw:
        src = parse_body(raw["dual_of"], n)
        if not isinstance(src, ArcBody):
            raise ParseError("dual_of expects an arc body; give polytope duals as vertex lists")
        return DualEffectBody(src)
    if "arcs" in raw or "points" in raw:
        try:
            body = arc_body_from_json(raw)
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad arc body: {exc}") from exc
        if body.ambient_dim != n:
            raise ParseError(f"arc body lives in dimension {body.ambient_dim}, expected {n}")
        return body
    raise ParseError(f"unrecognized body keys {sorted(raw)}")


def _empty():
    raise ParseError("a body needs at least one vertex")


def system_from_json(data, name: str = "") -> GptSystem:
    if not isinstance(data, dict):
        raise ParseError("a system document must be a JSON object")
    for key in ("dim", "states", "effects"):
        if key not in data:
            raise ParseError(f"missing key {key!r}")
    d = data["dim"]
    if not isinstance(d, int) or isinstance(d, bool) or d < 1:
        raise ParseError(f"dim must be a positive integer, got {d!r}")
    n = d + 1
    states = parse_body(data["states"], n)
    effects = parse_body(data["effects"], n)
    if isinstance(states, DualEffectBody):
        raise ParseError("states cannot be given as a dual body")
    observables = []
    for ob in data.get("observables", []):
        if not isinstance(ob, list) or not ob:
            raise ParseError(f"an observable must be a non-empty list of effects, got {ob!r}")
        observables.append(Observable(tuple(_vector(e, n) for e in ob)))
    return GptSystem(states, effects, tuple(observables), name=data.get("name", name))


def structure_from_json(data) -> ProbabilityStructure:
    try:
        s = ProbabilityStructure.from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad probability structure: {exc}") from exc
    n = len(s.elements)
    for (i, j), k in s.table.items():
        if not all(0 <= x < n for x in (i, j, k)):
            raise ParseError(f"sum_table row {[i, j, k]} refers to a missing element")
    if not (0 <= s.zero < n and 0 <= s.unit < n):
        raise ParseError("zero and unit must index listed elements")
    return s


def load_json(path) -> object:
    try:
        return json.loads(Path(path).read_text())
    except FileNotFoundError as exc:
        raise ParseError(f"no such file: {path}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc})") from exc


def load_system(path) -> GptSystem:
    return system_from_json(load_json(path), name=Path(path).stem)
