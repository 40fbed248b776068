"""JSON documents for systems and results.

Output is canonical: sorted keys, two-space indent, LF line endings, floats
rounded to 15 significant digits, exact integers for exponent vectors and
``"?"`` for support-only multiplicities.
"""
from __future__ import annotations

import json
import math
import sys
from dataclasses import dataclass
from typing import Any, Mapping, Optional

import jsonschema

from .composition import Bicategory3
from .errors import SchemaError, ValidationError
from .fusion import (
    COMPLETE,
    MAX_OBJECTS,
    FusionObject,
    FusionSystem,
    TensorEntry,
    truncated,
    validate,
)
from .perturbation import ConstituentDims, DimensionData

SCHEMA_VERSION = 1

_SUM = {
    "type": "array",
    "items": {
        "type": "object",
        "properties": {"id": {"type": "string"}, "mult": {"$ref": "#/$defs/mult"}},
        "required": ["id", "mult"],
        "additionalProperties": False,
    },
}

SYSTEM_SCHEMA: dict = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "$defs": {
        "mult": {"oneOf": [{"type": "integer", "minimum": 1}, {"const": "?"}]},
        "sum": _SUM,
    },
    "type": "object",
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "algebras": {"type": "array", "items": {"type": "string"}, "minItems": 1},
        "objects": {
            "type": "array",
            "maxItems": MAX_OBJECTS,
            "items": {
                "type": "object",
                "properties": {
                    "id": {"type": "string", "minLength": 1},
                    "left": {"type": "string"},
                    "right": {"type": "string"},
                    "dual": {"type": "string"},
                    "unit": {"type": "boolean"},
                },
                "required": ["id", "left", "right", "dual", "unit"],
                "additionalProperties": False,
            },
        },
        "tensor": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "a": {"type": "string"},
                    "b": {"type": "string"},
                    "contains": {
                        "type": "array",
                        "items": {
                            "type": "object",
                            "properties": {"c": {"type": "string"}, "mult": {"$ref": "#/$defs/mult"}},
                            "required": ["c", "mult"],
                            "additionalProperties": False,
                        },
                    },
                    "truncated": {"type": "boolean"},
                },
                "required": ["a", "b", "contains", "truncated"],
                "additionalProperties": False,
            },
        },
        "generator": {"oneOf": [{"type": "null"}, {"$ref": "#/$defs/sum"}]},
        "completeness": {
            "oneOf": [
                {
                    "type": "object",
                    "properties": {"kind": {"const": "complete"}},
                    "required": ["kind"],
                    "additionalProperties": False,
                },
                {
                    "type": "object",
                    "properties": {"kind": {"const": "truncated"}, "depth": {"type": "integer", "minimum": 0}},
                    "required": ["kind", "depth"],
                    "additionalProperties": False,
                },
            ]
        },
        "certified_weight": {"type": "object", "additionalProperties": {"type": "integer"}},
        "dims": {
            "type": "object",
            "minProperties": 1,
            "additionalProperties": {
                "type": "object",
                "properties": {
                    "left": {"type": "number", "exclusiveMinimum": 0},
                    "right": {"type": "number", "exclusiveMinimum": 0},
                    "mult": {"type": "integer", "minimum": 1},
                },
                "required": ["left", "right", "mult"],
                "additionalProperties": False,
            },
        },
        "composition": {
            "type": "object",
            "properties": {"gen_ab": {"$ref": "#/$defs/sum"}, "gen_bc": {"$ref": "#/$defs/sum"}},
            "required": ["gen_ab", "gen_bc"],
            "additionalProperties": False,
        },
        "metadata": {"type": "object"},
    },
    "required": ["schema_version", "algebras", "objects", "tensor", "generator", "completeness"],
    "additionalProperties": False,
}

WEIGHT_SCHEMA: dict = {
    "type": "object",
    "minProperties": 1,
    "additionalProperties": {"type": "number", "exclusiveMinimum": 0},
}


# ---------------------------------------------------------------------------
# canonical JSON


def _round(x: Any) -> Any:
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, float):
        if not math.isfinite(x):
            raise ValueError("non-finite number in output")
        y = float(f"{x:.15g}")
        return 0.0 if y == 0 else y
    if isinstance(x, Mapping):
        return {str(k): _round(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_round(v) for v in x]
    return x


def dumps(obj: Any) -> str:
    return json.dumps(_round(obj), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


# ---------------------------------------------------------------------------
# systems


def _mult_out(m):
    return "?" if m is None else m


def _mult_in(m):
    return None if m == "?" else m


def _sum_out(items):
    return [{"id": c, "mult": _mult_out(m)} for c, m in items]


def dims_to_dict(dims: DimensionData) -> dict:
    return {s: {"left": e.left, "right": e.right, "mult": e.mult} for s, e in dims.entries.items()}


def system_to_dict(
    system: FusionSystem,
    dims: Optional[DimensionData] = None,
    composition: Optional[Bicategory3] = None,
) -> dict:
    doc: dict = {
        "schema_version": SCHEMA_VERSION,
        "algebras": list(system.algebras),
        "objects": [
            {"id": o.id, "left": o.left, "right": o.right, "dual": o.dual, "unit": o.is_unit}
            for o in system.objects
        ],
        "tensor": [
            {
                "a": a,
                "b": b,
                "contains": [{"c": c, "mult": _mult_out(m)} for c, m in e.constituents],
                "truncated": e.truncated,
            }
            for (a, b), e in system.tensor.items()
        ],
        "generator": None if system.generator is None else _sum_out(system.generator),
        "completeness": (
            {"kind": "complete"}
            if system.completeness.complete
            else {"kind": "truncated", "depth": system.completeness.depth}
        ),
    }
    if system.certified_weight is not None:
        doc["certified_weight"] = dict(system.certified_weight)
    if dims is not None:
        doc["dims"] = dims_to_dict(dims)
    if composition is not None:
        doc["composition"] = {
            "gen_ab": _sum_out(composition.gen_ab),
            "gen_bc": _sum_out(composition.gen_bc),
        }
    if system.metadata:
        doc["metadata"] = dict(system.metadata)
    return doc


def serialize(system: FusionSystem, dims=None, composition=None) -> str:
    return dumps(system_to_dict(system, dims, composition))


@dataclass(frozen=True)
class Document:
    system: FusionSystem
    dims: Optional[DimensionData] = None
    bicategory: Optional[Bicategory3] = None


def _location(err: jsonschema.ValidationError) -> str:
    path = "$"
    for p in err.absolute_path:
        path += f"[{p}]" if isinstance(p, int) else f".{p}"
    return path


def _load_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError(f"line {e.lineno}, column {e.colno}: {e.msg}") from None


def _check_schema(data: Any, schema: dict) -> None:
    validator = jsonschema.Draft202012Validator(schema)
    errors = sorted(validator.iter_errors(data), key=lambda e: list(map(str, e.absolute_path)))
    if errors:
        err = errors[0]
        msg = err.message
        if err.validator == "additionalProperties":
            msg = "unknown field: " + msg
        raise SchemaError(f"{_location(err)}: {msg}")


def _check_refs(data: dict) -> None:
    ids = [o["id"] for o in data["objects"]]
    known = set(ids)
    for i, o in enumerate(data["objects"]):
        if o["dual"] not in known:
            raise SchemaError(f"$.objects[{i}].dual: dangling dual id {o['dual']!r}")
    for i, t in enumerate(data["tensor"]):
        for f in ("a", "b"):
            if t[f] not in known:
                raise SchemaError(f"$.tensor[{i}].{f}: unknown object id {t[f]!r}")
        for j, c in enumerate(t["contains"]):
            if c["c"] not in known:
                raise SchemaError(f"$.tensor[{i}].contains[{j}].c: unknown object id {c['c']!r}")
    sums = [("generator", data.get("generator") or [])]
    if "composition" in data:
        sums += [(f"composition.{k}", data["composition"][k]) for k in ("gen_ab", "gen_bc")]
    for where, s in sums:
        for j, g in enumerate(s):
            if g["id"] not in known:
                raise SchemaError(f"$.{where}[{j}].id: unknown object id {g['id']!r}")
    for k in data.get("certified_weight", {}):
        if k not in known:
            raise SchemaError(f"$.certified_weight: unknown object id {k!r}")
    pairs = [(t["a"], t["b"]) for t in data["tensor"]]
    if len(set(pairs)) != len(pairs):
        raise SchemaError("$.tensor: duplicate entry for a pair of objects")


def parse(text: str, check: bool = True) -> Document:
    """Parse a system document; structural problems raise SchemaError, invariant
    violations raise ValidationError (unless ``check`` is False)."""
    data = _load_json(text)
    _check_schema(data, SYSTEM_SCHEMA)
    _check_refs(data)
    objs = tuple(FusionObject(o["id"], o["left"], o["right"], o["dual"], o["unit"]) for o in data["objects"])
    table = {
        (t["a"], t["b"]): TensorEntry(tuple((c["c"], _mult_in(c["mult"])) for c in t["contains"]), t["truncated"])
        for t in data["tensor"]
    }
    gen = data["generator"]
    comp = data["completeness"]
    system = FusionSystem(
        algebras=tuple(data["algebras"]),
        objects=objs,
        tensor=table,
        generator=None if gen is None else tuple((g["id"], _mult_in(g["mult"])) for g in gen),
        completeness=COMPLETE if comp["kind"] == "complete" else truncated(comp["depth"]),
        certified_weight=data.get("certified_weight"),
        metadata=data.get("metadata", {}),
    )
    if check:
        violations = validate(system)
        if violations:
            raise ValidationError(f"{len(violations)} violation(s): {violations[0]}", violations)
    dims = None
    if "dims" in data:
        dims = DimensionData(
            {s: ConstituentDims(float(d["left"]), float(d["right"]), d["mult"]) for s, d in data["dims"].items()}
        )
    bic = None
    if "composition" in data:
        c = data["composition"]
        bic = Bicategory3(
            system,
            tuple((g["id"], _mult_in(g["mult"])) for g in c["gen_ab"]),
            tuple((g["id"], _mult_in(g["mult"])) for g in c["gen_bc"]),
        )
    return Document(system, dims, bic)


def parse_weight(text: str) -> dict[str, float]:
    data = _load_json(text)
    _check_schema(data, WEIGHT_SCHEMA)
    return {k: float(v) for k, v in data.items()}


def read_text(path: str) -> str:
    """File contents, or standard input for ``-``."""
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()
