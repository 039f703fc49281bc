"""JSON exporting and loading of finite structures."""

from __future__ import annotations

from typing import Any

import json

from pydantic import ValidationError

from treelike.errors import ModelError

from . import representation as rep


def structure_to_json(structure: rep.FinStructure) -> dict[str, Any]:
    return {
        "signature": [[s.name, s.arity] for s in structure.signature.symbols],
        "universe": list(structure.universe),
        "relations": {
            name: sorted((list(t) for t in tuples), key=repr)
            for name, tuples in structure.relations.items()
        },
    }


def dump_structure(structure: rep.FinStructure) -> str:
    return json.dumps(structure_to_json(structure), sort_keys=True)


def structure_from_json(data: Any) -> rep.FinStructure:
    if not isinstance(data, dict):
        raise ModelError("structure", "expected a JSON object")
    unknown = set(data.get("relations", {})) - {str(s[0]) for s in data.get("signature", [])}
    if unknown:
        raise ModelError("structure", f"relations for undeclared symbols {sorted(unknown)}")
    try:
        signature = rep.Signature.of(
            *((str(name), int(arity)) for name, arity in data["signature"])
        )
        return rep.FinStructure.build(
            signature,
            data["universe"],
            {
                name: [tuple(t) for t in tuples]
                for name, tuples in data.get("relations", {}).items()
            },
        )
    except (KeyError, TypeError, ValueError, ValidationError) as e:
        raise ModelError("structure", "malformed structure JSON", extra_msg=str(e)) from e


def load_structure(text: str) -> rep.FinStructure:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ModelError("structure", "not valid JSON", extra_msg=str(e)) from e
    return structure_from_json(data)


__all__ = ["structure_to_json", "dump_structure", "structure_from_json", "load_structure"]
