"""Canonical JSON: sorted keys, sorted vertex ids, compact separators, one trailing newline."""
import json
import typing
from typing import Any

from src.arena import Arena
from src.conditions import ConditionSpec, to_json as condition_json


def arena_json(arena: Arena) -> dict:
    out = {
        "vertices": [
            {"id": v.id, "owner": v.owner, "priority": v.priority.to_json(compact=False)}
            for v in arena.vertices
        ],
        "edges": [list(edge) for edge in arena.edges()],
    }
    if arena.metadata:
        out["metadata"] = dict(arena.metadata)
    return out


def to_document(value: Any) -> Any:
    if isinstance(value, Arena):
        return arena_json(value)
    if isinstance(value, typing.get_args(ConditionSpec)):
        return condition_json(value)
    if hasattr(value, "to_json"):
        return value.to_json()
    return value


def dumps(value: Any) -> str:
    return json.dumps(to_document(value), sort_keys=True, separators=(",", ":"), ensure_ascii=False) + "\n"


def write(path: str, value: Any) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(dumps(value))
