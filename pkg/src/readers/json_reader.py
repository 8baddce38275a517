import json
from typing import Any, Mapping

from src.arena import validate_arena
from src.conditions import parse_condition
from src.errors import ParseError
from src.families import generated_from_json
from src.match_strategy import PrefixMatch
from src.readers.base_reader import GameReader
from src.strategy import MemoryStrategy, PositionalStrategy, Strategy

ARENA = "arena"
CONDITION = "condition"
GENERATED = "generated"
STRATEGY = "strategy"


def document_kind(raw: Mapping) -> str:
    if "vertices" in raw:
        return ARENA
    if "kind" in raw:
        return CONDITION
    if "family" in raw:
        return GENERATED
    if "moves" in raw:
        return STRATEGY
    raise ParseError(None, "unrecognised JSON document: expected an arena, condition, generated arena or strategy")


def parse_strategy(raw: Mapping, player: int | None = None) -> Strategy:
    owner = raw.get("player", player)
    if owner not in (0, 1):
        raise ParseError(None, "strategy needs a player 0 or 1")
    moves = raw["moves"]
    try:
        if isinstance(moves, Mapping):
            return PositionalStrategy(owner, {str(v): str(w) for v, w in moves.items()})
        return MemoryStrategy(
            owner,
            tuple(str(m) for m in raw["memory"]),
            str(raw["initial"]),
            {(str(m), str(v)): str(m2) for m, v, m2 in raw.get("update", [])},
            {(str(v), str(m)): str(w) for v, m, w in moves},
        )
    except (KeyError, ValueError, TypeError) as exc:
        raise ParseError(None, f"malformed memory strategy: {exc}") from None


class JsonReader(GameReader):
    name = "json"
    match = PrefixMatch("{")

    def __init__(self, player: int | None = None):
        self.player = player

    def read(self, text: str) -> Any:
        try:
            raw = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.lineno, exc.msg) from None
        if not isinstance(raw, Mapping):
            raise ParseError(1, "top-level JSON value must be an object")
        kind = document_kind(raw)
        if kind == ARENA:
            return validate_arena(raw)
        if kind == CONDITION:
            return parse_condition(raw)
        if kind == GENERATED:
            return generated_from_json(raw)
        return parse_strategy(raw, self.player)
