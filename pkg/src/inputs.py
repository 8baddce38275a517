from dataclasses import dataclass
from typing import Any, Union

from src.arena import Arena
from src.conditions import ConditionSpec, MinParity
from src.errors import ParseError
from src.families import GeneratedArena, expand, family_condition
from src.logger import debug, log
from src.readers.base_reader import GameReader
from src.readers.json_reader import JsonReader
from src.readers.pgsolver_reader import PgSolverReader
from src.strategy import Strategy

Game = Union[Arena, GeneratedArena]


@dataclass(frozen=True)
class Inputs:
    game: Game
    condition: ConditionSpec
    strategy: Strategy | None = None

    @property
    def arena(self) -> Arena:
        """The finite arena; generated arenas are expanded at their truncation."""
        return expand(self.game) if isinstance(self.game, GeneratedArena) else self.game


class InputLoader:
    def __init__(self, player: int | None = None):
        self.readers: list[GameReader] = [JsonReader(player), PgSolverReader()]
        self._fallback_logged = set()

    def get_best_reader(self, path: str, text: str) -> GameReader:
        """
        Pick the reader whose format sniffing accepts the content.

        Unrecognised content falls back to the JSON reader, which then
        reports where the document stops making sense.
        """
        for reader in self.readers:
            if reader.detect(text):
                debug(f"Using {reader.name} reader for {path}")
                return reader
        if path not in self._fallback_logged:
            log(f"Could not detect the format of {path}, falling back to JSON")
            self._fallback_logged.add(path)
        return self.readers[0]

    def load(self, path: str) -> Any:
        try:
            with open(path, encoding="utf-8") as f:
                text = f.read()
        except OSError as exc:
            raise ParseError(None, f"cannot read {path}: {exc.strerror}") from None
        return self.get_best_reader(path, text).read(text)


def _expect(value: Any, kinds: tuple, path: str, what: str) -> Any:
    if not isinstance(value, kinds):
        raise ParseError(None, f"{path} does not hold {what}")
    return value


def parse_inputs(arena_path: str, condition_path: str | None = None, strategy_path: str | None = None,
                 player: int | None = None) -> Inputs:
    """
    Load an arena (or generated arena), its condition and an optional strategy.

    Without a condition file, generated arenas use their family condition and
    plain arenas the min-parity condition (which is also what PGSolver files
    mean after reflection).
    """
    loader = InputLoader(player)
    game = _expect(loader.load(arena_path), (Arena, GeneratedArena), arena_path, "an arena")
    if condition_path is not None:
        condition = load_condition(condition_path)
    elif isinstance(game, GeneratedArena):
        condition = family_condition(game)
    else:
        condition = MinParity()
    strategy = None
    if strategy_path is not None:
        strategy = _expect(loader.load(strategy_path), (Strategy,), strategy_path, "a strategy")
    return Inputs(game, condition, strategy)


def load_condition(path: str) -> ConditionSpec:
    condition = InputLoader().load(path)
    if isinstance(condition, (Arena, GeneratedArena, Strategy)):
        raise ParseError(None, f"{path} does not hold a winning condition")
    return condition
