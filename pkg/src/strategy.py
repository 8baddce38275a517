"""
Strategies as memory machines.

A strategy for player sigma reads a memory state m and the current vertex v.
Memory is updated on entering every vertex, the first one included, so at
the start vertex v0 the state is update(initial, v0). A missing update entry
keeps the state unchanged.
"""
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Mapping

from src.arena import Arena
from src.errors import IllegalMove, StrategyIncomplete

POSITIONAL_STATE = "0"


class Strategy(ABC):
    player: int

    @property
    @abstractmethod
    def memory_states(self) -> tuple[str, ...]:
        pass

    @property
    @abstractmethod
    def initial(self) -> str:
        pass

    @abstractmethod
    def update(self, memory: str, vertex: str) -> str:
        pass

    @abstractmethod
    def next_move(self, vertex: str, memory: str) -> str:
        """Successor chosen at an owned vertex; raises StrategyIncomplete when undefined."""
        pass

    def start(self, vertex: str) -> str:
        return self.update(self.initial, vertex)

    def check_moves(self, arena: Arena) -> None:
        for vertex, memory, target in self.move_items():
            if not arena.has_edge(vertex, target):
                raise IllegalMove(vertex, target)

    @abstractmethod
    def move_items(self) -> list[tuple[str, str, str]]:
        pass


@dataclass(frozen=True)
class PositionalStrategy(Strategy):
    player: int
    moves: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "moves", dict(sorted(self.moves.items())))

    @property
    def memory_states(self) -> tuple[str, ...]:
        return (POSITIONAL_STATE,)

    @property
    def initial(self) -> str:
        return POSITIONAL_STATE

    def update(self, memory: str, vertex: str) -> str:
        return POSITIONAL_STATE

    def next_move(self, vertex: str, memory: str = POSITIONAL_STATE) -> str:
        try:
            return self.moves[vertex]
        except KeyError:
            raise StrategyIncomplete(vertex) from None

    def move_items(self) -> list[tuple[str, str, str]]:
        return [(v, POSITIONAL_STATE, w) for v, w in self.moves.items()]

    def restricted(self, region) -> "PositionalStrategy":
        keep = set(region)
        return PositionalStrategy(self.player, {v: w for v, w in self.moves.items() if v in keep})

    def __eq__(self, other) -> bool:
        if not isinstance(other, PositionalStrategy):
            return NotImplemented
        return self.player == other.player and dict(self.moves) == dict(other.moves)

    def __hash__(self) -> int:
        return hash((self.player, tuple(self.moves.items())))

    def to_json(self) -> dict:
        return {"player": self.player, "moves": dict(self.moves)}


@dataclass(frozen=True)
class MemoryStrategy(Strategy):
    """Finite-memory strategy (M, m0, U, F) for one player."""
    player: int
    memory: tuple[str, ...]
    initial_state: str
    updates: Mapping[tuple[str, str], str] = field(default_factory=dict)
    moves: Mapping[tuple[str, str], str] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "memory", tuple(self.memory))
        object.__setattr__(self, "updates", dict(self.updates))
        object.__setattr__(self, "moves", dict(self.moves))
        if self.initial_state not in self.memory:
            raise ValueError(f"initial state {self.initial_state!r} is not a memory state")
        for (m, _v), m2 in self.updates.items():
            if m not in self.memory or m2 not in self.memory:
                raise ValueError(f"update {m!r} -> {m2!r} leaves the memory set")

    @classmethod
    def from_positional(cls, strategy: PositionalStrategy) -> "MemoryStrategy":
        return cls(
            strategy.player,
            (POSITIONAL_STATE,),
            POSITIONAL_STATE,
            {},
            {(v, POSITIONAL_STATE): w for v, w in strategy.moves.items()},
        )

    @property
    def memory_states(self) -> tuple[str, ...]:
        return self.memory

    @property
    def initial(self) -> str:
        return self.initial_state

    def update(self, memory: str, vertex: str) -> str:
        return self.updates.get((memory, vertex), memory)

    def next_move(self, vertex: str, memory: str) -> str:
        try:
            return self.moves[(vertex, memory)]
        except KeyError:
            raise StrategyIncomplete(vertex, memory) from None

    def move_items(self) -> list[tuple[str, str, str]]:
        return [(v, m, w) for (v, m), w in sorted(self.moves.items())]

    def __hash__(self) -> int:
        return hash((self.player, self.memory, self.initial_state,
                     tuple(sorted(self.updates.items())), tuple(sorted(self.moves.items()))))

    def to_json(self) -> dict:
        return {
            "player": self.player,
            "memory": list(self.memory),
            "initial": self.initial_state,
            "update": [[m, v, m2] for (m, v), m2 in sorted(self.updates.items())],
            "moves": [[v, m, w] for (v, m), w in sorted(self.moves.items())],
        }


def as_memory_strategy(strategy: Strategy) -> MemoryStrategy:
    if isinstance(strategy, MemoryStrategy):
        return strategy
    if isinstance(strategy, PositionalStrategy):
        return MemoryStrategy.from_positional(strategy)
    raise TypeError(f"unsupported strategy type {type(strategy).__name__}")
