from dataclasses import dataclass, field

from src.strategy import PositionalStrategy, Strategy


@dataclass(frozen=True)
class SolveResult:
    """Winning regions W0/W1 of a finite game and one winning strategy per player."""
    W0: frozenset[str]
    W1: frozenset[str]
    strat0: Strategy = field(default_factory=lambda: PositionalStrategy(0))
    strat1: Strategy = field(default_factory=lambda: PositionalStrategy(1))
    algorithm: str = ""

    def region(self, player: int) -> frozenset[str]:
        return self.W0 if player == 0 else self.W1

    def strategy(self, player: int) -> Strategy:
        return self.strat0 if player == 0 else self.strat1

    def winner(self, vertex: str) -> int:
        return 0 if vertex in self.W0 else 1

    @property
    def positional(self) -> bool:
        return isinstance(self.strat0, PositionalStrategy) and isinstance(self.strat1, PositionalStrategy)

    def to_json(self) -> dict:
        out = {"W0": sorted(self.W0), "W1": sorted(self.W1)}
        for key, strategy in (("strat0", self.strat0), ("strat1", self.strat1)):
            out[key] = dict(strategy.moves) if isinstance(strategy, PositionalStrategy) else strategy.to_json()
        return out


def swap_roles(result: SolveResult) -> SolveResult:
    """Read a result computed with the players exchanged."""
    def renamed(strategy: Strategy, player: int) -> Strategy:
        if isinstance(strategy, PositionalStrategy):
            return PositionalStrategy(player, strategy.moves)
        return type(strategy)(player, strategy.memory, strategy.initial_state, strategy.updates, strategy.moves)

    return SolveResult(result.W1, result.W0, renamed(result.strat1, 0), renamed(result.strat0, 1), result.algorithm)
