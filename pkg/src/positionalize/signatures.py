"""
Signatures of a strategy-restricted graph for player sigma: one beta value
per priority of the opponent's parity, compared lexicographically and
truncated at the priority under consideration.
"""
import math
from dataclasses import dataclass

from src.arena import Arena
from src.errors import InputStrategyNotWinning
from src.logger import debug
from src.positionalize.stages import compute_beta
from src.priority import Priority


@dataclass(frozen=True)
class SignatureOrder:
    player: int
    priorities: tuple[Priority, ...]
    values: dict[str, tuple[int, ...]]

    def key(self, v: str, p: Priority) -> tuple[int, ...]:
        """sig_p(v): the components for relevant priorities <= p."""
        width = sum(1 for n in self.priorities if n <= p)
        return self.values[v][:width]

    def leq(self, s: str, t: str, p: Priority) -> bool:
        return self.key(s, p) <= self.key(t, p)

    def less(self, s: str, t: str, p: Priority) -> bool:
        return self.key(s, p) < self.key(t, p)

    def edge_holds(self, arena: Arena, s: str, t: str) -> bool:
        p = arena.priority(s)
        if p.parity != self.player:
            return self.less(t, s, p)
        return self.leq(t, s, p)

    def violations(self, arena: Arena) -> list[tuple[str, str]]:
        return [(s, t) for s, t in arena.edges() if not self.edge_holds(arena, s, t)]


def signatures(arena: Arena, player: int) -> SignatureOrder:
    """
    `arena` is a strategy product (or any graph on which every cycle should
    be won by `player`). Raises InputStrategyNotWinning when some beta is
    infinite.
    """
    relevant = tuple(sorted(p for p in arena.priorities() if p.parity != player))
    columns = []
    for n in relevant:
        table = compute_beta(
            arena,
            {v for v in arena.ids if arena.priority(v) == n},
            {v for v in arena.ids if arena.priority(v) < n},
        )
        for v in arena.ids:
            if table.values[v] == math.inf:
                raise InputStrategyNotWinning(v, n)
        columns.append(table.values)
    values = {v: tuple(int(column[v]) for column in columns) for v in arena.ids}
    debug(f"signatures for player {player}: {len(relevant)} components over {len(arena)} vertices")
    return SignatureOrder(player, relevant, values)
