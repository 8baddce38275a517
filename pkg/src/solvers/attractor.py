from collections import deque
from typing import Iterable

from src.arena import Arena
from src.strategy import PositionalStrategy


def attractor(arena: Arena, player: int, target: Iterable[str],
              within: Iterable[str] | None = None) -> tuple[frozenset[str], PositionalStrategy]:
    """
    Least set containing target that `player` can force the play into,
    computed inside the subgame `within`. The strategy moves every attracted
    player vertex one step closer to target.
    """
    region = set(arena.ids) if within is None else set(within)
    attracted = set(target) & region
    moves: dict[str, str] = {}
    remaining = {v: sum(1 for w in arena.successors(v) if w in region) for v in region}

    queue = deque(sorted(attracted))
    while queue:
        w = queue.popleft()
        for v in arena.predecessors(w):
            if v not in region or v in attracted:
                continue
            if arena.owner(v) == player:
                moves[v] = w
            else:
                remaining[v] -= 1
                if remaining[v]:
                    continue
            attracted.add(v)
            queue.append(v)
    return frozenset(attracted), PositionalStrategy(player, moves)
