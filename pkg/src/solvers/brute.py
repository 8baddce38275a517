"""
Independent oracles for small games: exhaustive positional strategy pairs
for parity games, and McNaughton's recursive algorithm for Muller games.
"""
from itertools import product
from typing import Iterator

from src.arena import Arena
from src.conditions import ConditionSpec, member, winner_of_lasso
from src.logger import debug
from src.product import induced_lasso
from src.solvers.attractor import attractor
from src.strategy import PositionalStrategy


def positional_strategies(arena: Arena, player: int, region=None) -> Iterator[PositionalStrategy]:
    owned = [v for v in arena.owned_by(player) if region is None or v in region]
    choices = [[w for w in arena.successors(v) if region is None or w in region] for v in owned]
    for picks in product(*choices):
        yield PositionalStrategy(player, dict(zip(owned, picks)))


def count_positional(arena: Arena, player: int) -> int:
    total = 1
    for v in arena.owned_by(player):
        total *= len(arena.successors(v))
    return total


def solve_brute(arena: Arena, c: ConditionSpec) -> tuple[frozenset[str], frozenset[str]]:
    """
    Player 0 wins from v iff some positional strategy beats every positional
    counter-strategy; sound for conditions with positional determinacy.
    """
    strategies1 = list(positional_strategies(arena, 1))
    W0 = set()
    for s0 in positional_strategies(arena, 0):
        for v in arena.ids:
            if v in W0:
                continue
            if all(winner_of_lasso(c, arena, induced_lasso(arena, s0, s1, v)) == 0 for s1 in strategies1):
                W0.add(v)
    debug(f"brute force: {count_positional(arena, 0)} x {len(strategies1)} strategy pairs")
    return frozenset(W0), frozenset(arena.ids) - W0


def solve_muller_reference(arena: Arena, c: ConditionSpec) -> tuple[frozenset[str], frozenset[str]]:
    """Regions by McNaughton's algorithm: attract to one priority class, recurse, retreat."""
    def solve(region: frozenset[str]) -> tuple[frozenset[str], frozenset[str]]:
        if not region:
            return frozenset(), frozenset()
        colours = sorted({arena.priority(v) for v in region})
        sigma = member(c, colours)
        for colour in colours:
            target = {v for v in region if arena.priority(v) == colour}
            attracted, _ = attractor(arena, sigma, target, region)
            sub = solve(region - attracted)
            if sub[1 - sigma]:
                escaped, _ = attractor(arena, 1 - sigma, sub[1 - sigma], region)
                rest = list(solve(region - escaped))
                rest[1 - sigma] = rest[1 - sigma] | escaped
                return rest[0], rest[1]
        won = [frozenset(), frozenset()]
        won[sigma] = region
        return won[0], won[1]

    return solve(frozenset(arena.ids))
