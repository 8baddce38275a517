"""Recursive (Zielonka) solver for finite min-parity games."""
import sys

from src.arena import Arena
from src.logger import debug, log
from src.solvers.attractor import attractor
from src.solvers.result import SolveResult
from src.strategy import PositionalStrategy

Moves = dict[str, str]


def _solve(arena: Arena, region: frozenset[str]) -> tuple[list[frozenset[str]], list[Moves]]:
    if not region:
        return [frozenset(), frozenset()], [{}, {}]

    p = min(arena.priority(v) for v in region)
    player, opponent = p.parity, 1 - p.parity
    top = {v for v in region if arena.priority(v) == p}
    attracted, attract_strategy = attractor(arena, player, top, region)

    sub_regions, sub_moves = _solve(arena, region - attracted)
    if not sub_regions[opponent]:
        moves = dict(sub_moves[player])
        moves.update(attract_strategy.moves)
        for v in sorted(top):
            if arena.owner(v) == player:
                moves[v] = next(w for w in arena.successors(v) if w in region)
        regions = [frozenset(), frozenset()]
        regions[player] = region
        result_moves: list[Moves] = [{}, {}]
        result_moves[player] = moves
        return regions, result_moves

    escaped, escape_strategy = attractor(arena, opponent, sub_regions[opponent], region)
    rest_regions, rest_moves = _solve(arena, region - escaped)
    regions = [frozenset(), frozenset()]
    regions[player] = rest_regions[player]
    regions[opponent] = rest_regions[opponent] | escaped
    result_moves = [{}, {}]
    result_moves[player] = dict(rest_moves[player])
    opponent_moves = dict(rest_moves[opponent])
    opponent_moves.update({v: w for v, w in sub_moves[opponent].items() if v in sub_regions[opponent]})
    opponent_moves.update(escape_strategy.moves)
    result_moves[opponent] = opponent_moves
    return regions, result_moves


def solve_parity_recursive(arena: Arena) -> SolveResult:
    """Both winning regions and positional strategies of a min-parity game."""
    log(f"Solving {len(arena)} vertices with {len(arena.priorities())} priorities (recursive)")
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 4 * len(arena) + 100))
    regions, moves = _solve(arena, frozenset(arena.ids))
    strategies = [
        PositionalStrategy(player, {v: w for v, w in moves[player].items()
                                    if v in regions[player] and arena.owner(v) == player})
        for player in (0, 1)
    ]
    debug(f"recursive: |W0| = {len(regions[0])}, |W1| = {len(regions[1])}")
    return SolveResult(regions[0], regions[1], strategies[0], strategies[1], "recursive")
