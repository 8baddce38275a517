from typing import Iterable

from src.arena import Arena
from src.conditions import ConditionSpec, MaxParity, MinParity, OrdinalParity, kind_of
from src.errors import InternalVerificationError, NotAPath, RegionNotClosed
from src.logger import log
from src.positionalize.signatures import SignatureOrder, signatures
from src.product import Product, product_with_memory
from src.reduction import reduce_to_parity
from src.solvers.verify import verify_positional
from src.strategy import MemoryStrategy, PositionalStrategy, Strategy, as_memory_strategy


def _as_player(strategy: MemoryStrategy, player: int) -> MemoryStrategy:
    if strategy.player == player:
        return strategy
    return MemoryStrategy(player, strategy.memory, strategy.initial_state, strategy.updates, strategy.moves)


def winning_product(arena: Arena, strategy: Strategy, region: Iterable[str]) -> Product:
    """Product of the strategy from every region vertex; raises if a play leaves the region."""
    region = frozenset(region)
    product = product_with_memory(arena, strategy, region)
    for pid, qid in product.arena.edges():
        if product.projection[qid] not in region:
            raise RegionNotClosed(product.projection[pid], product.projection[qid])
    return product


def select_occurrences(product: Product, order: SignatureOrder, arena: Arena, player: int) -> dict[str, str]:
    """For each owned vertex, its occurrence with the least truncated signature, then memory id."""
    chosen = {}
    for v in sorted(set(product.projection.values())):
        if arena.owner(v) != player:
            continue
        p = arena.priority(v)
        chosen[v] = min(product.occurrences(v), key=lambda pid: (order.key(pid, p), product.memory[pid]))
    return chosen


def positionalize(arena: Arena, c: ConditionSpec, strategy: Strategy, region: Iterable[str],
                  player: int) -> PositionalStrategy:
    """
    Positional strategy winning on `region`, read off a finite-memory winning
    strategy by keeping at each vertex the move of its minimal occurrence.
    """
    region = frozenset(region)
    if isinstance(c, MaxParity):
        raise NotAPath("max-parity is not positionally determined")
    parity_arena, parity_player = arena, player
    if not isinstance(c, (MinParity, OrdinalParity)):
        r = reduce_to_parity(c)
        parity_arena, parity_player = r.relabel_arena(arena), player ^ int(r.role_swapped)

    memory = _as_player(as_memory_strategy(strategy), parity_player)
    product = winning_product(parity_arena, memory, region)
    order = signatures(product.arena, parity_player)
    chosen = select_occurrences(product, order, parity_arena, parity_player)
    moves = {v: memory.next_move(v, product.memory[pid]) for v, pid in chosen.items()}
    result = PositionalStrategy(player, moves)

    log(f"Positionalized a {len(memory.memory)}-state strategy of player {player} "
        f"on {len(region)} vertices ({kind_of(c)})")
    verdict = verify_positional(arena, c, result, region)
    if not verdict:
        raise InternalVerificationError(f"positionalized strategy loses on {verdict.witness}")
    return result
