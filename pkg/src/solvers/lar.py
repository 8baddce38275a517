"""
Latest appearance record (LAR) product turning a Muller game over a small
alphabet into a min-parity game.

A record is a permutation of the alphabet, most recent priority first,
together with the position h the entered priority was moved from. The
priority of a product vertex is 2(K-1-h) + b with b = 0 iff the first h+1
entries of the record form an F0 set, so the largest h hit infinitely often
decides the play.
"""
from collections import deque
from dataclasses import dataclass

from src.arena import Arena, Vertex
from src.conditions import ExplicitMuller
from src.config import MAX_LAR_ALPHABET
from src.errors import AlphabetTooLarge, OutOfAlphabet
from src.logger import log
from src.priority import Priority, sorted_priorities
from src.product import product_id
from src.solvers.recursive import solve_parity_recursive
from src.solvers.result import SolveResult
from src.strategy import MemoryStrategy

INITIAL_RECORD = "-"

Record = tuple[tuple[int, ...], int]


def record_token(record: Record) -> str:
    perm, h = record
    return ".".join(map(str, perm)) + f":{h}"


@dataclass(frozen=True)
class LarGame:
    arena: Arena
    source: Arena
    condition: ExplicitMuller
    projection: dict[str, str]
    records: dict[str, Record]
    seeds: dict[str, str]

    def record_of(self, pid: str) -> str:
        return record_token(self.records[pid])


def lar_reduce(arena: Arena, c: ExplicitMuller) -> LarGame:
    colours = sorted_priorities(c.alphabet)
    k = len(colours)
    if k > MAX_LAR_ALPHABET:
        raise AlphabetTooLarge(k, MAX_LAR_ALPHABET)
    stray = arena.priorities() - c.alphabet
    if stray:
        raise OutOfAlphabet(stray)
    index = {p: i for i, p in enumerate(colours)}

    def enter(perm: tuple[int, ...], v: str) -> Record:
        colour = index[arena.priority(v)]
        h = perm.index(colour)
        return (colour,) + perm[:h] + perm[h + 1:], h

    def priority(record: Record) -> Priority:
        perm, h = record
        seen = frozenset(colours[i] for i in perm[:h + 1])
        return Priority(0, 2 * (k - 1 - h) + (0 if seen in c.f0 else 1))

    start_perm = tuple(range(k))
    nodes: dict[str, tuple[str, Record]] = {}
    seeds: dict[str, str] = {}
    queue = deque()
    for v in arena.ids:
        record = enter(start_perm, v)
        pid = product_id(v, record_token(record))
        seeds[v] = pid
        if pid not in nodes:
            nodes[pid] = (v, record)
            queue.append(pid)

    edges = []
    while queue:
        pid = queue.popleft()
        v, (perm, _h) = nodes[pid]
        for w in arena.successors(v):
            record = enter(perm, w)
            qid = product_id(w, record_token(record))
            edges.append((pid, qid))
            if qid not in nodes:
                nodes[qid] = (w, record)
                queue.append(qid)

    vertices = [Vertex(pid, arena.owner(v), priority(record)) for pid, (v, record) in nodes.items()]
    log(f"LAR product: {len(arena)} vertices x {k} priorities -> {len(vertices)} vertices")
    return LarGame(
        Arena(vertices, edges, {"lar_of": arena.metadata.get("name", "arena")}),
        arena,
        c,
        {pid: v for pid, (v, _r) in nodes.items()},
        {pid: record for pid, (_v, record) in nodes.items()},
        seeds,
    )


def _memory_strategy(game: LarGame, result: SolveResult, player: int) -> MemoryStrategy:
    """Records as memory: update follows the LAR transition, moves follow the parity strategy."""
    tokens = sorted({game.record_of(pid) for pid in game.arena.ids})
    updates: dict[tuple[str, str], str] = {}
    for v, pid in game.seeds.items():
        updates[(INITIAL_RECORD, v)] = game.record_of(pid)
    for pid, qid in game.arena.edges():
        updates[(game.record_of(pid), game.projection[qid])] = game.record_of(qid)
    moves = {
        (game.projection[pid], game.record_of(pid)): game.projection[w]
        for pid, w in result.strategy(player).moves.items()
    }
    return MemoryStrategy(player, (INITIAL_RECORD, *tokens), INITIAL_RECORD, updates, moves)


def solve_lar(arena: Arena, c: ExplicitMuller) -> SolveResult:
    """Muller winning regions through the LAR product, with record-memory strategies."""
    game = lar_reduce(arena, c)
    parity = solve_parity_recursive(game.arena)
    W0 = frozenset(v for v, pid in game.seeds.items() if pid in parity.W0)
    W1 = frozenset(arena.ids) - W0
    return SolveResult(W0, W1, _memory_strategy(game, parity, 0), _memory_strategy(game, parity, 1), "lar")
