"""
Small progress measures for min-parity games.

A measure assigns each vertex a tuple of counters, one per odd priority
present, most significant first; counter j is bounded by the number of
vertices carrying the j-th odd priority. TOP (None) marks vertices lost by
player 0. Comparison at priority p only looks at counters for odd
priorities <= p.
"""
from collections import deque
from dataclasses import dataclass

from src.arena import Arena
from src.logger import debug, log
from src.priority import Priority
from src.solvers.result import SolveResult
from src.strategy import PositionalStrategy

TOP = None
Measure = tuple[int, ...] | None


def _key(m: Measure) -> tuple:
    return (1,) if m is TOP else (0, m)


@dataclass(frozen=True)
class ProgressMeasure:
    odd: tuple[Priority, ...]
    bounds: tuple[int, ...]
    values: dict[str, Measure]

    def width(self, p: Priority) -> int:
        """Number of counters that count at priority p."""
        return sum(1 for o in self.odd if o <= p)

    def truncate(self, m: Measure, p: Priority) -> Measure:
        if m is TOP:
            return TOP
        w = self.width(p)
        return m[:w] + (0,) * (len(m) - w)

    def leq(self, a: Measure, b: Measure, p: Priority) -> bool:
        return _key(self.truncate(a, p)) <= _key(self.truncate(b, p))

    def less(self, a: Measure, b: Measure, p: Priority) -> bool:
        return _key(self.truncate(a, p)) < _key(self.truncate(b, p))

    def prog(self, p: Priority, m: Measure) -> Measure:
        """Least measure that is >=_p m, strictly when p is odd."""
        m = self.truncate(m, p)
        if m is TOP or p.is_even:
            return m
        counters = list(m)
        j = self.width(p) - 1
        while j >= 0:
            if counters[j] < self.bounds[j]:
                counters[j] += 1
                return tuple(counters)
            counters[j] = 0
            j -= 1
        return TOP

    def is_top(self, v: str) -> bool:
        return self.values[v] is TOP

    def edge_holds(self, arena: Arena, s: str, t: str) -> bool:
        """measure(t) <=_{p} measure(s), strictly when p = priority(s) is odd."""
        p = arena.priority(s)
        if self.values[s] is TOP:
            return True
        check = self.less if not p.is_even else self.leq
        return check(self.values[t], self.values[s], p)

    def to_json(self) -> dict:
        return {
            "odd": [o.to_json() for o in self.odd],
            "values": {v: (None if m is TOP else list(m)) for v, m in sorted(self.values.items())},
        }


def _lift_all(arena: Arena) -> ProgressMeasure:
    odd = tuple(sorted(p for p in arena.priorities() if not p.is_even))
    bounds = tuple(sum(1 for v in arena.vertices if v.priority == o) for o in odd)
    zero = (0,) * len(odd)
    measure = ProgressMeasure(odd, bounds, {v: zero for v in arena.ids})
    rho = measure.values

    def lift(v: str) -> Measure:
        p = arena.priority(v)
        options = [measure.prog(p, rho[w]) for w in arena.successors(v)]
        pick = min if arena.owner(v) == 0 else max
        return pick(options, key=_key)

    queue = deque(arena.ids)
    queued = set(arena.ids)
    lifts = 0
    while queue:
        v = queue.popleft()
        queued.discard(v)
        if rho[v] is TOP:
            continue
        lifted = lift(v)
        if _key(lifted) > _key(rho[v]):
            rho[v] = lifted
            lifts += 1
            for u in arena.predecessors(v):
                if u not in queued and rho[u] is not TOP:
                    queued.add(u)
                    queue.append(u)
    debug(f"spm: {lifts} lifts over {len(odd)} odd priorities")
    return measure


def _strategy(arena: Arena, measure: ProgressMeasure, player: int) -> PositionalStrategy:
    moves = {}
    for v in arena.owned_by(0):
        if measure.is_top(v):
            continue
        p = arena.priority(v)
        moves[v] = min(arena.successors(v), key=lambda w: (_key(measure.prog(p, measure.values[w])), w))
    return PositionalStrategy(player, moves)


def progress_measure(arena: Arena) -> tuple[ProgressMeasure, PositionalStrategy]:
    """Least progress measure for player 0 and the strategy that follows it."""
    measure = _lift_all(arena)
    return measure, _strategy(arena, measure, 0)


def solve_parity_spm(arena: Arena) -> tuple[SolveResult, ProgressMeasure]:
    """Run the lifting twice, the second time on the dual game for player 1."""
    log(f"Solving {len(arena)} vertices with {len(arena.priorities())} priorities (progress measures)")
    measure, strat0 = progress_measure(arena)
    W0 = frozenset(v for v in arena.ids if not measure.is_top(v))

    dual_measure = _lift_all(arena.dual())
    strat1 = _strategy(arena.dual(), dual_measure, 1)
    W1 = frozenset(v for v in arena.ids if not dual_measure.is_top(v))
    return SolveResult(W0, W1, strat0, strat1, "spm"), measure
