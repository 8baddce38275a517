"""
Fixed-point stages on finite transition systems.

alpha(s): how often a path from s can hit P, as the least stage k with s in
X^k, where X^k = nu Y. (P -> box X^{k-1}) and box Y.

beta(s): how often a path from s can hit P before seeing Q, with
X^k = nu Y. Q or ((not P or box X^{k-1}) and box Y). Q wins at vertices in
both P and Q.

Owners are ignored: the arena is read as a plain graph.
"""
import math
from collections import deque
from dataclasses import dataclass
from typing import Callable, Iterable

from src.arena import Arena
from src.logger import debug
from src.priority import Priority

ALPHA = "alpha"
BETA = "beta"

VertexSet = frozenset[str]


@dataclass(frozen=True)
class StageTable:
    kind: str
    values: dict[str, float]
    P: VertexSet
    Q: VertexSet = frozenset()
    sets: tuple[VertexSet, ...] = ()

    def value(self, v: str) -> float:
        return self.values[v]

    def is_finite(self, v: str) -> bool:
        return self.values[v] != math.inf

    def edge_violations(self, arena: Arena) -> list[tuple[str, str]]:
        """Edges (s, t) with finite value at s breaking value(s) >= value(t), strict at P."""
        bad = []
        for s, t in arena.edges():
            if not self.is_finite(s) or (self.kind == BETA and s in self.Q):
                continue
            vs, vt = self.values[s], self.values[t]
            if vt > vs or (s in self.P and vt == vs):
                bad.append((s, t))
        return bad

    def rows(self) -> list[tuple[str, str]]:
        return [(v, "inf" if x == math.inf else str(int(x))) for v, x in sorted(self.values.items())]


def _vertex_set(arena: Arena, which: Iterable[str] | Callable[[str], bool]) -> VertexSet:
    if callable(which):
        return frozenset(v for v in arena.ids if which(v))
    return frozenset(which)


def _backward_closure(arena: Arena, seeds: set[str], through: Callable[[str], bool]) -> set[str]:
    """Vertices that reach `seeds` along paths whose earlier vertices satisfy `through`."""
    closure = set(seeds)
    queue = deque(seeds)
    while queue:
        w = queue.popleft()
        for v in arena.predecessors(w):
            if v not in closure and through(v):
                closure.add(v)
                queue.append(v)
    return closure


def _iterate(arena: Arena, stage: Callable[[VertexSet], VertexSet]) -> tuple[dict[str, float], tuple[VertexSet, ...]]:
    values = {v: math.inf for v in arena.ids}
    sets: list[VertexSet] = []
    previous: VertexSet = frozenset()
    while True:
        current = stage(previous)
        for v in current - previous:
            values[v] = len(sets)
        sets.append(current)
        if current == previous:
            break
        previous = current
    return values, tuple(sets)


def compute_alpha(arena: Arena, P) -> StageTable:
    P = _vertex_set(arena, P)

    def stage(previous: VertexSet) -> VertexSet:
        bad = {v for v in P if any(w not in previous for w in arena.successors(v))}
        return frozenset(arena.ids) - _backward_closure(arena, bad, lambda v: True)

    values, sets = _iterate(arena, stage)
    debug(f"alpha: {len(sets)} stages over |P| = {len(P)}")
    return StageTable(ALPHA, values, P, frozenset(), sets)


def compute_beta(arena: Arena, P, Q) -> StageTable:
    P, Q = _vertex_set(arena, P), _vertex_set(arena, Q)

    def stage(previous: VertexSet) -> VertexSet:
        bad = {v for v in P - Q if any(w not in previous for w in arena.successors(v))}
        return frozenset(arena.ids) - _backward_closure(arena, bad, lambda v: v not in Q)

    values, sets = _iterate(arena, stage)
    debug(f"beta: {len(sets)} stages over |P| = {len(P)}, |Q| = {len(Q)}")
    return StageTable(BETA, values, P, Q, sets)


def priority_stage(arena: Arena, n, kind: str = BETA) -> StageTable:
    """alpha or beta of the priority-n vertices; beta guards with every smaller priority."""
    n = Priority.of(n)
    P = {v for v in arena.ids if arena.priority(v) == n}
    if kind == ALPHA:
        return compute_alpha(arena, P)
    return compute_beta(arena, P, {v for v in arena.ids if arena.priority(v) < n})
