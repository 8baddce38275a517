"""
Finite quotient of the strategy forest: the arena multiplied with a
strategy's memory, and the unique play induced by two strategies.
"""
from collections import deque
from dataclasses import dataclass
from typing import Iterable

from src.arena import PRODUCT_SEPARATOR, Arena, Lasso, Vertex
from src.errors import DuplicateId, IllegalMove
from src.strategy import Strategy


def product_id(vertex: str, memory: str) -> str:
    return f"{vertex}{PRODUCT_SEPARATOR}{memory}"


@dataclass(frozen=True)
class Product:
    arena: Arena
    projection: dict[str, str]
    memory: dict[str, str]
    seeds: dict[str, str]

    def occurrences(self, vertex: str) -> list[str]:
        return [pid for pid in self.arena.ids if self.projection[pid] == vertex]

    def project(self, ids: Iterable[str]) -> set[str]:
        return {self.projection[pid] for pid in ids}


def product_with_memory(arena: Arena, strategy: Strategy, starts: Iterable[str] | None = None) -> Product:
    """
    Vertices (v, m) reachable from the seeds (v0, update(m0, v0)). Owned
    vertices keep only the strategy edge, opponent vertices keep all edges.
    """
    roots = sorted(arena.ids if starts is None else set(starts))
    seeds = {v: product_id(v, strategy.start(v)) for v in roots}

    nodes: dict[str, tuple[str, str]] = {}
    edges: list[tuple[str, str]] = []
    queue = deque()
    for v in roots:
        pid = seeds[v]
        if nodes.get(pid, (v, strategy.start(v))) != (v, strategy.start(v)):
            raise DuplicateId(pid)
        if pid not in nodes:
            nodes[pid] = (v, strategy.start(v))
            queue.append(pid)

    while queue:
        pid = queue.popleft()
        v, m = nodes[pid]
        if arena.owner(v) == strategy.player:
            target = strategy.next_move(v, m)
            if not arena.has_edge(v, target):
                raise IllegalMove(v, target)
            targets = (target,)
        else:
            targets = arena.successors(v)
        for w in targets:
            m2 = strategy.update(m, w)
            qid = product_id(w, m2)
            if nodes.get(qid, (w, m2)) != (w, m2):
                raise DuplicateId(qid)
            edges.append((pid, qid))
            if qid not in nodes:
                nodes[qid] = (w, m2)
                queue.append(qid)

    vertices = [Vertex(pid, arena.owner(v), arena.priority(v)) for pid, (v, _m) in nodes.items()]
    return Product(
        Arena(vertices, edges, {"product_of": arena.metadata.get("name", "arena")}),
        {pid: v for pid, (v, _m) in nodes.items()},
        {pid: m for pid, (_v, m) in nodes.items()},
        seeds,
    )


def induced_lasso(arena: Arena, s0: Strategy, s1: Strategy, start: str) -> Lasso:
    """The unique play from start; the loop closes at the first repeated (vertex, m0, m1)."""
    strategies = {s0.player: s0, s1.player: s1}
    if set(strategies) != {0, 1}:
        raise ValueError("induced_lasso needs one strategy per player")

    m0, m1 = s0.start(start), s1.start(start)
    v = start
    seen: dict[tuple[str, str, str], int] = {}
    walk: list[str] = []
    while (v, m0, m1) not in seen:
        seen[(v, m0, m1)] = len(walk)
        walk.append(v)
        mover = strategies[arena.owner(v)]
        w = mover.next_move(v, m0 if mover is s0 else m1)
        if not arena.has_edge(v, w):
            raise IllegalMove(v, w)
        m0, m1 = s0.update(m0, w), s1.update(m1, w)
        v = w
    cut = seen[(v, m0, m1)]
    return Lasso(tuple(walk[:cut]), tuple(walk[cut:]))
