"""
Strategy verification on finite arenas.

A strategy of player sigma wins from a region when no cycle of the
strategy-restricted graph has an inf-set won by the opponent. Parity-type
conditions are checked per priority on the subgraph of larger (or smaller)
priorities; other conditions by a recursive SCC decomposition that drops one
priority class at a time.
"""
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

import networkx as nx

from src.arena import Arena, Lasso
from src.conditions import (
    ConditionSpec, ExplicitMuller, MaxParity, MinParity, OrdinalParity, member,
)
from src.config import MULLER_REGION_LIMIT
from src.errors import IllegalMove, NotAPath, RegionNotClosed, TooLargeForMullerCheck
from src.logger import debug
from src.product import product_with_memory
from src.strategy import PositionalStrategy, Strategy


@dataclass(frozen=True)
class StrategyCheck:
    holds: bool
    player: int
    witness: Lasso | None = None
    note: str = ""

    def __bool__(self) -> bool:
        return self.holds

    def to_json(self) -> dict:
        out = {"verdict": "PASS" if self.holds else "FAIL", "player": self.player}
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
        if self.note:
            out["note"] = self.note
        return out


def restrict_to_strategy(arena: Arena, strategy: PositionalStrategy, region: Iterable[str]) -> Arena:
    """The region with owned vertices cut down to their strategy edge; raises unless closed."""
    region = set(region)
    vertices, edges = [], []
    for v in sorted(region):
        if arena.owner(v) == strategy.player:
            w = strategy.next_move(v)
            if not arena.has_edge(v, w):
                raise IllegalMove(v, w)
            targets = (w,)
        else:
            targets = arena.successors(v)
        for w in targets:
            if w not in region:
                raise RegionNotClosed(v, w)
            edges.append((v, w))
        vertices.append(arena.vertex(v))
    return Arena(vertices, edges, arena.metadata)


def _closed_walk(graph: nx.DiGraph, component: set[str], start: str) -> list[str]:
    """A closed walk inside `component` from `start` through every vertex, without the closing repeat."""
    if len(component) == 1:
        return [start]
    inside = graph.subgraph(component)
    walk = [start]
    for target in sorted(component - {start}) + [start]:
        if target != walk[-1]:
            walk.extend(nx.shortest_path(inside, walk[-1], target)[1:])
    return walk[:-1]


def _nontrivial(graph: nx.DiGraph, component: set[str]) -> bool:
    if len(component) > 1:
        return True
    (v,) = component
    return graph.has_edge(v, v)


def _parity_losing_cycle(arena: Arena, graph: nx.DiGraph, c: ConditionSpec, player: int) -> Lasso | None:
    descending = isinstance(c, MaxParity)
    for p in sorted(arena.priorities(), reverse=descending):
        if p.parity == player:
            continue
        keep = [v for v in graph if (arena.priority(v) <= p if descending else arena.priority(v) >= p)]
        sub = graph.subgraph(keep)
        for component in nx.strongly_connected_components(sub):
            hits = sorted(v for v in component if arena.priority(v) == p)
            if hits and _nontrivial(sub, component):
                walk = _cycle_through(sub, component, hits[0])
                return Lasso((), tuple(walk))
    return None


def _cycle_through(graph: nx.DiGraph, component: set[str], v: str) -> list[str]:
    inside = graph.subgraph(component)
    if inside.has_edge(v, v):
        return [v]
    best = None
    for w in sorted(inside.successors(v)):
        path = nx.shortest_path(inside, w, v)
        if best is None or len(path) < len(best):
            best = path
    return [v] + best[:-1]


def _muller_losing_cycle(arena: Arena, graph: nx.DiGraph, c: ConditionSpec, player: int) -> Lasso | None:
    """
    Strongly connected subgraph whose colour set the opponent wins. Each SCC
    is tested as a whole; when its colours are won by `player`, one colour
    class is removed at a time and the remainder is decomposed again. Removing
    the colours a strongly connected subgraph U lacks leaves U inside an SCC
    with exactly the colours of U, so no vertex subsets are enumerated.
    """
    @lru_cache(maxsize=None)
    def search(nodes: frozenset[str]) -> frozenset[str] | None:
        sub = graph.subgraph(nodes)
        for component in nx.strongly_connected_components(sub):
            if not _nontrivial(sub, component):
                continue
            colours = frozenset(arena.priority(v) for v in component)
            if member(c, colours) != player:
                return frozenset(component)
            for colour in sorted(colours):
                smaller = frozenset(v for v in component if arena.priority(v) != colour)
                found = search(smaller) if smaller else None
                if found is not None:
                    return found
        return None

    component = search(frozenset(graph.nodes))
    if component is None:
        return None
    walk = _closed_walk(graph, set(component), min(component))
    return Lasso((), tuple(walk))


def losing_cycle(arena: Arena, c: ConditionSpec, player: int) -> Lasso | None:
    """A cycle of `arena` (already restricted to a strategy) won by the opponent of `player`."""
    graph = arena.to_networkx()
    if isinstance(c, (MinParity, OrdinalParity, MaxParity)):
        return _parity_losing_cycle(arena, graph, c, player)
    return _muller_losing_cycle(arena, graph, c, player)


def _needs_region_limit(c: ConditionSpec) -> bool:
    if not isinstance(c, ExplicitMuller):
        return False
    from src.zielonka import build_tree
    return not build_tree(c).is_path()


def verify_positional(arena: Arena, c: ConditionSpec, strategy: PositionalStrategy,
                      region: Iterable[str]) -> StrategyCheck:
    region = frozenset(region)
    if not region:
        return StrategyCheck(True, strategy.player, note="empty region")
    restricted = restrict_to_strategy(arena, strategy, region)
    if _needs_region_limit(c) and len(region) > MULLER_REGION_LIMIT:
        raise TooLargeForMullerCheck(len(region), MULLER_REGION_LIMIT)
    if not isinstance(c, (MinParity, OrdinalParity, MaxParity)):
        try:
            from src.reduction import reduce_to_parity
            r = reduce_to_parity(c)
            lasso = losing_cycle(r.relabel_arena(restricted), MinParity(), strategy.player ^ int(r.role_swapped))
        except NotAPath:
            lasso = losing_cycle(restricted, c, strategy.player)
    else:
        lasso = losing_cycle(restricted, c, strategy.player)
    if lasso is not None:
        debug(f"positional strategy of player {strategy.player} loses on loop {lasso.loop}")
        return StrategyCheck(False, strategy.player, lasso, "opponent closes a losing cycle")
    return StrategyCheck(True, strategy.player)


def verify_memory(arena: Arena, c: ConditionSpec, strategy: Strategy,
                  starts: Iterable[str] | None = None) -> StrategyCheck:
    """Build the product with the strategy's memory and search it for a losing cycle."""
    product = product_with_memory(arena, strategy, starts)
    lasso = losing_cycle(product.arena, c, strategy.player)
    if lasso is None:
        return StrategyCheck(True, strategy.player, note=f"product of {len(product.arena)} vertices")
    projected = Lasso(tuple(product.projection[v] for v in lasso.prefix),
                      tuple(product.projection[v] for v in lasso.loop))
    return StrategyCheck(False, strategy.player, projected, "opponent closes a losing cycle in the product")
