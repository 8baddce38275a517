"""
DOT diagrams of arenas. Player 0 vertices are ellipses and player 1 vertices
are boxes; overlays add winning regions (fill colour), strategy moves (bold
edges) and stage or signature values (secondary labels).
"""
from dataclasses import dataclass, field
from typing import Iterable, Mapping

import pydot

from src.arena import Arena
from src.errors import UnknownVertexInOverlay
from src.logger import debug
from src.positionalize.stages import StageTable
from src.solvers.result import SolveResult
from src.strategy import Strategy

SHAPES = {0: "ellipse", 1: "box"}
REGION_COLOURS = {0: "lightblue", 1: "lightpink"}


@dataclass
class Overlay:
    regions: Mapping[int, Iterable[str]] = field(default_factory=dict)
    strategies: list[Strategy] = field(default_factory=list)
    stages: Mapping[str, object] = field(default_factory=dict)

    @classmethod
    def of(cls, result: SolveResult | None = None, strategies: Iterable[Strategy] = (),
           stages: StageTable | Mapping | None = None) -> "Overlay":
        overlay = cls(strategies=list(strategies))
        if result is not None:
            overlay.regions = {0: result.W0, 1: result.W1}
            overlay.strategies += [result.strat0, result.strat1]
        if isinstance(stages, StageTable):
            overlay.stages = dict(stages.rows())
        elif stages:
            overlay.stages = dict(stages)
        return overlay

    def check(self, arena: Arena) -> None:
        named = [v for region in self.regions.values() for v in region]
        for strategy in self.strategies:
            for v, _m, w in strategy.move_items():
                named += [v, w]
        named += list(self.stages)
        for v in named:
            if v not in arena:
                raise UnknownVertexInOverlay(v)


def quoted(name: str) -> str:
    return '"' + str(name).replace('\\', '\\\\').replace('"', '\\"') + '"'


def build_dot(arena: Arena, overlay: Overlay | None = None, name: str = "arena") -> pydot.Dot:
    overlay = overlay or Overlay()
    overlay.check(arena)
    fill = {v: REGION_COLOURS[player] for player, region in overlay.regions.items() for v in region}
    bold = {(v, w) for strategy in overlay.strategies for v, _m, w in strategy.move_items()}

    graph = pydot.Dot(quoted(name), graph_type="digraph")
    for vertex in arena.vertices:
        attrs = {"shape": SHAPES[vertex.owner], "label": quoted(f"{vertex.id} : {vertex.priority}")}
        if vertex.id in fill:
            attrs.update(style="filled", fillcolor=fill[vertex.id])
        if vertex.id in overlay.stages:
            attrs["xlabel"] = quoted(str(overlay.stages[vertex.id]))
        graph.add_node(pydot.Node(quoted(vertex.id), **attrs))
    for u, w in arena.edges():
        attrs = {"style": "bold"} if (u, w) in bold else {}
        graph.add_edge(pydot.Edge(quoted(u), quoted(w), **attrs))
    debug(f"DOT: {len(arena)} nodes, {len(bold)} strategy edges, {len(fill)} coloured")
    return graph


def export_dot(arena: Arena, overlay: Overlay | None = None, name: str = "arena") -> str:
    return build_dot(arena, overlay, name).to_string()
