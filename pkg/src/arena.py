"""
Game graphs, ultimately periodic plays, and arena validation.

Vertex ids are opaque strings. Every ordering used for tie-breaking is the
lexicographic order on ids, so results do not depend on input order.
"""
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping

import networkx as nx

from src.errors import DanglingEdge, DuplicateId, InvalidLasso, NoSuccessor, ParseError
from src.priority import Priority

# joins a vertex id and a memory state in product ids
PRODUCT_SEPARATOR = "@"


@dataclass(frozen=True)
class Vertex:
    id: str
    owner: int
    priority: Priority


class Arena:
    """
    Immutable game graph (V, V0, V1, E, Omega).

    Multi-edges collapse, self-loops are allowed, and every vertex must have a
    successor.
    """

    def __init__(
            self,
            vertices: Iterable[Vertex],
            edges: Iterable[tuple[str, str]],
            metadata: Mapping | None = None
    ):
        table: dict[str, Vertex] = {}
        for vertex in vertices:
            if vertex.id in table:
                raise DuplicateId(vertex.id)
            if vertex.owner not in (0, 1):
                raise ParseError(None, f"vertex {vertex.id!r} has owner {vertex.owner!r}, expected 0 or 1")
            table[vertex.id] = vertex

        succ: dict[str, set[str]] = {v: set() for v in table}
        pred: dict[str, set[str]] = {v: set() for v in table}
        for source, target in edges:
            if source not in table or target not in table:
                raise DanglingEdge(source, target)
            succ[source].add(target)
            pred[target].add(source)

        for v in sorted(table):
            if not succ[v]:
                raise NoSuccessor(v)

        self._vertices = {v: table[v] for v in sorted(table)}
        self._succ = {v: tuple(sorted(ws)) for v, ws in succ.items()}
        self._pred = {v: tuple(sorted(us)) for v, us in pred.items()}
        self.metadata = dict(metadata or {})

    # --- accessors --------------------------------------------------------

    @property
    def ids(self) -> tuple[str, ...]:
        return tuple(self._vertices)

    @property
    def vertices(self) -> tuple[Vertex, ...]:
        return tuple(self._vertices.values())

    def vertex(self, v: str) -> Vertex:
        return self._vertices[v]

    def owner(self, v: str) -> int:
        return self._vertices[v].owner

    def priority(self, v: str) -> Priority:
        return self._vertices[v].priority

    def successors(self, v: str) -> tuple[str, ...]:
        return self._succ[v]

    def predecessors(self, v: str) -> tuple[str, ...]:
        return self._pred[v]

    def edges(self) -> list[tuple[str, str]]:
        return [(u, w) for u in self._vertices for w in self._succ[u]]

    def owned_by(self, player: int) -> list[str]:
        return [v for v, vertex in self._vertices.items() if vertex.owner == player]

    def priorities(self) -> frozenset[Priority]:
        return frozenset(vertex.priority for vertex in self._vertices.values())

    def has_edge(self, u: str, w: str) -> bool:
        return u in self._succ and w in self._succ[u]

    def max_degree(self) -> int:
        return max(len(self._succ[v]) + len(self._pred[v]) for v in self._vertices)

    def __len__(self) -> int:
        return len(self._vertices)

    def __contains__(self, v) -> bool:
        return v in self._vertices

    def __iter__(self):
        return iter(self._vertices)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Arena):
            return NotImplemented
        return self._vertices == other._vertices and self._succ == other._succ

    def __repr__(self) -> str:
        return f"Arena(|V|={len(self)}, |E|={sum(len(ws) for ws in self._succ.values())})"

    # --- derived arenas ----------------------------------------------------

    def restrict(self, ids: Iterable[str]) -> "Arena":
        """Induced subgraph; raises NoSuccessor when the subset is not closed enough to stay total."""
        keep = set(ids)
        return Arena(
            (self._vertices[v] for v in self._vertices if v in keep),
            ((u, w) for u, w in self.edges() if u in keep and w in keep),
            self.metadata,
        )

    def relabel(self, fn: Callable[[Priority], Priority], swap_owners: bool = False) -> "Arena":
        return Arena(
            (Vertex(v.id, 1 - v.owner if swap_owners else v.owner, fn(v.priority)) for v in self.vertices),
            self.edges(),
            self.metadata,
        )

    def dual(self) -> "Arena":
        """Owners flipped and every priority shifted by one: the winner of every play flips."""
        return self.relabel(lambda p: p.shifted(1), swap_owners=True)

    def to_networkx(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        for vertex in self.vertices:
            graph.add_node(vertex.id, owner=vertex.owner, priority=vertex.priority)
        graph.add_edges_from(self.edges())
        return graph


def validate_arena(raw: Mapping) -> Arena:
    """
    Build an Arena from its JSON description.

    :param raw: {"vertices": [{"id", "owner", "priority"}], "edges": [[u, v]], "metadata"?}
    :return: the validated arena
    """
    if not isinstance(raw, Mapping):
        raise ParseError(None, "arena description must be an object")
    raw_vertices = raw.get("vertices")
    raw_edges = raw.get("edges", [])
    if not isinstance(raw_vertices, list) or not isinstance(raw_edges, list):
        raise ParseError(None, "arena needs a 'vertices' list and an 'edges' list")

    vertices = []
    for index, item in enumerate(raw_vertices):
        if not isinstance(item, Mapping) or "id" not in item:
            raise ParseError(None, f"vertex #{index} has no id")
        vid = item["id"]
        if not isinstance(vid, str) or not vid:
            raise ParseError(None, f"vertex #{index} id must be a non-empty string")
        if PRODUCT_SEPARATOR in vid:
            raise ParseError(None, f"vertex id {vid!r} contains the reserved character {PRODUCT_SEPARATOR!r}")
        owner = item.get("owner")
        if owner not in (0, 1) or isinstance(owner, bool):
            raise ParseError(None, f"vertex {vid!r} has owner {owner!r}, expected 0 or 1")
        vertices.append(Vertex(vid, owner, Priority.of(item.get("priority", 0))))

    edges = []
    for index, item in enumerate(raw_edges):
        if not isinstance(item, (list, tuple)) or len(item) != 2:
            raise ParseError(None, f"edge #{index} must be a pair of ids")
        edges.append((str(item[0]), str(item[1])))

    metadata = raw.get("metadata") or {}
    if not isinstance(metadata, Mapping):
        raise ParseError(None, "metadata must be an object")
    return Arena(vertices, edges, metadata)


@dataclass(frozen=True)
class Lasso:
    """An ultimately periodic play: prefix followed by loop repeated forever."""
    prefix: tuple[str, ...]
    loop: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(self.prefix))
        object.__setattr__(self, "loop", tuple(self.loop))
        if not self.loop:
            raise InvalidLasso("lasso loop must be non-empty")

    def validate(self, arena: Arena) -> "Lasso":
        walk = self.prefix + self.loop + (self.loop[0],)
        for v in walk:
            if v not in arena:
                raise InvalidLasso(f"lasso visits unknown vertex {v!r}")
        for u, w in zip(walk, walk[1:]):
            if not arena.has_edge(u, w):
                raise InvalidLasso(f"lasso step {u!r} -> {w!r} is not an edge")
        return self

    def inf_set(self, arena: Arena) -> frozenset[Priority]:
        return frozenset(arena.priority(v) for v in self.loop)

    def rotate(self, k: int = 1) -> "Lasso":
        """Same play with the loop entered k steps later."""
        k %= len(self.loop)
        return Lasso(self.prefix + self.loop[:k], self.loop[k:] + self.loop[:k])

    def unrolled(self, times: int = 2) -> "Lasso":
        return Lasso(self.prefix, self.loop * times)

    def vertices(self) -> list[str]:
        return list(self.prefix + self.loop)

    def to_json(self) -> dict:
        return {"prefix": list(self.prefix), "loop": list(self.loop)}

    def __len__(self) -> int:
        return len(self.prefix) + len(self.loop)
