"""
Parameterised arena families and their finite truncations.

The counterexample arenas are infinite; GeneratedArena names a family, its
parameters and a truncation N, and expand() builds the finite window onto
indices <= N. Every family is monotone: the expansion at N is an induced
subgraph of the expansion at N + 1.
"""
from dataclasses import dataclass, field
from typing import Callable, Mapping

from src.arena import Arena, Vertex
from src.conditions import (
    ConditionSpec, ExplicitMuller, MaxParity, OrdinalParity, member, parse_condition, to_json,
)
from src.errors import BadDescriptor, BadParams, OutOfAlphabet, ParseError, UnknownFamily
from src.priority import OMEGA, Priority, format_set, priority_set, sorted_priorities

FLOWER = "flower"
CHAIN_GAME = "chain_game"
SPLIT_GAME = "split_game"
LADDER = "ladder"

MAX_PARITY_VARIANT = "max_parity"
ORDINAL_VARIANT = "ordinal"


@dataclass(frozen=True)
class ChainDescriptor:
    """
    Descending chain X_1 > X_2 > ... with X_i = Y + {n : tail_start(i) <= n},
    tail_start(i) = tail_scale * i + tail_shift. Each X_i lies in F_{1-sigma}
    while the intersection Y lies in F_sigma.
    """
    name: str
    y: frozenset[Priority]
    a: Priority
    sigma: int
    condition: ConditionSpec
    tail_scale: int = 1
    tail_shift: int = 1

    def tail_start(self, i: int) -> int:
        return self.tail_scale * i + self.tail_shift

    def window_bound(self, n: int) -> int:
        """Smallest even number above every tail start up to n."""
        bound = self.tail_start(n) + 1
        return bound + bound % 2

    def window(self, i: int, n: int) -> frozenset[Priority]:
        return self.y | frozenset(Priority(0, c) for c in range(self.tail_start(i), self.window_bound(n) + 1))

    def validate(self, n: int) -> None:
        if self.sigma not in (0, 1):
            raise BadDescriptor(f"sigma must be 0 or 1, got {self.sigma!r}")
        if not self.y or self.a not in self.y:
            raise BadDescriptor("descriptor needs a non-empty Y containing a")
        if self.tail_scale < 1 or self.tail_shift < 0:
            raise BadDescriptor("tail_start must be strictly increasing")
        if member(self.condition, self.y) != self.sigma:
            raise BadDescriptor(f"Y = {format_set(self.y)} is not won by player {self.sigma}")
        for i in range(1, n + 1):
            window = self.window(i, n)
            if member(self.condition, window) != 1 - self.sigma:
                raise BadDescriptor(f"window X_{i} = {format_set(window)} is not won by player {1 - self.sigma}")

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "Y": [p.to_json() for p in sorted_priorities(self.y)],
            "a": self.a.to_json(),
            "sigma": self.sigma,
            "condition": to_json(self.condition),
            "tail": {"scale": self.tail_scale, "shift": self.tail_shift},
        }


MAX_PARITY_CHAIN = ChainDescriptor(
    name="max_parity", y=frozenset({Priority(0, 1)}), a=Priority(0, 1), sigma=1,
    condition=MaxParity(), tail_scale=1, tail_shift=1,
)
ORDINAL_CHAIN = ChainDescriptor(
    name="ordinal", y=frozenset({OMEGA}), a=OMEGA, sigma=0,
    condition=OrdinalParity(OMEGA.shifted(1)), tail_scale=2, tail_shift=1,
)
BUILTIN_CHAINS = {MAX_PARITY_CHAIN.name: MAX_PARITY_CHAIN, ORDINAL_CHAIN.name: ORDINAL_CHAIN}


def parse_descriptor(raw) -> ChainDescriptor:
    if isinstance(raw, ChainDescriptor):
        return raw
    if isinstance(raw, str):
        try:
            return BUILTIN_CHAINS[raw]
        except KeyError:
            raise BadDescriptor(f"unknown built-in chain {raw!r}") from None
    if not isinstance(raw, Mapping):
        raise BadDescriptor("descriptor must be a name or an object")
    try:
        tail = raw.get("tail", {})
        return ChainDescriptor(
            name=raw.get("name", "custom"),
            y=priority_set(raw["Y"]),
            a=Priority.of(raw["a"]),
            sigma=raw["sigma"],
            condition=parse_condition(raw["condition"]),
            tail_scale=tail.get("scale", 1),
            tail_shift=tail.get("shift", 1),
        )
    except KeyError as missing:
        raise BadDescriptor(f"descriptor is missing {missing}") from None


@dataclass(frozen=True)
class GeneratedArena:
    family: str
    params: Mapping = field(default_factory=dict)
    truncation: int = 1

    def to_json(self) -> dict:
        params = {}
        for key, value in sorted(self.params.items()):
            if isinstance(value, ChainDescriptor):
                value = value.name if BUILTIN_CHAINS.get(value.name) == value else value.to_json()
            elif isinstance(value, frozenset):
                value = [p.to_json() for p in sorted_priorities(value)]
            elif isinstance(value, Priority):
                value = value.to_json()
            elif not isinstance(value, (bool, int, str)):
                value = to_json(value)
            params[key] = value
        return {"family": self.family, "params": params, "truncation": self.truncation}


def token(p: Priority) -> str:
    return p.token()


# --- builders -----------------------------------------------------------------

def _flower(g: GeneratedArena) -> tuple[list[Vertex], list[tuple[str, str]]]:
    variant = g.params.get("variant", MAX_PARITY_VARIANT)
    if variant not in (MAX_PARITY_VARIANT, ORDINAL_VARIANT):
        raise BadParams(f"flower variant must be max_parity or ordinal, got {variant!r}")
    centre = Priority(0, 0) if variant == MAX_PARITY_VARIANT else OMEGA
    vertices = [Vertex("center", 0, centre)]
    edges = []
    for n in range(g.truncation):
        petal = f"petal{2 * n + 1}"
        vertices.append(Vertex(petal, 1, Priority(0, 2 * n + 1)))
        edges += [("center", petal), (petal, "center")]
    return vertices, edges


def _chain_game(g: GeneratedArena) -> tuple[list[Vertex], list[tuple[str, str]]]:
    descriptor = parse_descriptor(g.params.get("descriptor", MAX_PARITY_CHAIN.name))
    n = g.truncation
    descriptor.validate(n)
    if g.params.get("finite_appearance", False):
        return _chain_game_single_labels(descriptor, n)
    sigma, a = descriptor.sigma, descriptor.a

    vertices = [Vertex("pick", sigma, a), Vertex("sweep", sigma, a)]
    edges = []
    for c in sorted_priorities(descriptor.y):
        vertices.append(Vertex(f"y_{token(c)}", sigma, c))
        edges += [("sweep", f"y_{token(c)}"), (f"y_{token(c)}", "pick")]

    for i in range(1, n + 1):
        for c in sorted_priorities(descriptor.window(i, n)):
            vertices.append(Vertex(f"x{i}_{token(c)}", 1 - sigma, c))
            edges.append((f"x{i}_{token(c)}", "sweep"))

    for i in range(1, n + 1):
        gate = f"gate{i}"
        vertices.append(Vertex(gate, 1 - sigma, a))
        edges.append(("pick", gate))
        for c in sorted_priorities(descriptor.window(i, n)):
            edges.append((gate, f"x{i}_{token(c)}"))
    return vertices, edges


def chain_ring(descriptor: ChainDescriptor) -> list[Priority]:
    """Y without a, in the order the single-label chain game walks it after each answer."""
    return [c for c in sorted_priorities(descriptor.y) if c != descriptor.a]


def _chain_game_single_labels(descriptor: ChainDescriptor, n: int) -> tuple[list[Vertex], list[tuple[str, str]]]:
    """
    Chain game in which every priority labels exactly one vertex.

    The X-layers collapse onto a single copy of the tail: gate i is the element
    tail_start(i) of X_i and may pass on to any larger tail element, so the
    opponent still answers inside X_i. Answering with an element of Y means
    returning at once. The pick vertex is the a-vertex of Y and the rest of Y
    is a fixed ring walked after every answer.
    """
    sigma, a = descriptor.sigma, descriptor.a
    starts = [descriptor.tail_start(i) for i in range(1, n + 1)]
    tail = range(starts[0], descriptor.window_bound(n) + 1)
    clash = descriptor.y & frozenset(Priority(0, c) for c in tail)
    if clash:
        raise BadDescriptor(f"Y meets the tail in {format_set(clash)}; priorities cannot be kept apart")

    ring = [f"y_{token(c)}" for c in chain_ring(descriptor)]
    entry = ring[0] if ring else "pick"
    vertices = [Vertex("pick", sigma, a)]
    vertices += [Vertex(v, sigma, c) for v, c in zip(ring, chain_ring(descriptor))]
    edges = list(zip(ring, ring[1:] + ["pick"]))

    names = {c: f"gate{i}" for i, c in enumerate(starts, 1)}
    names.update({c: f"x_{c}" for c in tail if c not in names})
    for c in tail:
        vertices.append(Vertex(names[c], 1 - sigma, Priority(0, c)))
        edges.append((names[c], entry))
    for i, start in enumerate(starts, 1):
        edges.append(("pick", f"gate{i}"))
        edges += [(f"gate{i}", names[c]) for c in tail if c > start]
    return vertices, edges


def union_chain_params(n: int) -> dict:
    """Ascending chain X_i = {j <= 2i+1} of max-parity F1 sets whose union omega is won by player 0."""
    return {
        "y": frozenset(Priority(0, j) for j in range(2 * n + 2)),
        "a": Priority(0, 1),
        "sigma": 0,
        "condition": MaxParity(),
    }


def split_params(g: GeneratedArena) -> dict:
    if g.params.get("union_chain"):
        return union_chain_params(g.truncation)
    try:
        y = priority_set(g.params["y"])
        a = Priority.of(g.params["a"])
        sigma = g.params.get("sigma", 0)
        condition = g.params["condition"]
    except KeyError as missing:
        raise BadParams(f"split game needs parameter {missing}") from None
    return {"y": y, "a": a, "sigma": sigma, "condition": condition}


def _split_game(g: GeneratedArena) -> tuple[list[Vertex], list[tuple[str, str]]]:
    params = split_params(g)
    y, a, sigma, condition = params["y"], params["a"], params["sigma"], params["condition"]
    if sigma not in (0, 1):
        raise BadParams(f"sigma must be 0 or 1, got {sigma!r}")
    if a not in y:
        raise BadParams(f"a = {a} must belong to Y = {format_set(y)}")
    if isinstance(condition, ExplicitMuller) and not y <= condition.alphabet:
        raise BadParams(f"Y = {format_set(y)} leaves the alphabet {format_set(condition.alphabet)}")

    vertices = [Vertex("top", sigma, a), Vertex("mid", 1 - sigma, a)]
    edges = []
    for c in sorted_priorities(y):
        up, down = f"up{token(c)}", f"down{token(c)}"
        vertices += [Vertex(up, sigma, c), Vertex(down, 1 - sigma, c)]
        edges += [("top", up), (up, "mid"), ("mid", down), (down, "top")]
    return vertices, edges


def _ladder(g: GeneratedArena) -> tuple[list[Vertex], list[tuple[str, str]]]:
    variant = g.params.get("variant", MAX_PARITY_VARIANT)
    if variant == MAX_PARITY_VARIANT:
        two, one = Priority(0, 2), Priority(0, 1)
    elif variant == ORDINAL_VARIANT:
        two, one = OMEGA, OMEGA.shifted(1)
    else:
        raise BadParams(f"ladder variant must be max_parity or ordinal, got {variant!r}")
    n = g.truncation
    vertices = [Vertex("s", 0, two)]
    edges = [("s", "top1")]
    for k in range(1, n + 1):
        vertices += [
            Vertex(f"top{k}", 0, one),
            Vertex(f"branch{k}", 0, Priority(0, 2 * k + 1)),
            Vertex(f"bottom{k}", 0, two),
        ]
        edges += [(f"top{k}", f"branch{k}"), (f"branch{k}", f"bottom{k}")]
        if k < n:
            edges.append((f"top{k}", f"top{k + 1}"))
        edges.append((f"bottom{k}", f"bottom{k - 1}" if k > 1 else "s"))
    return vertices, edges


BUILDERS: dict[str, Callable] = {
    FLOWER: _flower,
    CHAIN_GAME: _chain_game,
    SPLIT_GAME: _split_game,
    LADDER: _ladder,
}


def expand(g: GeneratedArena) -> Arena:
    try:
        builder = BUILDERS[g.family]
    except KeyError:
        raise UnknownFamily(g.family) from None
    if not isinstance(g.truncation, int) or isinstance(g.truncation, bool) or g.truncation < 1:
        raise BadParams(f"truncation must be a positive integer, got {g.truncation!r}")
    try:
        vertices, edges = builder(g)
    except OutOfAlphabet as exc:
        raise BadParams(str(exc)) from None
    return Arena(vertices, edges, {"name": f"{g.family}-{g.truncation}", "family": g.family})


def family_condition(g: GeneratedArena) -> ConditionSpec:
    if g.family == FLOWER:
        ordinal = g.params.get("variant") == ORDINAL_VARIANT
        return OrdinalParity(OMEGA.shifted(1)) if ordinal else MaxParity()
    if g.family == CHAIN_GAME:
        return parse_descriptor(g.params.get("descriptor", MAX_PARITY_CHAIN.name)).condition
    if g.family == SPLIT_GAME:
        return split_params(g)["condition"]
    if g.family == LADDER:
        ordinal = g.params.get("variant") == ORDINAL_VARIANT
        return OrdinalParity(OMEGA.shifted(2)) if ordinal else MaxParity()
    raise UnknownFamily(g.family)


def family_player(g: GeneratedArena) -> int:
    """The player who wins the infinite game but needs unbounded (or any) memory for it."""
    if g.family in (FLOWER, LADDER):
        return 0
    if g.family == CHAIN_GAME:
        return parse_descriptor(g.params.get("descriptor", MAX_PARITY_CHAIN.name)).sigma
    if g.family == SPLIT_GAME:
        return split_params(g)["sigma"]
    raise UnknownFamily(g.family)


def family_start(g: GeneratedArena) -> str:
    return {FLOWER: "center", CHAIN_GAME: "pick", SPLIT_GAME: "top", LADDER: "s"}[g.family]


def generated_from_json(raw: Mapping) -> GeneratedArena:
    if "family" not in raw:
        raise ParseError(None, "generated arena needs a 'family'")
    params = dict(raw.get("params", {}))
    if "descriptor" in params:
        params["descriptor"] = parse_descriptor(params["descriptor"])
    if "condition" in params and isinstance(params["condition"], Mapping):
        params["condition"] = parse_condition(params["condition"])
    if "y" in params:
        params["y"] = priority_set(params["y"])
    if "a" in params:
        params["a"] = Priority.of(params["a"])
    truncation = raw.get("truncation", 1)
    return GeneratedArena(raw["family"], params, truncation)
