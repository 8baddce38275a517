"""
Canonical non-periodic winning plays of the counterexample games, each with
a certificate for its declared inf-set.

Plays run on the infinite arenas; vertex names follow the truncated
expansions so that any finite prefix lives in a large enough truncation.
"""
from itertools import count
from typing import Iterator

from src.families import (
    CHAIN_GAME, FLOWER, LADDER, MAX_PARITY_CHAIN, MAX_PARITY_VARIANT, ORDINAL_VARIANT, SPLIT_GAME,
    ChainDescriptor, GeneratedArena, chain_ring, parse_descriptor, split_params, token,
)
from src.errors import UnknownFamily
from src.priority import OMEGA, Priority, sorted_priorities
from src.schedule import InfSet, ScheduledPlay

Step = tuple[str, Priority]


def flower_schedule(variant: str = MAX_PARITY_VARIANT) -> ScheduledPlay:
    """Centre at every even step; petal 2r+1 once, at step 2r+1."""
    centre = Priority(0, 0) if variant == MAX_PARITY_VARIANT else OMEGA

    def walk() -> Iterator[Step]:
        for r in count():
            yield "center", centre
            yield f"petal{2 * r + 1}", Priority(0, 2 * r + 1)

    def settle(c: Priority) -> int | None:
        return c.offset + 1 if c.is_finite else 0

    def recur(c: Priority, k: int) -> int:
        first = 0 if c == centre else c.offset
        return first + 2 * k - 1

    return ScheduledPlay(f"flower-{variant}", walk, InfSet.finite({centre}), settle, recur,
                         "petal k is visited once, in round k")


def chain_schedule(descriptor: ChainDescriptor | str = MAX_PARITY_CHAIN) -> ScheduledPlay:
    """Round i: pick, gate_i, the least tail element of X_i, sweep, the next element of Y."""
    d = parse_descriptor(descriptor)
    ys = sorted_priorities(d.y)

    def walk() -> Iterator[Step]:
        for i in count(1):
            c = Priority(0, d.tail_start(i))
            y = ys[(i - 1) % len(ys)]
            yield "pick", d.a
            yield f"gate{i}", d.a
            yield f"x{i}_{token(c)}", c
            yield "sweep", d.a
            yield f"y_{token(y)}", y

    def settle(c: Priority) -> int | None:
        i, rest = divmod(c.offset - d.tail_shift, d.tail_scale)
        if c.is_finite and rest == 0 and i >= 1:
            return 5 * (i - 1) + 3
        return 0

    def recur(c: Priority, k: int) -> int:
        j = ys.index(c) if c in ys else 0
        return 5 * (j + (k - 1) * len(ys)) + 5

    return ScheduledPlay(f"chain-{d.name}", walk, InfSet.finite(d.y), settle, recur,
                         "player sigma picks X_i in round i; the opponent answers with its least tail element")


def single_label_chain_schedule(descriptor: ChainDescriptor | str = MAX_PARITY_CHAIN) -> ScheduledPlay:
    """Round i: pick, gate_i answering with its own element, then the ring through the rest of Y."""
    d = parse_descriptor(descriptor)
    ring = chain_ring(d)
    length = 2 + len(ring)

    def walk() -> Iterator[Step]:
        for i in count(1):
            yield "pick", d.a
            yield f"gate{i}", Priority(0, d.tail_start(i))
            for c in ring:
                yield f"y_{token(c)}", c

    def settle(c: Priority) -> int | None:
        i, rest = divmod(c.offset - d.tail_shift, d.tail_scale)
        if c.is_finite and rest == 0 and i >= 1:
            return length * (i - 1) + 2
        return 0

    def recur(c: Priority, k: int) -> int:
        j = 0 if c == d.a else ring.index(c) + 2
        return length * (k - 1) + j + 1

    return ScheduledPlay(f"chain-{d.name}-single-labels", walk, InfSet.finite(d.y), settle, recur,
                         "player sigma picks gate i in round i; each gate is passed once")


def split_schedule(y, a: Priority) -> ScheduledPlay:
    """Player sigma cycles through Y while the opponent always returns through a."""
    ys = sorted_priorities(y)
    a = Priority.of(a)

    def walk() -> Iterator[Step]:
        for r in count():
            c = ys[r % len(ys)]
            yield "top", a
            yield f"up{token(c)}", c
            yield "mid", a
            yield f"down{token(a)}", a

    def recur(c: Priority, k: int) -> int:
        j = ys.index(c) if c in ys else 0
        return 4 * (j + (k - 1) * len(ys)) + 2

    return ScheduledPlay("split", walk, InfSet.finite(ys), lambda c: 0, recur,
                         "sigma alternates over Y; every element of Y recurs")


def union_chain_schedule(a: Priority = Priority(0, 1)) -> ScheduledPlay:
    """
    Y = omega, enumerated along Cantor diagonals so that every natural
    recurs: diagonal d visits 0, 1, ..., d.
    """
    def walk() -> Iterator[Step]:
        for d in count():
            for y in range(d + 1):
                c = Priority(0, y)
                yield "top", a
                yield f"up{token(c)}", c
                yield "mid", a
                yield f"down{token(a)}", a

    def recur(c: Priority, k: int) -> int:
        if c == a:
            return 4 * k
        return 2 * (c.offset + k) * (c.offset + k + 1)

    return ScheduledPlay("union-chain", walk, InfSet.omega_minus(), lambda c: None, recur,
                         "every natural is picked infinitely often")


def ladder_round_start(r: int) -> int:
    return (r - 1) * (r + 2)


def ladder_schedule(variant: str = MAX_PARITY_VARIANT) -> ScheduledPlay:
    """Round r walks the top rail to rung r, takes its branch and returns along the bottom rail."""
    if variant == ORDINAL_VARIANT:
        two, one = OMEGA, OMEGA.shifted(1)
    else:
        two, one = Priority(0, 2), Priority(0, 1)

    def walk() -> Iterator[Step]:
        for r in count(1):
            yield "s", two
            for k in range(1, r + 1):
                yield f"top{k}", one
            yield f"branch{r}", Priority(0, 2 * r + 1)
            for k in range(r, 0, -1):
                yield f"bottom{k}", two

    def settle(c: Priority) -> int | None:
        if c.is_finite and c.offset % 2 == 1 and c.offset >= 3:
            r = (c.offset - 1) // 2
            return ladder_round_start(r) + r + 2
        return 0

    def recur(c: Priority, k: int) -> int:
        return ladder_round_start(k) + (1 if c == two else 2)

    return ScheduledPlay(f"ladder-{variant}", walk, InfSet.finite({one, two}), settle, recur,
                         "each rung is descended once")


def canonical_schedule(g: GeneratedArena) -> ScheduledPlay:
    if g.family == FLOWER:
        return flower_schedule(g.params.get("variant", MAX_PARITY_VARIANT))
    if g.family == CHAIN_GAME:
        if g.params.get("finite_appearance", False):
            return single_label_chain_schedule(g.params.get("descriptor", MAX_PARITY_CHAIN))
        return chain_schedule(g.params.get("descriptor", MAX_PARITY_CHAIN))
    if g.family == SPLIT_GAME:
        if g.params.get("union_chain"):
            return union_chain_schedule()
        params = split_params(g)
        return split_schedule(params["y"], params["a"])
    if g.family == LADDER:
        return ladder_schedule(g.params.get("variant", MAX_PARITY_VARIANT))
    raise UnknownFamily(g.family)
