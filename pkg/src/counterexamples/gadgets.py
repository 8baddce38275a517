"""Constructors for the counterexample arenas, paired with their winning conditions."""
from typing import Iterable

from src.conditions import ConditionSpec, ExplicitMuller, member
from src.families import (
    CHAIN_GAME, FLOWER, LADDER, MAX_PARITY_CHAIN, MAX_PARITY_VARIANT, SPLIT_GAME, ChainDescriptor,
    GeneratedArena, expand, family_condition, parse_descriptor,
)
from src.priority import Priority, priority_set


def gen_flower(n: int, variant: str = MAX_PARITY_VARIANT) -> tuple[GeneratedArena, ConditionSpec]:
    g = GeneratedArena(FLOWER, {"variant": variant}, n)
    expand(g)
    return g, family_condition(g)


def gen_chain_game(descriptor: ChainDescriptor | str = MAX_PARITY_CHAIN, n: int = 1,
                   finite_appearance: bool = False) -> tuple[GeneratedArena, ConditionSpec]:
    descriptor = parse_descriptor(descriptor)
    g = GeneratedArena(CHAIN_GAME, {"descriptor": descriptor, "finite_appearance": finite_appearance}, n)
    expand(g)
    return g, descriptor.condition


def gen_split_game(y: Iterable, a, c: ConditionSpec, sigma: int | None = None) -> GeneratedArena:
    """The Y-loop; sigma defaults to the player who wins with inf-set Y."""
    y = priority_set(y)
    if sigma is None:
        sigma = member(c, y)
    g = GeneratedArena(SPLIT_GAME, {"y": y, "a": Priority.of(a), "sigma": sigma, "condition": c}, 1)
    expand(g)
    return g


def gen_union_chain(n: int) -> tuple[GeneratedArena, ConditionSpec]:
    """Y-loop over {0..2n+1}: each X_i = {j <= 2i+1} is lost by player 0 under max-parity, their union is won."""
    g = GeneratedArena(SPLIT_GAME, {"union_chain": True}, n)
    expand(g)
    return g, family_condition(g)


def gen_ladder(n: int, variant: str = MAX_PARITY_VARIANT) -> tuple[GeneratedArena, ConditionSpec]:
    g = GeneratedArena(LADDER, {"variant": variant}, n)
    expand(g)
    return g, family_condition(g)


def strong_split_condition() -> ExplicitMuller:
    """{0,1} and {1,2} lost by player 0, their union {0,1,2} won, as is {0,2}."""
    return ExplicitMuller(priority_set([0, 1, 2]), frozenset({priority_set([0, 1, 2]), priority_set([0, 2])}))


def strong_split_game() -> tuple[GeneratedArena, ExplicitMuller]:
    c = strong_split_condition()
    return gen_split_game([0, 1, 2], 1, c), c
