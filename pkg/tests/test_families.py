from collections import Counter

import pytest

from src.conditions import MaxParity, OrdinalParity, member
from src.counterexamples.gadgets import (
    gen_chain_game, gen_flower, gen_ladder, gen_split_game, gen_union_chain, strong_split_condition,
    strong_split_game,
)
from src.errors import BadDescriptor, BadParams, UnknownFamily
from src.families import (
    CHAIN_GAME, FLOWER, LADDER, MAX_PARITY_CHAIN, ORDINAL_CHAIN, ORDINAL_VARIANT, ChainDescriptor, GeneratedArena,
    expand, family_player, family_start, generated_from_json,
)
from src.priority import OMEGA, Priority, priority_set


def _is_induced_subgraph(small, large) -> bool:
    if not set(small.ids) <= set(large.ids):
        return False
    if any(small.vertex(v) != large.vertex(v) for v in small):
        return False
    induced = {(u, w) for u, w in large.edges() if u in small and w in small}
    return set(small.edges()) == induced


class TestFlower:
    def test_two_petals(self):
        g, c = gen_flower(2)
        arena = expand(g)
        assert c == MaxParity()
        assert arena.owner("center") == 0
        assert arena.priority("center") == Priority(0, 0)
        assert {arena.priority(v).offset for v in ("petal1", "petal3")} == {1, 3}
        assert all(arena.owner(v) == 1 for v in ("petal1", "petal3"))
        assert set(arena.edges()) == {("center", "petal1"), ("center", "petal3"),
                                      ("petal1", "center"), ("petal3", "center")}

    def test_size(self):
        arena = expand(gen_flower(3)[0])
        assert len(arena) == 4
        assert len(arena.edges()) == 6

    def test_ordinal_variant(self):
        g, c = gen_flower(2, ORDINAL_VARIANT)
        assert expand(g).priority("center") == OMEGA
        assert c == OrdinalParity(OMEGA.shifted(1))


class TestLadder:
    def test_one_column(self):
        arena = expand(gen_ladder(1)[0])
        assert [arena.priority(v).offset for v in ("s", "top1", "branch1", "bottom1")] == [2, 1, 3, 2]
        assert set(arena.edges()) == {("s", "top1"), ("top1", "branch1"), ("branch1", "bottom1"), ("bottom1", "s")}

    def test_three_columns(self):
        arena = expand(gen_ladder(3)[0])
        assert {p.offset for p in arena.priorities()} == {1, 2, 3, 5, 7}
        assert arena.max_degree() <= 4
        assert all(len(arena.successors(v)) <= 2 and len(arena.predecessors(v)) <= 2 for v in arena)

    def test_ordinal_priorities(self):
        arena = expand(gen_ladder(2, ORDINAL_VARIANT)[0])
        assert arena.priority("s") == OMEGA
        assert arena.priority("top1") == OMEGA.shifted(1)


class TestChainGame:
    def test_builtin_descriptor(self):
        g, c = gen_chain_game("max_parity", 2)
        arena = expand(g)
        assert c == MaxParity()
        assert family_player(g) == MAX_PARITY_CHAIN.sigma == 1
        assert arena.priority("y_1") == Priority(0, 1)
        assert arena.successors("pick") == ("gate1", "gate2")

    def test_windows_are_lost_by_sigma(self):
        d = MAX_PARITY_CHAIN
        for i in range(1, 5):
            assert member(d.condition, d.window(i, 4)) == 1 - d.sigma
        assert member(d.condition, d.y) == d.sigma

    def test_ordinal_descriptor(self):
        g, c = gen_chain_game("ordinal", 2)
        arena = expand(g)
        assert c == OrdinalParity(OMEGA.shifted(1))
        assert arena.priority("pick") == OMEGA
        assert member(c, ORDINAL_CHAIN.window(1, 2)) == 1

    @pytest.mark.parametrize("descriptor", ["max_parity", "ordinal"])
    @pytest.mark.parametrize("n", [1, 2, 3, 5, 8])
    def test_finite_appearance_labels_each_priority_once(self, descriptor, n):
        arena = expand(gen_chain_game(descriptor, n, finite_appearance=True)[0])
        counts = Counter(arena.priority(v) for v in arena)
        assert max(counts.values()) == 1

    def test_finite_appearance_gates_answer_inside_the_window(self):
        arena = expand(gen_chain_game("max_parity", 2, finite_appearance=True)[0])
        assert set(arena.ids) == {"pick", "gate1", "gate2", "x_4"}
        assert arena.successors("pick") == ("gate1", "gate2")
        assert arena.successors("gate1") == ("gate2", "pick", "x_4")
        assert arena.successors("gate2") == ("pick", "x_4")
        assert arena.priority("gate2") == Priority(0, 3)

    def test_finite_appearance_rejects_y_inside_the_tail(self):
        d = ChainDescriptor("wide", priority_set([1, 3]), Priority(0, 1), 1, MaxParity())
        with pytest.raises(BadDescriptor):
            gen_chain_game(d, 2, finite_appearance=True)

    def test_unknown_descriptor(self):
        with pytest.raises(BadDescriptor):
            gen_chain_game("rabin", 1)


class TestSplitGame:
    def test_strong_split_instance(self):
        g, c = strong_split_game()
        arena = expand(g)
        assert c == strong_split_condition()
        assert family_player(g) == 0
        assert family_start(g) == "top"
        assert arena.successors("top") == ("up0", "up1", "up2")
        assert arena.successors("mid") == ("down0", "down1", "down2")

    def test_degenerate_single_loop(self):
        c = strong_split_condition()
        arena = expand(gen_split_game([1], 1, c))
        assert arena.successors("top") == ("up1",)
        assert member(c, [1]) == 1

    def test_a_outside_y(self):
        with pytest.raises(BadParams):
            gen_split_game([0, 2], 1, strong_split_condition())

    def test_union_chain(self):
        g, c = gen_union_chain(2)
        arena = expand(g)
        assert c == MaxParity()
        assert {arena.priority(v) for v in arena} == priority_set(range(6))


@pytest.mark.parametrize("family, params", [
    (FLOWER, {}),
    (FLOWER, {"variant": ORDINAL_VARIANT}),
    (CHAIN_GAME, {"descriptor": "max_parity"}),
    (CHAIN_GAME, {"descriptor": "ordinal"}),
    (LADDER, {}),
])
def test_truncations_are_monotone(family, params):
    for n in range(1, 6):
        small = expand(GeneratedArena(family, params, n))
        large = expand(GeneratedArena(family, params, n + 1))
        if family == CHAIN_GAME:
            # the tail window grows with N, so compare the N-independent core
            core = {"pick", "sweep"} | {v for v in small if v.startswith("y_") or v.startswith("gate")}
            assert core <= set(large.ids)
            continue
        assert _is_induced_subgraph(small, large)


def test_generators_validate_up_to_64():
    for n in (1, 8, 64):
        for g in (gen_flower(n)[0], gen_ladder(n)[0], gen_union_chain(n)[0]):
            arena = expand(g)
            assert all(arena.successors(v) for v in arena)


def test_bad_truncation_and_family():
    with pytest.raises(BadParams):
        expand(GeneratedArena(FLOWER, {}, 0))
    with pytest.raises(UnknownFamily):
        expand(GeneratedArena("hydra", {}, 1))


def test_generated_json_round_trip():
    g, _ = gen_chain_game("ordinal", 3)
    assert generated_from_json(g.to_json()) == g
    g = strong_split_game()[0]
    assert generated_from_json(g.to_json()) == g
