import pytest
from hypothesis import given

from src.arena import Arena, Lasso, Vertex, validate_arena
from src.errors import DanglingEdge, DuplicateId, IllegalMove, InvalidLasso, NoSuccessor, ParseError
from src.priority import OMEGA, Priority, format_set, priority_set
from src.product import induced_lasso, product_with_memory
from src.strategy import MemoryStrategy, PositionalStrategy
from tests.strategies import PROPERTY_SETTINGS, arenas, make_arena


class TestPriority:
    def test_ordinal_order(self):
        assert Priority(0, 100) < OMEGA < OMEGA.shifted(1) < Priority(2, 0)

    def test_parity_comes_from_the_offset(self):
        assert OMEGA.parity == 0
        assert OMEGA.shifted(1).parity == 1
        assert Priority(0, 3).parity == 1

    @pytest.mark.parametrize("raw, expected", [
        (3, Priority(0, 3)),
        ("w", OMEGA),
        ("ω+1", Priority(1, 1)),
        ("w2+4", Priority(2, 4)),
        ({"limit": 1, "offset": 2}, Priority(1, 2)),
        ({"offset": 5}, Priority(0, 5)),
    ])
    def test_of(self, raw, expected):
        assert Priority.of(raw) == expected

    @pytest.mark.parametrize("raw", [-1, True, "x+1", {"limit": 1}, 2.5])
    def test_of_rejects(self, raw):
        with pytest.raises(ParseError):
            Priority.of(raw)

    def test_tokens(self):
        assert [p.token() for p in (Priority(0, 7), OMEGA, Priority(1, 3), Priority(2, 0))] == ["7", "w", "w+3", "w2"]
        assert format_set([OMEGA, 2, 0]) == "{0, 2, w}"

    def test_json(self):
        assert Priority(0, 4).to_json() == 4
        assert Priority(0, 4).to_json(compact=False) == {"limit": 0, "offset": 4}
        assert OMEGA.to_json() == {"limit": 1, "offset": 0}


class TestArena:
    def test_smallest_legal_arena(self, even_loop):
        assert even_loop.ids == ("v",)
        assert even_loop.successors("v") == ("v",)

    def test_no_successor(self):
        with pytest.raises(NoSuccessor) as err:
            Arena([Vertex("v", 0, Priority(0, 0))], [])
        assert err.value.vertex == "v"

    def test_dangling_edge(self):
        with pytest.raises(DanglingEdge) as err:
            Arena([Vertex("a", 0, Priority(0, 0))], [("a", "a"), ("a", "b")])
        assert err.value.edge == ("a", "b")

    def test_duplicate_id(self):
        with pytest.raises(DuplicateId):
            Arena([Vertex("a", 0, Priority(0, 0)), Vertex("a", 1, Priority(0, 1))], [("a", "a")])

    def test_multi_edges_collapse(self):
        arena = Arena([Vertex("a", 0, Priority(0, 0))], [("a", "a"), ("a", "a")])
        assert arena.edges() == [("a", "a")]

    def test_validate_arena_owner_two(self):
        raw = {"vertices": [{"id": "v", "owner": 2, "priority": 0}], "edges": [["v", "v"]]}
        with pytest.raises(ParseError):
            validate_arena(raw)

    def test_validate_arena_reserves_the_product_separator(self):
        raw = {"vertices": [{"id": "v@0", "owner": 0, "priority": 0}], "edges": [["v@0", "v@0"]]}
        with pytest.raises(ParseError):
            validate_arena(raw)

    def test_product_ids_never_merge_distinct_pairs(self):
        arena = make_arena({"a": (1, 0, ["a"]), "a@m": (1, 1, ["a@m"])})
        strategy = MemoryStrategy(0, ("0", "m@0"), "0", {("0", "a"): "m@0"})
        with pytest.raises(DuplicateId):
            product_with_memory(arena, strategy)

    def test_validate_arena_keeps_metadata(self):
        raw = {"vertices": [{"id": "v", "owner": 0, "priority": "w"}], "edges": [["v", "v"]],
               "metadata": {"name": "loop"}}
        arena = validate_arena(raw)
        assert arena.priority("v") == OMEGA
        assert arena.metadata == {"name": "loop"}

    def test_dual_flips_owners_and_parity(self, memory_game):
        dual = memory_game.dual()
        for v in memory_game:
            assert dual.owner(v) == 1 - memory_game.owner(v)
            assert dual.priority(v).parity == 1 - memory_game.priority(v).parity
        assert dual.edges() == memory_game.edges()

    def test_to_networkx(self, memory_game):
        graph = memory_game.to_networkx()
        assert set(graph.nodes) == set(memory_game.ids)
        assert graph.nodes["d"]["priority"] == Priority(0, 4)
        assert graph.number_of_edges() == len(memory_game.edges())

    @PROPERTY_SETTINGS
    @given(arenas())
    def test_every_vertex_has_a_successor(self, arena):
        assert all(arena.successors(v) for v in arena)
        assert all(arena.has_edge(u, w) for u, w in arena.edges())


class TestLasso:
    def test_flower_lasso(self):
        arena = make_arena({"center": (0, 0, ["petal1"]), "petal1": (1, 1, ["center"])})
        lasso = induced_lasso(arena, PositionalStrategy(0, {"center": "petal1"}),
                              PositionalStrategy(1, {"petal1": "center"}), "center")
        assert lasso == Lasso((), ("center", "petal1"))
        assert lasso.inf_set(arena) == priority_set([0, 1])

    def test_self_loop(self, even_loop):
        lasso = induced_lasso(even_loop, PositionalStrategy(0, {"v": "v"}), PositionalStrategy(1), "v")
        assert lasso.prefix == ()
        assert lasso.loop == ("v",)

    def test_loop_bound_with_memory(self):
        arena = make_arena({"a": (0, 0, ["b", "c"]), "b": (1, 1, ["a", "c"]), "c": (0, 2, ["a", "b"])})
        flip = {("0", v): "1" for v in "abc"} | {("1", v): "0" for v in "abc"}
        s0 = MemoryStrategy(0, ("0", "1"), "0", flip,
                            {("a", "0"): "b", ("a", "1"): "c", ("c", "0"): "a", ("c", "1"): "b"})
        s1 = MemoryStrategy(1, ("0", "1"), "0", flip, {("b", "0"): "c", ("b", "1"): "a"})
        lasso = induced_lasso(arena, s0, s1, "a").validate(arena)
        assert len(lasso.loop) <= 3 * 2 * 2

    def test_illegal_move(self, even_loop):
        with pytest.raises(IllegalMove):
            induced_lasso(even_loop, PositionalStrategy(0, {"v": "w"}), PositionalStrategy(1), "v")

    def test_empty_loop(self):
        with pytest.raises(InvalidLasso):
            Lasso(("a",), ())

    def test_validate_rejects_non_edges(self, memory_game):
        with pytest.raises(InvalidLasso):
            Lasso((), ("a", "d")).validate(memory_game)


class TestProduct:
    def test_positional_product_is_the_restricted_arena(self, memory_game):
        strategy = PositionalStrategy(0, {"a": "b", "c": "a"})
        product = product_with_memory(memory_game, strategy)
        assert len(product.arena) == len(memory_game)
        assert product.arena.successors("a@0") == ("b@0",)
        assert len(product.arena.successors("b@0")) == 2

    def test_two_state_memory_unrolls_the_owned_vertex(self):
        arena = make_arena({"x": (0, 0, ["y", "z"]), "y": (1, 1, ["x"]), "z": (1, 2, ["x"])})
        strategy = MemoryStrategy(0, ("0", "1"), "0", {("0", "x"): "1", ("1", "x"): "0"},
                                  {("x", "1"): "y", ("x", "0"): "z"})
        product = product_with_memory(arena, strategy, ["x"])
        copies = product.occurrences("x")
        assert sorted(copies) == ["x@0", "x@1"]
        assert all(len(product.arena.successors(pid)) == 1 for pid in copies)
        assert product.project(product.arena.successors("x@1")) == {"y"}
        assert product.project(product.arena.successors("x@0")) == {"z"}
