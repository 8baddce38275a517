import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.arena import Lasso
from src.conditions import (
    ExplicitMuller, Infinity, MaxParity, MinParity, OrdinalParity, SingletonLimit, ZielonkaPathSpec,
    as_path_spec, member, member_cofinite, parse_condition, subsets, to_explicit, to_json, winner_of_lasso,
)
from src.errors import OutOfAlphabet, ParseError, UnsupportedInfinitePath
from src.priority import OMEGA, Priority, priority_set
from tests.strategies import PROPERTY_SETTINGS, make_arena

EXAMPLE_PATH = ZielonkaPathSpec(0, (priority_set([0, 1]), priority_set([2, 3])))


@pytest.mark.parametrize("condition, xs, expected", [
    (MinParity(), [1, 2, 4], 1),
    (MinParity(), [2, 3], 0),
    (MaxParity(), [], 0),
    (MaxParity(), [0, 3], 1),
    (Infinity(), [], 0),
    (Infinity(), [5], 1),
    (OrdinalParity(OMEGA.shifted(2)), [OMEGA, 7], 1),
    (OrdinalParity(OMEGA.shifted(2)), [OMEGA, OMEGA.shifted(1)], 0),
    (EXAMPLE_PATH, [2, 7], 1),
    (EXAMPLE_PATH, [0, 7], 0),
    (EXAMPLE_PATH, [7], 0),
    (SingletonLimit(priority_set([0, 1]), OMEGA), [OMEGA, 1], 1),
    (SingletonLimit(priority_set([0, 1]), OMEGA), [OMEGA], 0),
    (SingletonLimit(priority_set([0, 1]), OMEGA), [0, 1], 0),
])
def test_member(condition, xs, expected):
    assert member(condition, xs) == expected


def test_path_with_empty_end():
    spec = ZielonkaPathSpec(0, (priority_set([0, 1]), priority_set([2, 3])), ends_with_empty=True)
    # Z_2 = omega - {0..3} belongs to player 0, so the empty set goes to player 1
    assert spec.empty_player == 1
    assert member(spec, []) == 1
    assert member(spec, [9]) == 0


def test_explicit_out_of_alphabet():
    c = ExplicitMuller(priority_set([0, 1]), frozenset({priority_set([0, 1])}))
    with pytest.raises(OutOfAlphabet):
        member(c, [2])
    with pytest.raises(OutOfAlphabet):
        member(OrdinalParity(OMEGA), [OMEGA])


def test_member_cofinite():
    assert member_cofinite(MinParity(), [0]) == 1
    assert member_cofinite(MaxParity(), [0, 1, 2]) == 0
    assert member_cofinite(Infinity()) == 1
    assert member_cofinite(EXAMPLE_PATH, [0, 1]) == 1


class TestWinnerOfLasso:
    def test_flower_loop_is_lost_under_max_parity(self):
        arena = make_arena({"center": (0, 0, ["petal3"]), "petal3": (1, 3, ["center"])})
        assert winner_of_lasso(MaxParity(), arena, Lasso((), ("center", "petal3"))) == 1

    def test_infinity_always_lost_on_a_lasso(self, memory_game):
        assert winner_of_lasso(Infinity(), memory_game, Lasso(("a",), ("b", "d", "a"))) == 1

    def test_even_loop(self, even_loop):
        assert winner_of_lasso(MinParity(), even_loop, Lasso((), ("v",))) == 0


class TestPartition:
    @PROPERTY_SETTINGS
    @given(st.sets(st.integers(min_value=0, max_value=5)))
    def test_explicit_restriction_agrees(self, xs):
        alphabet = priority_set(range(6))
        for c in (MinParity(), MaxParity(), EXAMPLE_PATH):
            assert member(to_explicit(c, alphabet), xs) == member(c, xs)

    def test_subsets_count(self):
        assert len(subsets(priority_set(range(4)))) == 16


class TestPathSpecs:
    def test_min_parity_has_no_finite_path(self):
        with pytest.raises(UnsupportedInfinitePath):
            as_path_spec(MinParity())

    def test_infinity_path(self):
        spec = as_path_spec(Infinity())
        assert spec.root_player == 1
        assert spec.diffs == ()
        assert spec.ends_with_empty

    def test_finite_ordinal_path(self):
        spec = as_path_spec(OrdinalParity(Priority(0, 3)))
        for xs in subsets(priority_set(range(3))):
            assert member(spec, xs) == member(OrdinalParity(Priority(0, 3)), xs)

    def test_diffs_must_be_disjoint(self):
        with pytest.raises(ParseError):
            ZielonkaPathSpec(0, (priority_set([0, 1]), priority_set([1, 2])))


class TestJson:
    @pytest.mark.parametrize("condition", [
        Infinity(), MinParity(), MaxParity(), OrdinalParity(OMEGA.shifted(2)), EXAMPLE_PATH,
        ZielonkaPathSpec(1, (priority_set([4]),), True, priority_set(range(6))),
        ExplicitMuller(priority_set([0, 1, 2]), frozenset({priority_set([0, 2]), priority_set([0, 1, 2])})),
        SingletonLimit(priority_set([0, 1, 2]), OMEGA),
    ])
    def test_parse_inverts_to_json(self, condition):
        assert parse_condition(to_json(condition)) == condition

    def test_explicit_blocks_are_sorted(self):
        c = ExplicitMuller(priority_set([0, 1, 2]), frozenset({priority_set([0, 1, 2]), priority_set([0, 2])}))
        assert to_json(c) == {"kind": "explicit", "C": [0, 1, 2], "F0": [[0, 2], [0, 1, 2]]}

    @pytest.mark.parametrize("raw", [{}, {"kind": "rabin"}, {"kind": "explicit"}])
    def test_rejects(self, raw):
        with pytest.raises(ParseError):
            parse_condition(raw)
