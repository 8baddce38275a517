from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.conditions import (
    ExplicitMuller, Infinity, MaxParity, MinParity, OrdinalParity, SingletonLimit, ZielonkaPathSpec, member,
    subsets, to_explicit,
)
from src.errors import AlphabetTooLarge, NotAPath
from src.priority import OMEGA, Priority, priority_set
from src.zielonka import (
    SubsetTable, build_tree, check_chains, check_p0, is_path_of_cofinite, max_parity_p1_witness,
    max_parity_p2_witness, ordinal_p1_witness,
)
from tests.strategies import PROPERTY_SETTINGS


def explicit(alphabet, predicate) -> ExplicitMuller:
    alphabet = priority_set(alphabet)
    return ExplicitMuller(alphabet, frozenset(x for x in subsets(alphabet) if predicate({p.offset for p in x})))


@st.composite
def explicit_conditions(draw: st.DrawFn, max_size: int = 5) -> ExplicitMuller:
    k = draw(st.integers(min_value=1, max_value=max_size))
    alphabet = priority_set(range(k))
    all_sets = subsets(alphabet)
    flags = draw(st.lists(st.booleans(), min_size=len(all_sets), max_size=len(all_sets)))
    return ExplicitMuller(alphabet, frozenset(x for x, flag in zip(all_sets, flags) if flag))


def maximal_oracle(c: ExplicitMuller, label, player):
    inside = [frozenset(x) for r in range(len(label)) for x in combinations(sorted(label), r)]
    owned = [x for x in inside if member(c, x) == player]
    return {x for x in owned if not any(x < y for y in owned)}


class TestBuildTree:
    def test_weak_split_condition_branches(self):
        c = ExplicitMuller(priority_set([0, 1]), frozenset({priority_set([0, 1])}))
        tree = build_tree(c)
        assert tree.root.label == priority_set([0, 1])
        assert tree.root.player == 0
        assert [(n.label, n.player) for n in tree.root.children] == [
            (priority_set([0]), 1), (priority_set([1]), 1),
        ]
        assert not tree.is_path()
        assert not is_path_of_cofinite(tree).holds
        with pytest.raises(NotAPath):
            tree.to_path_spec()

    def test_empty_f1_is_a_single_node(self):
        alphabet = priority_set([0, 1])
        tree = build_tree(ExplicitMuller(alphabet, frozenset(subsets(alphabet))))
        assert list(tree.nodes()) == [tree.root]
        assert tree.to_path_spec() == ZielonkaPathSpec(0, (), False, alphabet)

    def test_worked_path_example(self):
        c = explicit(range(5), lambda x: 0 in x or 1 in x or not x & {2, 3})
        tree = build_tree(c)
        chain = [node.label for node in tree.nodes()]
        assert chain == [priority_set(range(5)), priority_set([2, 3, 4]), priority_set([4])]
        assert is_path_of_cofinite(tree).holds
        spec = tree.to_path_spec()
        assert spec.diffs == (priority_set([0, 1]), priority_set([2, 3]))
        assert spec.root_player == 0
        assert not spec.ends_with_empty

    def test_trailing_empty_set(self):
        # min-parity with the empty inf-set lost by player 0
        tree = build_tree(explicit(range(3), lambda x: bool(x) and min(x) % 2 == 0))
        spec = tree.to_path_spec()
        assert spec.ends_with_empty
        assert [len(d) for d in spec.diffs] == [1, 1, 1]

    @PROPERTY_SETTINGS
    @given(explicit_conditions())
    def test_children_are_maximal(self, c):
        for node in build_tree(c).nodes():
            assert member(c, node.label) == node.player
            expected = maximal_oracle(c, node.label, 1 - node.player)
            assert {child.label for child in node.children} == expected
            for child in node.children:
                assert child.label < node.label
                assert child.player == 1 - node.player

    @PROPERTY_SETTINGS
    @given(explicit_conditions())
    def test_path_spec_describes_the_condition(self, c):
        tree = build_tree(c)
        if not tree.is_path():
            return
        spec = tree.to_path_spec()
        for xs in subsets(c.alphabet):
            assert member(spec, xs) == member(c, xs)

    def test_alphabet_limit(self):
        with pytest.raises(AlphabetTooLarge):
            SubsetTable(ExplicitMuller(priority_set(range(17)), frozenset()))


class TestP0:
    def test_min_parity_has_no_strong_split(self):
        assert check_p0(to_explicit(MinParity(), priority_set(range(6)))).holds

    def test_strong_split(self):
        c = ExplicitMuller(priority_set([0, 1, 2]), frozenset({priority_set([0, 1, 2]), priority_set([0, 2])}))
        verdict = check_p0(c)
        assert not verdict.holds
        assert verdict.witness == (priority_set([0, 1]), priority_set([1, 2]))
        assert verdict.to_json()["witness"] == [[0, 1], [1, 2]]

    def test_weak_split_only(self):
        c = ExplicitMuller(priority_set([0, 1]), frozenset({priority_set([0, 1])}))
        assert check_p0(c).holds

    @PROPERTY_SETTINGS
    @given(explicit_conditions(max_size=4))
    def test_witness_is_a_strong_split(self, c):
        verdict = check_p0(c)
        if verdict.holds:
            return
        x0, x1 = verdict.witness
        sigma = member(c, x0)
        assert member(c, x1) == sigma
        assert x0 & x1
        assert member(c, x0 | x1) == 1 - sigma


class TestChains:
    def test_min_parity_passes(self):
        p1, p2 = check_chains(MinParity())
        assert p1.holds and p2.holds

    def test_max_parity_fails_both(self):
        p1, p2 = check_chains(MaxParity())
        assert not p1.holds and not p2.holds
        assert p1.witness.element(1) == priority_set([1]) | priority_set(range(2, 19))
        assert p2.witness.element(3) == priority_set(range(8))

    def test_ordinal_fails_p1_with_omega(self):
        p1, p2 = check_chains(OrdinalParity(OMEGA.shifted(2)))
        assert not p1.holds
        assert p2.holds
        assert OMEGA in p1.witness.element(1)

    def test_ordinal_up_to_omega_passes(self):
        assert all(v.holds for v in check_chains(OrdinalParity(OMEGA)))

    def test_singleton_limit_fails_p1(self):
        p1, p2 = check_chains(SingletonLimit(priority_set(range(6)), OMEGA))
        assert not p1.holds
        assert p2.holds

    @pytest.mark.parametrize("depth", range(1, 9))
    def test_witnesses_validate_at_every_depth(self, depth):
        assert max_parity_p1_witness(depth).validate(MaxParity())
        assert max_parity_p2_witness(depth).validate(MaxParity())
        assert ordinal_p1_witness(depth).validate(OrdinalParity(OMEGA.shifted(2)))

    def test_witness_does_not_validate_elsewhere(self):
        assert not max_parity_p1_witness().validate(MinParity())

    @pytest.mark.parametrize("condition", [Infinity(), ExplicitMuller(priority_set([0]), frozenset())])
    def test_vacuous(self, condition):
        assert all(v.holds for v in check_chains(condition))


def test_priority_order_of_children():
    c = explicit(range(3), lambda x: len(x) != 1)
    labels = [child.label for child in build_tree(c).root.children]
    assert labels == sorted(labels, key=lambda s: sorted(s))
    assert Priority(0, 0) in labels[0]
