import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.arena import Lasso
from src.conditions import (
    ExplicitMuller, Infinity, MaxParity, MinParity, OrdinalParity, ZielonkaPathSpec, member, subsets,
    to_explicit,
)
from src.errors import Mismatch, NotAPath, OutOfAlphabet
from src.priority import OMEGA, Priority, priority_set
from src.reduction import (
    AFFINE, DENSE, IDENTITY, Reduction, describe, preimage, reduce_to_parity, verify_reduction,
)
from src.zielonka import build_tree
from tests.strategies import PROPERTY_SETTINGS, make_arena, random_path_condition

A, B, C, D = 0, 1, 2, 3
DIFFS = (priority_set([A, B]), priority_set([C, D]))


def f(r: Reduction, x) -> int:
    return r.apply(x).offset


class TestWorkedReductions:
    def test_without_empty_set(self):
        r = reduce_to_parity(ZielonkaPathSpec(0, DIFFS))
        assert [f(r, x) for x in (A, B, C, D)] == [0, 0, 1, 1]
        assert r.default_target == 2
        assert all(f(r, x) == 2 for x in range(4, 40))
        assert not r.role_swapped
        assert r.to_json() == {"f": [[0, 0], [1, 0], [2, 1], [3, 1]], "default_target": 2,
                               "role_swapped": False, "alpha": 3}

    def test_with_empty_set(self):
        r = reduce_to_parity(ZielonkaPathSpec(0, DIFFS, ends_with_empty=True))
        assert [f(r, x) for x in (A, B, C, D)] == [1, 1, 2, 2]
        assert all(f(r, x) == 2 * x + 3 for x in range(4, 40))
        assert r.role_swapped
        assert r.default_target is None
        assert r.alpha == OMEGA

    def test_single_node_path(self):
        alphabet = priority_set(range(3))
        r = reduce_to_parity(ExplicitMuller(alphabet, frozenset(subsets(alphabet))))
        assert all(f(r, x) == 0 for x in range(3))
        assert not r.role_swapped

    def test_example_one_sample(self):
        c = ZielonkaPathSpec(0, DIFFS)
        r = reduce_to_parity(c)
        report = verify_reduction(r, c, [{C, D, 7}])
        assert report.sets_checked == 1
        assert member(c, [C, D, 7]) == r.winner([C, D, 7]) == 1

    def test_empty_set_follows_the_role_swap(self):
        c = ZielonkaPathSpec(0, DIFFS, ends_with_empty=True)
        r = reduce_to_parity(c)
        assert member(c, []) == 1
        assert r.winner([]) == 1
        verify_reduction(r, c, [set()])


class TestIdentity:
    @pytest.mark.parametrize("condition", [MinParity(), OrdinalParity(OMEGA)])
    def test_min_parity_is_identity(self, condition):
        r = reduce_to_parity(condition)
        assert r is IDENTITY
        assert describe(r) == "identity"
        verify_reduction(r, condition, [[1, 2, 4], [0, 3], [5]])

    def test_max_parity_has_no_path(self):
        with pytest.raises(NotAPath):
            reduce_to_parity(MaxParity())


class TestEmbeddings:
    def test_infinity_is_two_x_plus_one(self):
        r = reduce_to_parity(Infinity())
        assert all(f(r, x) == 2 * x + 1 for x in range(20))
        verify_reduction(r, Infinity(), [[], [0], [3, 7]])

    def test_dense_embedding(self):
        c = ZielonkaPathSpec(0, DIFFS, ends_with_empty=True)
        r = reduce_to_parity(c, DENSE)
        assert [f(r, x) for x in (4, 5, 6)] == [3, 5, 7]
        assert "odd targets from 3" in describe(r)

    def test_limit_priorities_force_the_dense_embedding(self):
        ambient = priority_set([0, 1, OMEGA, OMEGA.shifted(1)])
        spec = ZielonkaPathSpec(0, (priority_set([0]),), ends_with_empty=True, ambient=ambient)
        r = reduce_to_parity(spec, AFFINE)
        assert r.tail_embedding == DENSE
        verify_reduction(r, spec, subsets(ambient))

    def test_out_of_alphabet(self):
        spec = ZielonkaPathSpec(0, (priority_set([0]),), ambient=priority_set([0, 1]))
        with pytest.raises(OutOfAlphabet):
            reduce_to_parity(spec).apply(5)


class TestVerify:
    def test_lasso_samples(self):
        c = ZielonkaPathSpec(0, DIFFS, ends_with_empty=True)
        r = reduce_to_parity(c)
        arena = make_arena({"x": (0, 2, ["y"]), "y": (1, 9, ["x", "y"])})
        report = verify_reduction(r, c, [(arena, Lasso((), ("x", "y"))), (arena, Lasso(("x",), ("y",)))])
        assert report.lassos_checked == 2

    def test_mismatch(self):
        c = ZielonkaPathSpec(0, DIFFS)
        wrong = Reduction({Priority(0, 0): 1}, default_target=2)
        with pytest.raises(Mismatch) as err:
            verify_reduction(wrong, c, [[0]])
        assert err.value.expected == 0

    def test_preimage(self):
        r = reduce_to_parity(ZielonkaPathSpec(0, DIFFS))
        assert preimage(r, 1, range(10)) == priority_set([C, D])
        assert preimage(r, 2, range(6)) == priority_set([4, 5])


@st.composite
def path_conditions(draw: st.DrawFn, max_size: int = 10) -> ExplicitMuller:
    """Explicit conditions built from a random path spec over a finite alphabet."""
    k = draw(st.integers(min_value=1, max_value=max_size))
    order = draw(st.permutations(list(range(k))))
    cuts = sorted(draw(st.sets(st.integers(min_value=1, max_value=k), max_size=4)))
    bounds = [0] + cuts
    diffs = tuple(priority_set(order[lo:hi]) for lo, hi in zip(bounds, bounds[1:]) if hi > lo)
    spec = ZielonkaPathSpec(draw(st.integers(0, 1)), diffs, draw(st.booleans()), priority_set(range(k)))
    return to_explicit(spec, range(k))


class TestRandomPaths:
    @PROPERTY_SETTINGS
    @given(path_conditions(max_size=6))
    def test_reduction_agrees_on_every_subset(self, c):
        assert build_tree(c).is_path()
        r = reduce_to_parity(c)
        report = verify_reduction(r, c, subsets(c.alphabet))
        assert report.sets_checked == 2 ** len(c.alphabet)

    @pytest.mark.slow
    def test_fifty_conditions_up_to_ten_priorities(self):
        rng = np.random.default_rng(7)
        for _ in range(50):
            c = random_path_condition(rng, int(rng.integers(1, 11)))
            samples = [x for x in subsets(c.alphabet) if x]
            verify_reduction(reduce_to_parity(c), c, samples)
