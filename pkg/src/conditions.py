"""
Winning conditions and their evaluation on finite inf-sets.

Every condition splits the powerset of priorities into (F0, F1); member()
says which block a finite set falls in. Inf-sets of lassos are always
finite, and certified schedules may declare a co-finite subset of omega,
which member_cofinite() handles.
"""
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping, Union

from src.arena import Arena, Lasso
from src.config import MAX_EXPLICIT_ALPHABET
from src.errors import AlphabetTooLarge, NotAPath, OutOfAlphabet, ParseError, UnsupportedInfinitePath
from src.priority import OMEGA, Priority, priority_set, sorted_priorities


@dataclass(frozen=True)
class Infinity:
    """Player 0 wins iff no priority occurs infinitely often."""


@dataclass(frozen=True)
class MinParity:
    pass


@dataclass(frozen=True)
class MaxParity:
    pass


@dataclass(frozen=True)
class OrdinalParity:
    """Min-parity over the ordinal `bound` (exclusive)."""
    bound: Priority = OMEGA

    def __post_init__(self):
        object.__setattr__(self, "bound", Priority.of(self.bound))


@dataclass(frozen=True)
class ExplicitMuller:
    alphabet: frozenset[Priority]
    f0: frozenset[frozenset[Priority]]

    def __post_init__(self):
        alphabet = priority_set(self.alphabet)
        f0 = frozenset(priority_set(block) for block in self.f0)
        stray = set().union(*f0) - alphabet if f0 else set()
        if stray:
            raise OutOfAlphabet(stray)
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "f0", f0)


@dataclass(frozen=True)
class ZielonkaPathSpec:
    """
    Path Z_0 > Z_1 > ... > Z_m with Z_{i+1} = Z_i - D_i.

    Node k belongs to root_player when k is even and to the other player
    when k is odd. With ends_with_empty the path closes with the empty set,
    owned by the player opposite to Z_m. `ambient` is Z_0; None means omega.
    """
    root_player: int
    diffs: tuple[frozenset[Priority], ...] = ()
    ends_with_empty: bool = False
    ambient: frozenset[Priority] | None = None

    def __post_init__(self):
        if self.root_player not in (0, 1):
            raise ParseError(None, f"root_player must be 0 or 1, got {self.root_player!r}")
        diffs = tuple(priority_set(d) for d in self.diffs)
        seen: set[Priority] = set()
        for d in diffs:
            if not d:
                raise ParseError(None, "Zielonka path differences must be non-empty")
            if seen & d:
                raise ParseError(None, "Zielonka path differences must be pairwise disjoint")
            seen |= d
        ambient = None if self.ambient is None else priority_set(self.ambient)
        if ambient is not None and not seen <= ambient:
            raise OutOfAlphabet(seen - ambient)
        object.__setattr__(self, "diffs", diffs)
        object.__setattr__(self, "ambient", ambient)

    def node_player(self, k: int) -> int:
        return self.root_player ^ (k % 2)

    @property
    def depth(self) -> int:
        return len(self.diffs)

    @property
    def empty_player(self) -> int:
        """Owner of the empty inf-set."""
        last = self.node_player(self.depth)
        return 1 - last if self.ends_with_empty else last

    def support(self) -> frozenset[Priority]:
        return frozenset().union(*self.diffs) if self.diffs else frozenset()

    def level(self, c: Priority) -> int:
        """Largest i with c in Z_i."""
        for i, d in enumerate(self.diffs):
            if c in d:
                return i
        return self.depth


@dataclass(frozen=True)
class SingletonLimit:
    """F0 = P(Y) + {{e}} + {{}} and F1 = {Z : e in Z and Z meets Y}, with Y = ambient - {e}."""
    y_window: frozenset[Priority]
    e: Priority

    def __post_init__(self):
        object.__setattr__(self, "e", Priority.of(self.e))
        window = priority_set(self.y_window)
        if self.e in window:
            raise ParseError(None, "singleton_limit: e must not belong to Y")
        object.__setattr__(self, "y_window", window)


ConditionSpec = Union[Infinity, MinParity, MaxParity, OrdinalParity, ExplicitMuller, ZielonkaPathSpec, SingletonLimit]


def _check_alphabet(c: ConditionSpec, xs: frozenset[Priority]) -> None:
    if isinstance(c, ExplicitMuller):
        stray = xs - c.alphabet
    elif isinstance(c, OrdinalParity):
        stray = {x for x in xs if x >= c.bound}
    elif isinstance(c, ZielonkaPathSpec) and c.ambient is not None:
        stray = xs - c.ambient
    elif isinstance(c, SingletonLimit):
        stray = xs - c.y_window - {c.e}
    else:
        stray = set()
    if stray:
        raise OutOfAlphabet(stray)


def member(c: ConditionSpec, xs: Iterable) -> int:
    """The player sigma with X in F_sigma."""
    xs = priority_set(xs)
    _check_alphabet(c, xs)
    if isinstance(c, Infinity):
        return 1 if xs else 0
    if isinstance(c, (MinParity, OrdinalParity)):
        return min(xs).parity if xs else 0
    if isinstance(c, MaxParity):
        return max(xs).parity if xs else 0
    if isinstance(c, ExplicitMuller):
        return 0 if xs in c.f0 else 1
    if isinstance(c, ZielonkaPathSpec):
        k = 0
        while k < c.depth and not (xs & c.diffs[k]):
            k += 1
        if not xs and k == c.depth:
            return c.empty_player
        return c.node_player(k)
    if isinstance(c, SingletonLimit):
        return 1 if c.e in xs and xs - {c.e} else 0
    raise TypeError(f"unsupported condition {c!r}")


def member_cofinite(c: ConditionSpec, excluded: Iterable = ()) -> int:
    """The player winning with inf-set omega minus `excluded` (a finite set of naturals)."""
    excluded = priority_set(excluded)
    if isinstance(c, Infinity):
        return 1
    if isinstance(c, (MinParity, OrdinalParity)):
        n = 0
        while Priority(0, n) in excluded:
            n += 1
        return Priority(0, n).parity
    if isinstance(c, MaxParity):
        return 0
    if isinstance(c, ZielonkaPathSpec):
        if c.ambient is not None:
            raise OutOfAlphabet({OMEGA})
        k = 0
        while k < c.depth and c.diffs[k] <= excluded:
            k += 1
        return c.node_player(k)
    if isinstance(c, SingletonLimit):
        return 1 if c.e not in excluded else 0
    if isinstance(c, ExplicitMuller):
        raise OutOfAlphabet({OMEGA})
    raise TypeError(f"unsupported condition {c!r}")


def winner_of_lasso(c: ConditionSpec, arena: Arena, lasso: Lasso) -> int:
    return member(c, lasso.inf_set(arena))


def subsets(alphabet: Iterable[Priority]) -> list[frozenset[Priority]]:
    items = sorted_priorities(alphabet)
    return [frozenset(combo) for r in range(len(items) + 1) for combo in combinations(items, r)]


def to_explicit(c: ConditionSpec, alphabet: Iterable) -> ExplicitMuller:
    """Restrict a condition to a finite alphabet by enumerating every subset."""
    alphabet = priority_set(alphabet)
    if isinstance(c, ExplicitMuller) and alphabet == c.alphabet:
        return c
    if len(alphabet) > MAX_EXPLICIT_ALPHABET:
        raise AlphabetTooLarge(len(alphabet), MAX_EXPLICIT_ALPHABET)
    return ExplicitMuller(alphabet, frozenset(x for x in subsets(alphabet) if member(c, x) == 0))


def as_path_spec(c: ConditionSpec) -> ZielonkaPathSpec:
    """Finite Zielonka path describing c, for the conditions that have one."""
    if isinstance(c, ZielonkaPathSpec):
        return c
    if isinstance(c, Infinity):
        return ZielonkaPathSpec(root_player=1, diffs=(), ends_with_empty=True)
    if isinstance(c, MinParity) or (isinstance(c, OrdinalParity) and c.bound == OMEGA):
        raise UnsupportedInfinitePath("min-parity over omega has an infinite Zielonka path")
    if isinstance(c, OrdinalParity) and c.bound.is_finite:
        k = c.bound.offset
        if k == 0:
            raise NotAPath("ordinal parity over the empty ordinal")
        return ZielonkaPathSpec(
            root_player=0,
            diffs=tuple(frozenset({Priority(0, i)}) for i in range(k - 1)),
            ends_with_empty=(k - 1) % 2 == 1,
            ambient=frozenset(Priority(0, i) for i in range(k)),
        )
    if isinstance(c, ExplicitMuller):
        from src.zielonka import build_tree
        return build_tree(c).to_path_spec()
    raise NotAPath(f"{kind_of(c)} is not described by a Zielonka path of co-finite sets")


# --- JSON ---------------------------------------------------------------------

_KINDS = {
    Infinity: "infinity",
    MinParity: "min_parity",
    MaxParity: "max_parity",
    OrdinalParity: "ordinal_parity",
    ExplicitMuller: "explicit",
    ZielonkaPathSpec: "zielonka_path",
    SingletonLimit: "singleton_limit",
}


def kind_of(c: ConditionSpec) -> str:
    return _KINDS[type(c)]


def _json_set(xs: Iterable[Priority]) -> list:
    return [p.to_json() for p in sorted_priorities(xs)]


def to_json(c: ConditionSpec) -> dict:
    kind = kind_of(c)
    if isinstance(c, OrdinalParity):
        return {"kind": kind, "limit": c.bound.limit, "offset": c.bound.offset}
    if isinstance(c, ExplicitMuller):
        blocks = sorted((sorted_priorities(b) for b in c.f0), key=lambda b: (len(b), b))
        return {"kind": kind, "C": _json_set(c.alphabet), "F0": [[p.to_json() for p in b] for b in blocks]}
    if isinstance(c, ZielonkaPathSpec):
        out = {
            "kind": kind,
            "root_player": c.root_player,
            "diffs": [_json_set(d) for d in c.diffs],
            "ends_with_empty": c.ends_with_empty,
        }
        if c.ambient is not None:
            out["C"] = _json_set(c.ambient)
        return out
    if isinstance(c, SingletonLimit):
        return {"kind": kind, "e": c.e.to_json(), "Y_window": _json_set(c.y_window)}
    return {"kind": kind}


def parse_condition(raw: Mapping) -> ConditionSpec:
    if not isinstance(raw, Mapping) or "kind" not in raw:
        raise ParseError(None, "condition must be an object with a 'kind'")
    kind = raw["kind"]
    try:
        if kind == "infinity":
            return Infinity()
        if kind == "min_parity":
            return MinParity()
        if kind == "max_parity":
            return MaxParity()
        if kind == "ordinal_parity":
            return OrdinalParity(Priority.of({"limit": raw.get("limit", 1), "offset": raw.get("offset", 0)}))
        if kind == "explicit":
            return ExplicitMuller(priority_set(raw["C"]), frozenset(priority_set(b) for b in raw.get("F0", [])))
        if kind == "zielonka_path":
            return ZielonkaPathSpec(
                root_player=raw.get("root_player", 0),
                diffs=tuple(priority_set(d) for d in raw.get("diffs", [])),
                ends_with_empty=bool(raw.get("ends_with_empty", False)),
                ambient=priority_set(raw["C"]) if "C" in raw else None,
            )
        if kind == "singleton_limit":
            return SingletonLimit(priority_set(raw.get("Y_window", [])), Priority.of(raw["e"]))
    except KeyError as missing:
        raise ParseError(None, f"condition {kind!r} is missing field {missing}") from None
    except TypeError as exc:
        raise ParseError(None, f"malformed condition {kind!r}: {exc}") from None
    raise ParseError(None, f"unknown condition kind {kind!r}")
