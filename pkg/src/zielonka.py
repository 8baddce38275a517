"""
Zielonka trees of explicit Muller conditions and the (P0)/(P1)/(P2) checks.

Explicit conditions are tabulated once as a numpy array indexed by subset
bitmask, bit i standing for the i-th smallest priority of the alphabet.
"""
from dataclasses import dataclass, field
from typing import Callable, Iterator

import numpy as np

from src.conditions import (
    ConditionSpec, ExplicitMuller, Infinity, MaxParity, MinParity, OrdinalParity,
    SingletonLimit, ZielonkaPathSpec, member,
)
from src.config import CHAIN_VALIDATION_DEPTH, MAX_EXPLICIT_ALPHABET
from src.errors import AlphabetTooLarge, InternalVerificationError, NotAPath
from src.logger import debug
from src.priority import OMEGA, Priority, format_set, sorted_priorities
from src.schedule import InfSet


@dataclass(frozen=True)
class Verdict:
    property: str
    holds: bool
    witness: object = None
    note: str = ""

    def to_json(self) -> dict:
        out = {"property": self.property, "verdict": "PASS" if self.holds else "FAIL"}
        if self.witness is not None:
            out["witness"] = self.witness.to_json() if hasattr(self.witness, "to_json") else _jsonable(self.witness)
        if self.note:
            out["note"] = self.note
        return out


def _jsonable(value):
    if isinstance(value, Priority):
        return value.to_json()
    if isinstance(value, (set, frozenset)):
        return [p.to_json() for p in sorted_priorities(value)]
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    return value


# --- subset tables ----------------------------------------------------------------

class SubsetTable:
    """Owner of every subset of a finite alphabet, indexed by bitmask."""

    def __init__(self, c: ExplicitMuller):
        if len(c.alphabet) > MAX_EXPLICIT_ALPHABET:
            raise AlphabetTooLarge(len(c.alphabet), MAX_EXPLICIT_ALPHABET)
        self.condition = c
        self.items = sorted_priorities(c.alphabet)
        self.k = len(self.items)
        self.size = 1 << self.k
        self.index = np.arange(self.size, dtype=np.int64)
        owner = np.ones(self.size, dtype=np.int8)
        for block in c.f0:
            owner[self.mask(block)] = 0
        self.owner = owner

    def mask(self, xs) -> int:
        position = {p: i for i, p in enumerate(self.items)}
        out = 0
        for x in xs:
            out |= 1 << position[x]
        return out

    def unmask(self, mask: int) -> frozenset[Priority]:
        return frozenset(p for i, p in enumerate(self.items) if mask >> i & 1)

    def maximal_submasks(self, x: int, player: int) -> list[int]:
        """Maximal proper subsets of x owned by `player`."""
        idx = self.index
        candidate = ((idx & ~x) == 0) & (self.owner == player)
        candidate[x] = False
        above = candidate.copy()
        for b in range(self.k):
            bit = 1 << b
            lower = idx[(idx & bit) == 0]
            above[lower] |= above[lower | bit]
        strictly_above = np.zeros(self.size, dtype=bool)
        for b in range(self.k):
            bit = 1 << b
            lower = idx[(idx & bit) == 0]
            strictly_above[lower] |= above[lower | bit]
        return [int(m) for m in np.flatnonzero(candidate & ~strictly_above)]


# --- trees ------------------------------------------------------------------------

@dataclass(frozen=True)
class ZielonkaNode:
    label: frozenset[Priority]
    player: int
    children: tuple["ZielonkaNode", ...] = ()

    def to_json(self) -> dict:
        return {
            "label": [p.to_json() for p in sorted_priorities(self.label)],
            "player": self.player,
            "children": [child.to_json() for child in self.children],
        }


@dataclass(frozen=True)
class ZielonkaTree:
    alphabet: frozenset[Priority]
    root: ZielonkaNode

    def nodes(self) -> Iterator[ZielonkaNode]:
        stack = [self.root]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))

    def edges(self) -> Iterator[tuple[ZielonkaNode, ZielonkaNode]]:
        for node in self.nodes():
            for child in node.children:
                yield node, child

    def is_path(self) -> bool:
        return all(len(node.children) <= 1 for node in self.nodes())

    def to_path_spec(self) -> ZielonkaPathSpec:
        if not self.is_path():
            raise NotAPath("Zielonka tree branches")
        chain = [self.root]
        while chain[-1].children:
            chain.append(chain[-1].children[0])
        ends_with_empty = len(chain) > 1 and not chain[-1].label
        if ends_with_empty:
            chain.pop()
        diffs = tuple(upper.label - lower.label for upper, lower in zip(chain, chain[1:]))
        return ZielonkaPathSpec(
            root_player=self.root.player,
            diffs=diffs,
            ends_with_empty=ends_with_empty,
            ambient=self.alphabet,
        )

    def to_json(self) -> dict:
        return self.root.to_json()


def build_tree(c: ExplicitMuller) -> ZielonkaTree:
    """Zielonka tree with children ordered lexicographically by label."""
    table = SubsetTable(c)
    memo: dict[int, ZielonkaNode] = {}

    def node(mask: int) -> ZielonkaNode:
        if mask not in memo:
            player = int(table.owner[mask])
            kids = [node(m) for m in table.maximal_submasks(mask, 1 - player)]
            kids.sort(key=lambda n: sorted_priorities(n.label))
            memo[mask] = ZielonkaNode(table.unmask(mask), player, tuple(kids))
        return memo[mask]

    tree = ZielonkaTree(c.alphabet, node(table.size - 1))
    debug(f"Zielonka tree over {format_set(c.alphabet)}: {len(memo)} distinct labels")
    return tree


def is_path_of_cofinite(t: ZielonkaTree | ZielonkaPathSpec) -> Verdict:
    if isinstance(t, ZielonkaPathSpec):
        return Verdict("path_shape", True, note="given as a Zielonka path")
    for node in t.nodes():
        if len(node.children) > 1:
            return Verdict("path_shape", False, witness=node.label,
                           note=f"node {format_set(node.label)} has {len(node.children)} children")
    return Verdict("path_shape", True)


# --- (P0) ---------------------------------------------------------------------------

def check_p0(c: ExplicitMuller) -> Verdict:
    """Scan for a strong split: X0, X1 in F_sigma meeting each other with union in F_{1-sigma}."""
    table = SubsetTable(c)
    for sigma in (0, 1):
        family = np.flatnonzero(table.owner == sigma).astype(np.int64)
        for position, x0 in enumerate(family):
            rest = family[position:]
            split = ((rest & x0) != 0) & (table.owner[rest | x0] != sigma)
            hits = np.flatnonzero(split)
            if hits.size:
                x1 = int(rest[hits[0]])
                witness = (table.unmask(int(x0)), table.unmask(x1))
                return Verdict("P0", False, witness=witness,
                               note=f"strong split in F{sigma}: union {format_set(witness[0] | witness[1])} "
                                    f"lies in F{1 - sigma}")
    return Verdict("P0", True, note="no strong split")


# --- (P1)/(P2) --------------------------------------------------------------------

@dataclass(frozen=True)
class ChainWitness:
    """A chain in F_side whose limit is won by the other player; X_i given on a finite window."""
    direction: str
    side: int
    description: str
    element: Callable[[int], frozenset[Priority]] = field(compare=False)
    limit: InfSet = InfSet()
    depth: int = CHAIN_VALIDATION_DEPTH

    def validate(self, c: ConditionSpec) -> bool:
        previous = None
        for i in range(1, self.depth + 1):
            current = self.element(i)
            if member(c, current) != self.side:
                return False
            if previous is not None:
                ordered = current <= previous if self.direction == "descending" else previous <= current
                if not ordered:
                    return False
            previous = current
        return self.limit.winner(c) == 1 - self.side

    def to_json(self) -> dict:
        return {
            "direction": self.direction,
            "side": self.side,
            "chain": self.description,
            "limit": str(self.limit),
            "first": [p.to_json() for p in sorted_priorities(self.element(1))],
        }


def _finite(lo: int, hi: int) -> frozenset[Priority]:
    return frozenset(Priority(0, n) for n in range(lo, hi + 1))


def max_parity_p1_witness(depth: int = CHAIN_VALIDATION_DEPTH) -> ChainWitness:
    top = 2 * (depth + 1)
    return ChainWitness(
        "descending", 0, "X_i = {1} + {n : n > i}",
        lambda i: frozenset({Priority(0, 1)}) | _finite(i + 1, top),
        InfSet.finite({1}), depth,
    )


def max_parity_p2_witness(depth: int = CHAIN_VALIDATION_DEPTH) -> ChainWitness:
    return ChainWitness(
        "ascending", 1, "X_i = {j : j <= 2i+1}",
        lambda i: _finite(0, 2 * i + 1),
        InfSet.omega_minus(), depth,
    )


def ordinal_p1_witness(depth: int = CHAIN_VALIDATION_DEPTH) -> ChainWitness:
    top = 2 * depth + 2
    return ChainWitness(
        "descending", 1, "X_i = {w} + {n : 2i+1 <= n < w}",
        lambda i: frozenset({OMEGA}) | _finite(2 * i + 1, top),
        InfSet.finite({OMEGA}), depth,
    )


def singleton_limit_p1_witness(c: SingletonLimit, depth: int = CHAIN_VALIDATION_DEPTH) -> ChainWitness | None:
    window = sorted_priorities(c.y_window)
    usable = min(depth, len(window) - 1)
    if usable < 1:
        return None
    return ChainWitness(
        "descending", 1, "X_i = {e} + {y in Y : y > y_i}",
        lambda i: frozenset({c.e}) | frozenset(window[i:]),
        InfSet.finite({c.e}), usable,
    )


def check_chains(c: ConditionSpec) -> tuple[Verdict, Verdict]:
    """Table-driven (P1)/(P2) verdicts; every failure carries a validated witness."""
    if isinstance(c, MaxParity):
        p1, p2 = max_parity_p1_witness(), max_parity_p2_witness()
        return (_failure("P1", c, p1, "F0 not closed under intersections of chains"),
                _failure("P2", c, p2, "F1 not closed under unions of chains"))
    if isinstance(c, OrdinalParity) and c.bound > OMEGA:
        return (_failure("P1", c, ordinal_p1_witness(), "F1 not closed under intersections of chains"),
                Verdict("P2", True, note="min-parity: unions of chains keep their least element"))
    if isinstance(c, SingletonLimit):
        witness = singleton_limit_p1_witness(c)
        p1 = (_failure("P1", c, witness, "F1 not closed under intersections of chains")
              if witness is not None else
              Verdict("P1", False, note="Y window too small to exhibit the chain"))
        return p1, Verdict("P2", True, note="unions of chains stay in their block")
    if isinstance(c, ExplicitMuller):
        note = "chains over a finite alphabet stabilise"
        return Verdict("P1", True, note=note), Verdict("P2", True, note=note)
    if isinstance(c, (Infinity, MinParity, OrdinalParity, ZielonkaPathSpec)):
        note = "closed under unions and non-empty intersections of chains"
        return Verdict("P1", True, note=note), Verdict("P2", True, note=note)
    raise TypeError(f"unsupported condition {c!r}")


def _failure(name: str, c: ConditionSpec, witness: ChainWitness, note: str) -> Verdict:
    if not witness.validate(c):
        raise InternalVerificationError(f"{name} witness {witness.description} fails validation")
    return Verdict(name, False, witness=witness, note=note)
