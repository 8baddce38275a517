"""
Refutation of finite-memory strategies on truncated counterexample games.

In games where the opponent never chooses, a strategy with memory m yields
a lasso in which no vertex occurs more than m times, so those lassos are
enumerated directly. Otherwise memory machines are enumerated (or sampled)
and the opponent's best response is a losing cycle of the product.
"""
from collections import Counter
from dataclasses import dataclass, field
from itertools import product as cartesian
from typing import Iterator

import networkx as nx
import numpy as np
from tqdm import tqdm

from src.arena import Arena, Lasso
from src.conditions import ConditionSpec, kind_of, winner_of_lasso
from src.config import EXHAUSTIVE_MEMORY_LIMIT, EXHAUSTIVE_TRUNCATION_LIMIT, REFUTATION_BUDGET, make_rng
from src.errors import BudgetExceeded
from src.families import GeneratedArena, expand, family_condition, family_player, family_start
from src.logger import log, warn
from src.product import product_with_memory
from src.solvers.muller import solve_condition
from src.solvers.verify import losing_cycle
from src.strategy import MemoryStrategy

LASSOS = "lassos"
EXHAUSTIVE = "exhaustive"
SAMPLED = "sampled"
MAX_WITNESSES = 8


@dataclass
class RefutationReport:
    family: str
    truncation: int
    memory_bound: int
    player: int
    mode: str
    candidates: int = 0
    refuted: int = 0
    survivors: list = field(default_factory=list)
    witnesses: dict[str, Lasso] = field(default_factory=dict)
    certificate: str = ""
    note: str = ""

    @property
    def ok(self) -> bool:
        return not self.survivors

    def lines(self) -> list[str]:
        out = [
            f"{self.family} at truncation {self.truncation}, memory <= {self.memory_bound}, "
            f"player {self.player} ({self.mode})",
            f"  {self.refuted}/{self.candidates} candidates refuted, {len(self.survivors)} survivors",
        ]
        for label, lasso in self.witnesses.items():
            out.append(f"  witness {label}: prefix {list(lasso.prefix)} loop {list(lasso.loop)}")
        if self.certificate:
            out.append(f"  {self.certificate}")
        out.append(f"  {self.note}")
        return out

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "truncation": self.truncation,
            "memory_bound": self.memory_bound,
            "player": self.player,
            "mode": self.mode,
            "candidates": self.candidates,
            "refuted": self.refuted,
            "survivors": len(self.survivors),
            "witnesses": {label: lasso.to_json() for label, lasso in self.witnesses.items()},
            "certificate": self.certificate,
            "note": self.note,
        }


def is_solitaire_for(arena: Arena, player: int) -> bool:
    """The opponent of `player` never has a choice."""
    return all(len(arena.successors(v)) == 1 for v in arena.owned_by(1 - player))


def bounded_lassos(arena: Arena, start: str, bound: int) -> Iterator[Lasso]:
    """Every lasso from start in which no vertex occurs more than `bound` times."""
    visits: Counter = Counter()
    walk: list[str] = []
    stack = [(start, False)]
    while stack:
        v, leaving = stack.pop()
        if leaving:
            walk.pop()
            visits[v] -= 1
            continue
        visits[v] += 1
        walk.append(v)
        stack.append((v, True))
        for j, u in enumerate(walk):
            if arena.has_edge(v, u):
                yield Lasso(tuple(walk[:j]), tuple(walk[j:]))
        for w in reversed(arena.successors(v)):
            if visits[w] < bound:
                stack.append((w, False))


def machine_count(arena: Arena, player: int, memory: int) -> int:
    total = memory ** (memory * len(arena))
    for v in arena.owned_by(player):
        total *= len(arena.successors(v)) ** memory
    return total


def _machine(arena: Arena, player: int, states: tuple[str, ...],
             moves: dict, updates: dict) -> MemoryStrategy:
    return MemoryStrategy(player, states, states[0], updates, moves)


def enumerate_machines(arena: Arena, player: int, memory: int) -> Iterator[MemoryStrategy]:
    states = tuple(str(i) for i in range(memory))
    move_keys = [(v, m) for v in arena.owned_by(player) for m in states]
    update_keys = [(m, v) for m in states for v in arena.ids]
    move_choices = [arena.successors(v) for v, _m in move_keys]
    for picks in cartesian(*move_choices):
        moves = dict(zip(move_keys, picks))
        for targets in cartesian(states, repeat=len(update_keys)):
            yield _machine(arena, player, states, moves, dict(zip(update_keys, targets)))


def sample_machines(arena: Arena, player: int, memory: int, budget: int,
                    rng: np.random.Generator) -> Iterator[MemoryStrategy]:
    states = tuple(str(i) for i in range(memory))
    owned = arena.owned_by(player)
    for _ in range(budget):
        moves = {}
        for v in owned:
            successors = arena.successors(v)
            for m in states:
                moves[(v, m)] = successors[int(rng.integers(len(successors)))]
        updates = {(m, v): states[int(rng.integers(memory))] for m in states for v in arena.ids}
        yield _machine(arena, player, states, moves, updates)


def best_response(arena: Arena, c: ConditionSpec, machine: MemoryStrategy, start: str) -> Lasso | None:
    """A play from start consistent with the machine and lost by its owner, if any."""
    product = product_with_memory(arena, machine, [start])
    loop = losing_cycle(product.arena, c, machine.player)
    if loop is None:
        return None
    graph = product.arena.to_networkx()
    path = nx.shortest_path(graph, product.seeds[start], loop.loop[0])
    project = product.projection
    return Lasso(tuple(project[p] for p in path[:-1]), tuple(project[p] for p in loop.loop))


def solved_certificate(arena: Arena, c: ConditionSpec, player: int, start: str) -> str:
    result = solve_condition(arena, c)
    if start in result.region(1 - player):
        return (f"solved truncation: player {1 - player} wins from {start}, so every strategy "
                f"of player {player} loses here whatever its memory")
    return f"solved truncation: player {player} wins from {start}"


def _honesty(g: GeneratedArena, memory: int) -> str:
    return (f"refutes only strategies with memory <= {memory} on the truncation N={g.truncation}; "
            f"the claim for the infinite arena rests on the proof, not on this run")


def refute_finite_memory(g: GeneratedArena, c: ConditionSpec | None = None, memory_bound: int = 1,
                         budget: int = REFUTATION_BUDGET, exhaustive: bool | None = None,
                         seed: int | None = None, progress: bool = False) -> RefutationReport:
    arena = expand(g)
    c = family_condition(g) if c is None else c
    player, start = family_player(g), family_start(g)

    if is_solitaire_for(arena, player):
        report = RefutationReport(g.family, g.truncation, memory_bound, player, LASSOS)
        for lasso in tqdm(bounded_lassos(arena, start, memory_bound), disable=not progress, desc="lassos"):
            report.candidates += 1
            if report.candidates > budget:
                raise BudgetExceeded(report.candidates, budget)
            if winner_of_lasso(c, arena, lasso) == player:
                report.survivors.append(lasso)
                continue
            report.refuted += 1
            label = " ".join(str(p) for p in sorted(lasso.inf_set(arena)))
            if len(report.witnesses) < MAX_WITNESSES:
                report.witnesses.setdefault(f"inf-set {{{label}}}", lasso)
    else:
        total = machine_count(arena, player, memory_bound)
        small = memory_bound <= EXHAUSTIVE_MEMORY_LIMIT and g.truncation <= EXHAUSTIVE_TRUNCATION_LIMIT
        if exhaustive is None:
            exhaustive = small and total <= budget
        if exhaustive:
            if total > budget:
                raise BudgetExceeded(total, budget)
            machines, mode, size = enumerate_machines(arena, player, memory_bound), EXHAUSTIVE, total
        else:
            rng = make_rng(seed)
            machines, mode, size = sample_machines(arena, player, memory_bound, budget, rng), SAMPLED, budget
        report = RefutationReport(g.family, g.truncation, memory_bound, player, mode)
        for machine in tqdm(machines, total=size, disable=not progress, desc="machines"):
            report.candidates += 1
            witness = best_response(arena, c, machine, start)
            if witness is None:
                report.survivors.append(machine)
                continue
            report.refuted += 1
            label = " ".join(str(p) for p in sorted(witness.inf_set(arena)))
            if len(report.witnesses) < MAX_WITNESSES:
                report.witnesses.setdefault(f"inf-set {{{label}}}", witness)

    report.certificate = solved_certificate(arena, c, player, start)
    report.note = _honesty(g, memory_bound)
    if report.survivors:
        warn(f"{len(report.survivors)} strategies of player {player} survive on {g.family} ({kind_of(c)})")
    log(f"Refutation on {g.family}-{g.truncation}: {report.refuted}/{report.candidates} refuted ({report.mode})")
    return report
