"""
Certified non-periodic plays.

A ScheduledPlay is a deterministic walk together with a declared inf-set and
a certificate: for each priority outside the declared set, a step after
which it never occurs again; for each priority inside, a clock T(k) by which
it has occurred at least k times. winner_of_scheduled checks the certificate
on a finite horizon only, so the verdict reads "consistent up to T".
"""
from bisect import bisect_left
from dataclasses import dataclass, field, replace
from itertools import islice
from typing import Callable, Iterable, Iterator

from src.conditions import ConditionSpec, member, member_cofinite
from src.errors import CertificateViolated
from src.logger import debug, log
from src.priority import Priority, format_set, priority_set


@dataclass(frozen=True)
class InfSet:
    """A finite set of priorities, or omega minus a finite set when cofinite is true."""
    items: frozenset[Priority] = frozenset()
    cofinite: bool = False

    @classmethod
    def finite(cls, values: Iterable) -> "InfSet":
        return cls(priority_set(values), False)

    @classmethod
    def omega_minus(cls, excluded: Iterable = ()) -> "InfSet":
        return cls(priority_set(excluded), True)

    def __contains__(self, c: Priority) -> bool:
        if self.cofinite:
            return c.is_finite and c not in self.items
        return c in self.items

    def winner(self, condition: ConditionSpec) -> int:
        if self.cofinite:
            return member_cofinite(condition, self.items)
        return member(condition, self.items)

    def __str__(self) -> str:
        if self.cofinite:
            return "omega" if not self.items else f"omega - {format_set(self.items)}"
        return format_set(self.items)


@dataclass(frozen=True)
class ScheduledPlay:
    name: str
    generator: Callable[[], Iterator[tuple[str, Priority]]]
    declared: InfSet
    settle: Callable[[Priority], int | None]
    recur: Callable[[Priority, int], int]
    note: str = ""

    def walk(self, horizon: int) -> list[tuple[str, Priority]]:
        return list(islice(self.generator(), horizon))

    def redeclare(self, declared: InfSet) -> "ScheduledPlay":
        return replace(self, declared=declared)


@dataclass(frozen=True)
class BoundCheck:
    priority: Priority
    kind: str          # "settles" or "recurs"
    bound: int
    occurrences: int

    def describe(self) -> str:
        if self.kind == "settles":
            return f"{self.priority}: last of {self.occurrences} occurrences before step {self.bound}"
        return f"{self.priority}: {self.occurrences} occurrences, recurrence clock checked up to step {self.bound}"


@dataclass
class CertificateReport:
    play: str
    horizon: int
    declared: str
    winner: int
    checks: list[BoundCheck] = field(default_factory=list)

    @property
    def statement(self) -> str:
        return f"declared inf-set {self.declared} consistent up to T={self.horizon}; winner player {self.winner}"

    def to_json(self) -> dict:
        return {
            "play": self.play,
            "horizon": self.horizon,
            "declared": self.declared,
            "winner": self.winner,
            "checks": [check.describe() for check in self.checks],
        }


def winner_of_scheduled(c: ConditionSpec, play: ScheduledPlay, horizon: int) -> tuple[int, CertificateReport]:
    """
    Validate the play's certificate on its first `horizon` steps and evaluate
    the declared inf-set under c.

    :raises CertificateViolated: the prefix contradicts the declared inf-set
    """
    positions: dict[Priority, list[int]] = {}
    for step, (_vertex, priority) in enumerate(play.walk(horizon)):
        positions.setdefault(priority, []).append(step)

    checks: list[BoundCheck] = []
    for priority in sorted(positions):
        if priority in play.declared:
            continue
        bound = play.settle(priority)
        steps = positions[priority]
        if bound is None:
            raise CertificateViolated(steps[0], priority)
        late = [s for s in steps if s >= bound]
        if late:
            raise CertificateViolated(late[0], priority)
        checks.append(BoundCheck(priority, "settles", bound, len(steps)))

    if play.declared.cofinite:
        recurring = sorted(p for p in positions if p in play.declared)
    else:
        recurring = sorted(play.declared.items)
    for priority in recurring:
        steps = positions.get(priority, [])
        k = 1
        last_clock = 0
        while True:
            clock = play.recur(priority, k)
            if clock > horizon:
                break
            if bisect_left(steps, clock) < k:
                raise CertificateViolated(clock, priority)
            last_clock = clock
            k += 1
        checks.append(BoundCheck(priority, "recurs", last_clock, len(steps)))

    winner = play.declared.winner(c)
    report = CertificateReport(play.name, horizon, str(play.declared), winner, checks)
    debug(f"{play.name}: {len(checks)} bounds checked up to {horizon}")
    log(f"Certified schedule {play.name}: {report.statement}")
    return winner, report
