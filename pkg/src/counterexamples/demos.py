"""
End-to-end counterexample demonstrations: refute finite memory on a
truncation and certify the canonical infinite-memory play.
"""
from dataclasses import dataclass, field

from src.conditions import ConditionSpec
from src.config import DEFAULT_HORIZONS, REFUTATION_BUDGET
from src.counterexamples.gadgets import (
    gen_chain_game, gen_flower, gen_ladder, gen_union_chain, strong_split_game,
)
from src.counterexamples.refute import RefutationReport, refute_finite_memory
from src.counterexamples.schedules import canonical_schedule
from src.errors import UnknownFamily
from src.families import MAX_PARITY_VARIANT, ORDINAL_VARIANT, GeneratedArena, expand, family_player
from src.logger import log
from src.schedule import CertificateReport, winner_of_scheduled
from src.solvers.lar import solve_lar
from src.solvers.verify import verify_memory


DEMOS = {
    "flower": lambda n, fa: gen_flower(n, MAX_PARITY_VARIANT),
    "flower-ordinal": lambda n, fa: gen_flower(n, ORDINAL_VARIANT),
    "chain": lambda n, fa: gen_chain_game("max_parity", n, fa),
    "chain-ordinal": lambda n, fa: gen_chain_game("ordinal", n, fa),
    "split": lambda n, fa: strong_split_game(),
    "union-chain": lambda n, fa: gen_union_chain(n),
    "ladder": lambda n, fa: gen_ladder(n, MAX_PARITY_VARIANT),
    "ladder-ordinal": lambda n, fa: gen_ladder(n, ORDINAL_VARIANT),
}


@dataclass
class DemoReport:
    name: str
    generated: GeneratedArena
    refutation: RefutationReport
    certificates: list[CertificateReport] = field(default_factory=list)
    expected_winner: int = 0
    extra: list[str] = field(default_factory=list)
    memory_check: bool = True

    @property
    def certified(self) -> bool:
        return all(report.winner == self.expected_winner for report in self.certificates)

    @property
    def ok(self) -> bool:
        return self.refutation.ok and self.certified and self.memory_check

    def lines(self) -> list[str]:
        out = [f"== {self.name}"]
        out += self.refutation.lines()
        for report in self.certificates:
            out.append(f"  schedule {report.play}: {report.statement}")
        out += [f"  {line}" for line in self.extra]
        return out


def build_demo(name: str, n: int, finite_appearance: bool = False) -> tuple[GeneratedArena, ConditionSpec]:
    try:
        return DEMOS[name](n, finite_appearance)
    except KeyError:
        raise UnknownFamily(name) from None


def run_demo(name: str, n: int = 3, memory: int = 1, horizons=DEFAULT_HORIZONS,
             budget: int = REFUTATION_BUDGET, seed: int | None = None, finite_appearance: bool = False,
             progress: bool = False) -> DemoReport:
    g, c = build_demo(name, n, finite_appearance)
    refutation = refute_finite_memory(g, c, memory, budget=budget, seed=seed, progress=progress)
    player = family_player(g)
    report = DemoReport(name, g, refutation, expected_winner=player)

    schedule = canonical_schedule(g)
    for horizon in horizons:
        _winner, certificate = winner_of_scheduled(c, schedule, horizon)
        report.certificates.append(certificate)

    if name == "split":
        arena = expand(g)
        result = solve_lar(arena, c)
        check = verify_memory(arena, c, result.strategy(player), ["top"])
        report.memory_check = check.holds
        report.extra.append(
            f"LAR strategy of player {player} with {len(result.strategy(player).memory_states)} "
            f"memory states: {'wins' if check else 'loses'} from top"
        )
    log(f"Demo {name}: {'ok' if report.ok else 'FAILED'}")
    return report
