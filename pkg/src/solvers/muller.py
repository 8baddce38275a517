"""
Muller games: positional strategies through the Zielonka-path reduction when
the condition allows it, record-memory strategies through the LAR product
otherwise.
"""
from src.arena import Arena
from src.conditions import (
    ConditionSpec, ExplicitMuller, MaxParity, MinParity, OrdinalParity, kind_of, to_explicit,
)
from src.errors import InternalVerificationError, NotAPath, OutOfAlphabet
from src.logger import log, warn
from src.priority import Priority
from src.reduction import reduce_to_parity
from src.solvers.lar import solve_lar
from src.solvers.recursive import solve_parity_recursive
from src.solvers.result import SolveResult, swap_roles
from src.solvers.spm import solve_parity_spm
from src.solvers.verify import verify_memory, verify_positional

ROUTES = ("auto", "reduction", "lar")
ALGORITHMS = ("recursive", "spm", "both")


def _solve_reduced(arena: Arena, c: ConditionSpec) -> SolveResult:
    r = reduce_to_parity(c)
    result = solve_parity_recursive(r.relabel_arena(arena))
    if r.role_swapped:
        result = swap_roles(result)
    return SolveResult(result.W0, result.W1, result.strat0, result.strat1, "reduction")


def solve_muller(arena: Arena, c: ConditionSpec, route: str = "auto") -> SolveResult:
    if route not in ROUTES:
        raise ValueError(f"unknown route {route!r}")
    if route in ("auto", "reduction"):
        try:
            return _solve_reduced(arena, c)
        except NotAPath:
            if route == "reduction":
                raise
            log(f"{kind_of(c)} condition is not a Zielonka path; falling back to the LAR product")
    explicit = c if isinstance(c, ExplicitMuller) else to_explicit(c, arena.priorities())
    return solve_lar(arena, explicit)


def reflect_max_parity(arena: Arena) -> Arena:
    """Max-parity on a finite arena as min-parity: p -> R - p with R the least even bound."""
    limits = {p for p in arena.priorities() if not p.is_finite}
    if limits:
        raise OutOfAlphabet(limits)
    top = max(p.offset for p in arena.priorities())
    top += top % 2
    return arena.relabel(lambda p: Priority(0, top - p.offset))


def solve_condition(arena: Arena, c: ConditionSpec, algorithm: str = "recursive") -> SolveResult:
    """Solve any supported condition; parity games go to the chosen parity algorithm."""
    if algorithm not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {algorithm!r}")
    if isinstance(c, MaxParity):
        warn("max-parity is solved on the finite arena by reflection into min-parity")
        result = solve_condition(reflect_max_parity(arena), MinParity(), algorithm)
        return result
    if isinstance(c, (MinParity, OrdinalParity)):
        if algorithm == "recursive":
            return solve_parity_recursive(arena)
        spm, _ = solve_parity_spm(arena)
        if algorithm == "both":
            recursive = solve_parity_recursive(arena)
            if (recursive.W0, recursive.W1) != (spm.W0, spm.W1):
                raise InternalVerificationError("recursive and progress-measure regions differ")
        return spm
    return solve_muller(arena, c)


def check_result(arena: Arena, c: ConditionSpec, result: SolveResult) -> None:
    """Raise InternalVerificationError unless the regions partition V and both strategies win."""
    if result.W0 & result.W1 or result.W0 | result.W1 != frozenset(arena.ids):
        raise InternalVerificationError("winning regions do not partition the arena")
    if isinstance(c, MaxParity):
        arena, c = reflect_max_parity(arena), MinParity()
    for player in (0, 1):
        strategy, region = result.strategy(player), result.region(player)
        if result.positional:
            verdict = verify_positional(arena, c, strategy, region)
        else:
            verdict = verify_memory(arena, c, strategy, region)
        if not verdict:
            raise InternalVerificationError(
                f"player {player} strategy from {result.algorithm} loses on {verdict.witness}")
