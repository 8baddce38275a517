"""
Exception hierarchy for omega-games.

Library code raises these; only the command line front end catches them and
turns them into exit codes.
"""


class OmegaGamesError(Exception):
    """Base class for every domain error raised by this package."""


# --- arenas -----------------------------------------------------------------

class ArenaError(OmegaGamesError):
    pass


class NoSuccessor(ArenaError):
    def __init__(self, vertex: str):
        self.vertex = vertex
        super().__init__(f"vertex {vertex!r} has no successor")


class DanglingEdge(ArenaError):
    def __init__(self, source: str, target: str):
        self.edge = (source, target)
        super().__init__(f"edge ({source!r}, {target!r}) references an undeclared vertex")


class DuplicateId(ArenaError):
    def __init__(self, vertex: str):
        self.vertex = vertex
        super().__init__(f"vertex id {vertex!r} declared twice")


class InvalidLasso(ArenaError):
    def __init__(self, message: str):
        super().__init__(message)


class IllegalMove(ArenaError):
    def __init__(self, vertex: str, target: str):
        self.vertex = vertex
        self.target = target
        super().__init__(f"move {vertex!r} -> {target!r} is not an edge of the arena")


# --- strategies ---------------------------------------------------------------

class StrategyError(OmegaGamesError):
    pass


class StrategyIncomplete(StrategyError):
    def __init__(self, vertex: str, memory: str | None = None):
        self.vertex = vertex
        self.memory = memory
        where = f"({vertex!r}, {memory!r})" if memory is not None else repr(vertex)
        super().__init__(f"strategy has no move at {where}")


class RegionNotClosed(StrategyError):
    def __init__(self, vertex: str, successor: str):
        self.vertex = vertex
        self.successor = successor
        super().__init__(f"play can leave the region along {vertex!r} -> {successor!r}")


class InputStrategyNotWinning(StrategyError):
    def __init__(self, vertex: str, priority=None):
        self.vertex = vertex
        self.priority = priority
        super().__init__(
            f"strategy is not winning: {vertex!r} lies on a losing cycle"
            + (f" dominated by priority {priority}" if priority is not None else "")
        )


# --- conditions ---------------------------------------------------------------

class ConditionError(OmegaGamesError):
    pass


class OutOfAlphabet(ConditionError):
    def __init__(self, priorities):
        self.priorities = frozenset(priorities)
        shown = ", ".join(sorted(str(p) for p in self.priorities))
        super().__init__(f"priorities outside the alphabet: {{{shown}}}")


class AlphabetTooLarge(ConditionError):
    def __init__(self, size: int, limit: int):
        self.size = size
        self.limit = limit
        super().__init__(f"alphabet of size {size} exceeds the limit {limit}")


class CertificateViolated(ConditionError):
    def __init__(self, step: int, priority):
        self.step = step
        self.priority = priority
        super().__init__(f"certificate violated for priority {priority} at step {step}")


class NotAPath(ConditionError):
    def __init__(self, message: str = "condition is not described by a Zielonka path"):
        super().__init__(message)


class UnsupportedInfinitePath(ConditionError):
    def __init__(self, message: str = "infinite Zielonka path has no finite representation"):
        super().__init__(message)


class Mismatch(ConditionError):
    def __init__(self, sample, expected: int, actual: int):
        self.sample = sample
        self.expected = expected
        self.actual = actual
        super().__init__(f"reduction disagrees on {sample}: condition says {expected}, parity says {actual}")


# --- generated arenas ---------------------------------------------------------

class FamilyError(OmegaGamesError):
    pass


class UnknownFamily(FamilyError):
    def __init__(self, family: str):
        self.family = family
        super().__init__(f"unknown arena family {family!r}")


class BadParams(FamilyError):
    def __init__(self, message: str):
        super().__init__(message)


class BadDescriptor(FamilyError):
    def __init__(self, message: str):
        super().__init__(message)


# --- solving and verification -------------------------------------------------

class TooLargeForMullerCheck(OmegaGamesError):
    def __init__(self, size: int, limit: int):
        self.size = size
        self.limit = limit
        super().__init__(f"region of {size} vertices exceeds the Muller check limit {limit}")


class BudgetExceeded(OmegaGamesError):
    def __init__(self, needed: int, budget: int):
        self.needed = needed
        self.budget = budget
        super().__init__(f"exhaustive enumeration needs {needed} candidates, budget is {budget}")


class InternalVerificationError(OmegaGamesError):
    """A result failed its own self-check. Always a bug."""


# --- input / output -----------------------------------------------------------

class ParseError(OmegaGamesError):
    def __init__(self, line: int | None, message: str):
        self.line = line
        self.message = message
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


class UnknownVertexInOverlay(OmegaGamesError):
    def __init__(self, vertex: str):
        self.vertex = vertex
        super().__init__(f"overlay references unknown vertex {vertex!r}")
