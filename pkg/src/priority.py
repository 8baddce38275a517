"""
Priorities are ordinals below omega^2, written omega*limit + offset.

Only the offset decides parity, so omega and omega+2 are even while
omega+1 is odd. Plain integers stand for priorities with limit 0.
"""
import re
from dataclasses import dataclass
from typing import Iterable

from src.errors import ParseError

_TOKEN = re.compile(r"^\s*(?:(w|ω)(\d*)\s*(?:\+\s*(\d+))?|(\d+))\s*$")


@dataclass(frozen=True, order=True)
class Priority:
    limit: int = 0
    offset: int = 0

    def __post_init__(self):
        if self.limit < 0 or self.offset < 0:
            raise ValueError(f"priority components must be non-negative: ({self.limit}, {self.offset})")

    @property
    def is_even(self) -> bool:
        return self.offset % 2 == 0

    @property
    def parity(self) -> int:
        """The player favoured by this priority: 0 for even, 1 for odd."""
        return self.offset % 2

    @property
    def is_finite(self) -> bool:
        return self.limit == 0

    def shifted(self, k: int) -> "Priority":
        return Priority(self.limit, self.offset + k)

    @classmethod
    def of(cls, value) -> "Priority":
        """Accepts a Priority, a non-negative int, a {"limit", "offset"} dict or a token such as "w+1"."""
        if isinstance(value, Priority):
            return value
        if isinstance(value, bool):
            raise ParseError(None, f"not a priority: {value!r}")
        if isinstance(value, int):
            if value < 0:
                raise ParseError(None, f"negative priority {value}")
            return cls(0, value)
        if isinstance(value, dict):
            try:
                limit = value.get("limit", 0)
                offset = value["offset"]
            except KeyError:
                raise ParseError(None, f"priority object without offset: {value!r}") from None
            if not isinstance(limit, int) or not isinstance(offset, int) or limit < 0 or offset < 0:
                raise ParseError(None, f"malformed priority object: {value!r}")
            return cls(limit, offset)
        if isinstance(value, str):
            match = _TOKEN.match(value)
            if not match:
                raise ParseError(None, f"malformed priority token {value!r}")
            if match.group(4) is not None:
                return cls(0, int(match.group(4)))
            limit = int(match.group(2)) if match.group(2) else 1
            offset = int(match.group(3)) if match.group(3) else 0
            return cls(limit, offset)
        raise ParseError(None, f"not a priority: {value!r}")

    def to_json(self, compact: bool = True):
        if compact and self.limit == 0:
            return self.offset
        return {"limit": self.limit, "offset": self.offset}

    def token(self) -> str:
        if self.limit == 0:
            return str(self.offset)
        head = "w" if self.limit == 1 else f"w{self.limit}"
        return head if self.offset == 0 else f"{head}+{self.offset}"

    def __str__(self) -> str:
        return self.token()


OMEGA = Priority(1, 0)


def priority_set(values: Iterable) -> frozenset[Priority]:
    return frozenset(Priority.of(v) for v in values)


def sorted_priorities(values: Iterable) -> list[Priority]:
    return sorted(Priority.of(v) for v in values)


def format_set(values: Iterable) -> str:
    return "{" + ", ".join(p.token() for p in sorted_priorities(values)) + "}"
