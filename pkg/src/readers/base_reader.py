from abc import ABC, abstractmethod
from typing import Any

from src.match_strategy import MatchStrategy


class GameReader(ABC):
    """Reads one input format; `detect` sniffs the content, `read` parses it."""
    name: str = "reader"
    match: MatchStrategy

    def detect(self, text: str) -> bool:
        return self.match.matches(text)

    @abstractmethod
    def read(self, text: str) -> Any:
        pass
