import re
from abc import ABC, abstractmethod


class MatchStrategy(ABC):
    """Content sniffing used to pick a reader for an input file."""

    @abstractmethod
    def matches(self, text: str) -> bool:
        pass


class RegexMatch(MatchStrategy):
    def __init__(self, pattern: str):
        self.pattern = pattern
        self.regex = re.compile(pattern)

    def matches(self, text: str) -> bool:
        return bool(self.regex.match(text.lstrip()))


class PrefixMatch(MatchStrategy):
    def __init__(self, prefix: str):
        self.prefix = prefix

    def matches(self, text: str) -> bool:
        return text.lstrip().startswith(self.prefix)
