from pathlib import Path

import pytest

from src.arena import Arena
from tests.strategies import make_arena

CORPUS = Path(__file__).resolve().parent.parent / "corpus"


@pytest.fixture
def corpus() -> Path:
    return CORPUS


@pytest.fixture
def even_loop() -> Arena:
    return make_arena({"v": (0, 0, ["v"])})


@pytest.fixture
def odd_loop() -> Arena:
    return make_arena({"v": (1, 1, ["v"])})


@pytest.fixture
def memory_game() -> Arena:
    """Player 0 must settle on b at a: a -> c alone closes the odd loop {1, 2}."""
    return make_arena({
        "a": (0, 1, ["b", "c"]),
        "b": (1, 0, ["a", "d"]),
        "c": (0, 2, ["a"]),
        "d": (1, 4, ["a", "d"]),
    })
