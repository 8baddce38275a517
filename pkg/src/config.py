"""Limits, defaults and environment switches shared by the whole package."""
import os

import numpy as np

# Exhaustive subset enumeration (Zielonka trees, split scans, explicit conversion)
MAX_EXPLICIT_ALPHABET = 16
# Latest appearance records grow as |C|! per vertex
MAX_LAR_ALPHABET = 8
# Largest region for the losing-cycle search under non-path explicit Muller conditions
MULLER_REGION_LIMIT = 14
# Chain witnesses are validated on truncated sets X_1 .. X_8
CHAIN_VALIDATION_DEPTH = 8

DEFAULT_HORIZONS = (10 ** 3, 10 ** 4)
REFUTATION_BUDGET = 10_000
EXHAUSTIVE_MEMORY_LIMIT = 2
EXHAUSTIVE_TRUNCATION_LIMIT = 4

SEED_VARIABLE = "OMEGAGAMES_SEED"
DEFAULT_SEED = 1729


def get_seed(default: int | None = None) -> int:
    """Seed for every randomized sweep, taken from OMEGAGAMES_SEED when set."""
    raw = os.environ.get(SEED_VARIABLE)
    if raw is None or not raw.strip():
        return DEFAULT_SEED if default is None else default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{SEED_VARIABLE} must be an integer, got {raw!r}") from None


def make_rng(seed: int | None = None) -> np.random.Generator:
    return np.random.default_rng(get_seed() if seed is None else seed)
