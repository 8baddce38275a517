from src.counterexamples.demos import DEMOS, DemoReport, run_demo
from src.counterexamples.gadgets import (
    gen_chain_game, gen_flower, gen_ladder, gen_split_game, gen_union_chain, strong_split_condition,
    strong_split_game,
)
from src.counterexamples.refute import RefutationReport, refute_finite_memory
from src.counterexamples.schedules import canonical_schedule
