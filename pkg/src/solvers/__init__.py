from src.solvers.attractor import attractor
from src.solvers.brute import solve_brute, solve_muller_reference
from src.solvers.lar import lar_reduce, solve_lar
from src.solvers.muller import check_result, solve_condition, solve_muller
from src.solvers.recursive import solve_parity_recursive
from src.solvers.result import SolveResult
from src.solvers.spm import ProgressMeasure, solve_parity_spm
from src.solvers.verify import StrategyCheck, verify_memory, verify_positional
