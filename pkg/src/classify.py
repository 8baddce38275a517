import inspect
import time
from typing import Dict

from src.conditions import (
    ConditionSpec, ExplicitMuller, Infinity, MaxParity, MinParity, OrdinalParity, SingletonLimit,
    ZielonkaPathSpec, kind_of, to_json,
)
from src.errors import OmegaGamesError
from src.logger import log, warn
from src.priority import OMEGA
from src.zielonka import Verdict, build_tree, check_chains, check_p0, is_path_of_cofinite


class ConditionClassifier:
    """
    Runs every registered check_ method on one condition and collects the verdicts.
    """

    def __init__(self, condition: ConditionSpec):
        self.condition = condition
        self._chains = None  # Lazy-loaded

    @property
    def chains(self) -> tuple[Verdict, Verdict]:
        """(P1) and (P2) come from one table lookup"""
        if self._chains is None:
            self._chains = check_chains(self.condition)
        return self._chains

    def classify_all(self) -> Dict[str, object]:
        """
        Calls all methods that start with 'check_' and files their verdicts by property.
        :return: dict: {"p0": {...}, "p1": {...}, ..., "condition": {...}}
        """
        start = time.perf_counter()
        results: Dict[str, object] = {"condition": to_json(self.condition)}

        for name, method in inspect.getmembers(self, inspect.ismethod):
            if name.startswith("check_"):
                key = name[len("check_"):]
                try:
                    results[key] = method().to_json()
                except OmegaGamesError as e:
                    warn(f"{key} check failed on {kind_of(self.condition)}: {e}")
                    results[key] = {"property": key, "verdict": "ERROR", "note": str(e)}

        results["time_s"] = round(time.perf_counter() - start, 3)
        log(f"Classified {kind_of(self.condition)} in {results['time_s']}s")
        return results

    def check_p0(self) -> Verdict:
        c = self.condition
        if isinstance(c, ExplicitMuller):
            return check_p0(c)
        if isinstance(c, SingletonLimit):
            # intersecting F0 sets both lie in P(Y) or both equal {e}; F1 is closed under unions
            return Verdict("P0", True, note="F0 blocks P(Y), {e} and {} admit no strong split")
        return Verdict("P0", True, note="analytic: splits of parity-type conditions are weak")

    def check_p1(self) -> Verdict:
        return self.chains[0]

    def check_p2(self) -> Verdict:
        return self.chains[1]

    def check_path_shape(self) -> Verdict:
        c = self.condition
        if isinstance(c, ExplicitMuller):
            return is_path_of_cofinite(build_tree(c))
        if isinstance(c, ZielonkaPathSpec):
            return is_path_of_cofinite(c)
        if isinstance(c, (Infinity, MinParity)) or (isinstance(c, OrdinalParity) and c.bound <= OMEGA):
            return Verdict("path_shape", True, note="path of co-finite sets")
        if isinstance(c, OrdinalParity):
            return Verdict("path_shape", False, note="ordinal bound above omega: the set below omega is not co-finite")
        if isinstance(c, MaxParity):
            return Verdict("path_shape", False, note="children of the root are the finite sets ending on an odd priority")
        return Verdict("path_shape", False, note="the root has a child for every priority of Y")


def classify(c: ConditionSpec) -> Dict[str, object]:
    return ConditionClassifier(c).classify_all()
