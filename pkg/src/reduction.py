"""
Muller to min-parity reduction for conditions whose Zielonka tree is a path
of co-finite sets.

The path Z_0 > ... > Z_m is normalised so that the empty inf-set belongs to
parity player 0: when it belongs to player 1 in the source, the roles are
swapped and every level moves up by one. Levels keep their parity relative
to the owner of the node, so min f(X) is even exactly when the normalised
owner of the deepest node containing X is player 0.
"""
from bisect import bisect_left
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from src.arena import Arena, Lasso
from src.conditions import (
    ConditionSpec, MinParity, OrdinalParity, ZielonkaPathSpec, as_path_spec, kind_of, member,
    winner_of_lasso,
)
from src.errors import Mismatch, OutOfAlphabet
from src.logger import debug, log
from src.priority import OMEGA, Priority, format_set, priority_set, sorted_priorities

AFFINE = "affine"
DENSE = "dense"
EMBEDDINGS = (AFFINE, DENSE)


@dataclass(frozen=True)
class Reduction:
    """
    f: priorities -> naturals. `mapping` covers the path differences; the
    tail Z_m either goes to `default_target` (path without the empty set) or
    is embedded injectively into odd targets from `tail_base` upward.
    """
    mapping: Mapping[Priority, int] = field(default_factory=dict)
    default_target: int | None = None
    tail_embedding: str | None = None
    tail_base: int | None = None
    role_swapped: bool = False
    identity: bool = False
    ambient: frozenset[Priority] | None = None

    @property
    def alpha_kind(self) -> str:
        return "finite" if self.default_target is not None else "omega"

    @property
    def alpha(self) -> Priority:
        if self.default_target is None:
            return OMEGA
        return Priority(0, self.default_target + 1)

    def _tail(self) -> list[Priority]:
        return sorted_priorities(self.ambient - set(self.mapping))

    def apply(self, c) -> Priority:
        c = Priority.of(c)
        if self.identity:
            return c
        if self.ambient is not None and c not in self.ambient:
            raise OutOfAlphabet({c})
        if c in self.mapping:
            return Priority(0, self.mapping[c])
        if self.default_target is not None:
            return Priority(0, self.default_target)
        if self.tail_embedding == AFFINE:
            return Priority(0, 2 * c.offset + self.tail_base)
        return Priority(0, self.tail_base + 2 * self._rank(c))

    def _rank(self, c: Priority) -> int:
        if self.ambient is not None:
            return self._tail().index(c)
        # tail is omega minus the finite support
        support = sorted(p.offset for p in self.mapping)
        return c.offset - bisect_left(support, c.offset)

    def winner(self, xs: Iterable) -> int:
        """Source-condition winner of the inf-set xs, read off min f(xs)."""
        xs = priority_set(xs)
        if not xs:
            return int(self.role_swapped)
        return min(self.apply(x) for x in xs).parity ^ int(self.role_swapped)

    def relabel_arena(self, arena: Arena) -> Arena:
        """The min-parity arena: priorities through f, owners swapped with the roles."""
        return arena.relabel(self.apply, swap_owners=self.role_swapped)

    def to_json(self) -> dict:
        out = {
            "f": [[p.to_json(), self.mapping[p]] for p in sorted_priorities(self.mapping)],
            "default_target": self.default_target,
            "role_swapped": self.role_swapped,
            "alpha": self.alpha.to_json(),
        }
        if self.identity:
            out["identity"] = True
        if self.tail_embedding is not None:
            out["tail"] = {"embedding": self.tail_embedding, "base": self.tail_base}
        return out


IDENTITY = Reduction(identity=True)


def _is_identity_condition(c: ConditionSpec) -> bool:
    return isinstance(c, MinParity) or (isinstance(c, OrdinalParity) and c.bound == OMEGA)


def reduce_to_parity(c: ConditionSpec, embedding: str = AFFINE) -> Reduction:
    """
    Case split on the normalised path: infinite (only min-parity over omega,
    returned as the identity), finite without the empty set, and finite
    ending with the empty set.
    """
    if embedding not in EMBEDDINGS:
        raise ValueError(f"unknown embedding {embedding!r}")
    if _is_identity_condition(c):
        return IDENTITY
    spec = as_path_spec(c)
    swapped = spec.empty_player == 1
    shift = spec.root_player ^ int(swapped)
    mapping = {p: level + shift for level, diff in enumerate(spec.diffs) for p in diff}
    base = spec.depth + shift
    if not spec.ends_with_empty:
        r = Reduction(mapping, default_target=base, role_swapped=swapped, ambient=spec.ambient)
    else:
        tail_embedding = embedding
        if embedding == AFFINE and spec.ambient is not None and not all(p.is_finite for p in spec.ambient):
            debug("limit priorities in the tail; using the dense odd embedding")
            tail_embedding = DENSE
        r = Reduction(mapping, tail_embedding=tail_embedding, tail_base=base,
                      role_swapped=swapped, ambient=spec.ambient)
    log(f"Reduced {kind_of(c)} condition: path depth {spec.depth}, "
        f"{'ends with the empty set' if spec.ends_with_empty else 'no empty node'}, "
        f"role swap {swapped}")
    return r


@dataclass
class ReductionReport:
    sets_checked: int = 0
    lassos_checked: int = 0
    tail_checked: int = 0

    def to_json(self) -> dict:
        return {"sets": self.sets_checked, "lassos": self.lassos_checked, "tail": self.tail_checked}


def verify_reduction(r: Reduction, c: ConditionSpec, samples: Sequence) -> ReductionReport:
    """
    Check f against c on finite sets and on (arena, lasso) pairs. Raises
    Mismatch on the first disagreement.
    """
    report = ReductionReport()
    tail_images: dict[int, Priority] = {}
    for sample in samples:
        if isinstance(sample, tuple) and len(sample) == 2 and isinstance(sample[0], Arena):
            arena, lasso = sample
            expected = winner_of_lasso(c, arena, lasso)
            parity = winner_of_lasso(MinParity(), r.relabel_arena(arena), lasso)
            # owners were swapped together with the roles
            actual = parity ^ int(r.role_swapped)
            if expected != actual:
                raise Mismatch(lasso, expected, actual)
            report.lassos_checked += 1
            continue
        xs = priority_set(sample)
        expected, actual = member(c, xs), r.winner(xs)
        if expected != actual:
            raise Mismatch(xs, expected, actual)
        report.sets_checked += 1
        if r.tail_embedding is not None:
            for x in xs - set(r.mapping):
                target = r.apply(x).offset
                if target % 2 == 0 or tail_images.setdefault(target, x) != x:
                    raise Mismatch(xs, expected, actual)
                report.tail_checked += 1
    debug(f"Reduction verified on {report.sets_checked} sets and {report.lassos_checked} lassos; "
          f"{len(tail_images)} tail targets distinct")
    return report


def preimage(r: Reduction, target: int, window: Iterable) -> frozenset[Priority]:
    """f^-1(target) restricted to a finite window of priorities."""
    return frozenset(p for p in priority_set(window) if r.apply(p).offset == target)


def describe(r: Reduction) -> str:
    if r.identity:
        return "identity"
    parts = [f"{p}->{t}" for p, t in sorted(r.mapping.items())]
    if r.default_target is not None:
        parts.append(f"otherwise->{r.default_target}")
    elif r.tail_embedding == AFFINE:
        parts.append(f"otherwise x->2x+{r.tail_base}")
    else:
        parts.append(f"otherwise odd targets from {r.tail_base} in increasing order")
    return ", ".join(parts) + (" (roles swapped)" if r.role_swapped else "")
