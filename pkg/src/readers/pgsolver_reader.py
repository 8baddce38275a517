"""
PGSolver text format: "parity N;" then one statement per vertex,
"id priority owner succ,succ,... ["name"];". PGSolver priorities follow the
max-parity convention; they are reflected into min-parity as p -> R - p,
R being the largest priority rounded up to even, and R is kept in the
arena metadata.
"""
import re

from src.arena import Arena, Vertex
from src.errors import ParseError
from src.logger import debug
from src.match_strategy import RegexMatch
from src.priority import Priority
from src.readers.base_reader import GameReader

HEADER = re.compile(r"^(parity|start)\s+(\d+)$")
VERTEX = re.compile(r'^(\d+)\s+(\d+)\s+(\S+)\s+([\d,]+)(?:\s+"([^"]*)")?$')


def reflection_bound(priorities) -> int:
    top = max(priorities, default=0)
    return top + top % 2


def _statements(text: str):
    """(line number, statement) pairs, split on ';'."""
    line = 1
    for chunk in text.split(";"):
        stripped = chunk.strip()
        start = line + chunk[: len(chunk) - len(chunk.lstrip())].count("\n")
        line += chunk.count("\n")
        if stripped:
            yield start, " ".join(stripped.split())


class PgSolverReader(GameReader):
    name = "pgsolver"
    match = RegexMatch(r"parity\s+\d+\s*;")

    def read(self, text: str) -> Arena:
        header = None
        start = None
        rows = []
        for line, statement in _statements(text):
            found = HEADER.match(statement)
            if found:
                if found.group(1) == "parity":
                    header = int(found.group(2))
                else:
                    start = found.group(2)
                continue
            row = VERTEX.match(statement)
            if row is None:
                raise ParseError(line, f"cannot parse vertex statement {statement!r}")
            vid, priority, owner, successors, label = row.groups()
            if owner not in ("0", "1"):
                raise ParseError(line, f"owner must be 0 or 1, got {owner}")
            rows.append((vid, int(priority), int(owner), successors.split(","), label))
        if header is None:
            raise ParseError(1, "missing 'parity N;' header")

        bound = reflection_bound(p for _v, p, _o, _s, _l in rows)
        vertices = [Vertex(vid, owner, Priority(0, bound - p)) for vid, p, owner, _s, _l in rows]
        edges = [(vid, w) for vid, _p, _o, successors, _l in rows for w in successors]
        metadata = {"format": "pgsolver", "header": header, "reflection": bound}
        names = {vid: label for vid, _p, _o, _s, label in rows if label is not None}
        if names:
            metadata["names"] = names
        if start is not None:
            metadata["start"] = start
        debug(f"PGSolver: {len(vertices)} vertices, max-parity reflected at {bound}")
        return Arena(vertices, edges, metadata)
