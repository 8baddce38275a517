from src.arena import Arena
from src.errors import OutOfAlphabet
from src.readers.pgsolver_reader import reflection_bound


def dumps(arena: Arena) -> str:
    """
    PGSolver text for an arena with numeric ids. Priorities are reflected
    back into max-parity with the bound recorded at read time, or the
    largest house priority rounded up to even.
    """
    limits = {p for p in arena.priorities() if not p.is_finite}
    if limits:
        raise OutOfAlphabet(limits)
    bound = arena.metadata.get("reflection")
    if bound is None:
        bound = reflection_bound(p.offset for p in arena.priorities())
    names = arena.metadata.get("names", {})
    header = arena.metadata.get("header", len(arena))

    lines = [f"parity {header};"]
    if "start" in arena.metadata:
        lines.append(f"start {arena.metadata['start']};")
    for v in sorted(arena.ids, key=lambda vid: (len(vid), vid)):
        successors = ",".join(sorted(arena.successors(v), key=lambda w: (len(w), w)))
        row = f"{v} {bound - arena.priority(v).offset} {arena.owner(v)} {successors}"
        if v in names:
            row += f' "{names[v]}"'
        lines.append(row + ";")
    return "\n".join(lines) + "\n"


def write(path: str, arena: Arena) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(dumps(arena))
