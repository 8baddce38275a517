#!/usr/bin/env python3
import argparse
import json
import sys

from src.classify import classify
from src.config import DEFAULT_HORIZONS, REFUTATION_BUDGET
from src.counterexamples.demos import DEMOS, run_demo
from src.csv_writer import CSVWriter
from src.dot_export import Overlay, export_dot
from src.errors import CertificateViolated, InternalVerificationError, OmegaGamesError
from src.inputs import load_condition, parse_inputs
from src.json_writer import dumps
from src.logger import log
from src.positionalize.extract import positionalize
from src.positionalize.stages import ALPHA, BETA, priority_stage
from src.reduction import EMBEDDINGS, describe, reduce_to_parity
from src.solvers.muller import ALGORITHMS, check_result, solve_condition
from src.solvers.verify import verify_positional
from src.strategy import PositionalStrategy

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFICATION = 2
EXIT_SURVIVOR = 3


class ArgumentParser(argparse.ArgumentParser):
    """argparse exits with 2 on bad usage; usage errors here share exit code 1 with parse errors."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
        return
    with open(output, "w", encoding="utf-8") as f:
        f.write(text)
    print(f"[✔] Results saved to {output}")


def _region(arg: str | None) -> list[str] | None:
    return None if arg is None else [v for v in arg.split(",") if v]


def cmd_solve(args) -> int:
    inputs = parse_inputs(args.arena, args.condition)
    arena = inputs.arena
    print(f"[→] Solving {len(arena)} vertices with {args.algo}...", file=sys.stderr)
    result = solve_condition(arena, inputs.condition, args.algo)
    check_result(arena, inputs.condition, result)
    emit(dumps(result), args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    inputs = parse_inputs(args.arena, args.condition, args.strategy, args.player)
    arena, strategy = inputs.arena, inputs.strategy
    if not isinstance(strategy, PositionalStrategy):
        raise OmegaGamesError("verify expects a positional strategy")
    region = _region(args.region)
    if region is None:
        region = solve_condition(arena, inputs.condition).region(strategy.player)
    check = verify_positional(arena, inputs.condition, strategy, region)
    emit(dumps(check), args.output)
    return EXIT_OK if check else EXIT_VERIFICATION


def cmd_reduce(args) -> int:
    condition = load_condition(args.condition)
    r = reduce_to_parity(condition, args.embedding)
    print(f"[INFO] f: {describe(r)}", file=sys.stderr)
    emit(dumps(r), args.output)
    return EXIT_OK


def cmd_classify(args) -> int:
    condition = load_condition(args.condition)
    emit(json.dumps(classify(condition), sort_keys=True, indent=2) + "\n", args.output)
    return EXIT_OK


def cmd_positionalize(args) -> int:
    inputs = parse_inputs(args.arena, args.condition, args.strategy, args.player)
    arena = inputs.arena
    region = _region(args.region)
    if region is None:
        region = solve_condition(arena, inputs.condition).region(args.player)
    result = positionalize(arena, inputs.condition, inputs.strategy, region, args.player)
    emit(dumps(result), args.output)
    return EXIT_OK


def cmd_stages(args) -> int:
    inputs = parse_inputs(args.arena)
    table = priority_stage(inputs.arena, args.priority, args.kind)
    writer = CSVWriter()
    headers, rows = writer.stage_rows(table)
    if args.output is None:
        sys.stdout.write(writer.to_text(headers, rows))
    else:
        writer.write(args.output, headers, rows)
        print(f"[✔] Results saved to {args.output}")
    return EXIT_OK


def cmd_demo(args) -> int:
    horizons = tuple(args.horizon) if args.horizon else DEFAULT_HORIZONS
    print(f"[→] Running demo {args.family} (N={args.n}, memory <= {args.memory})...")
    report = run_demo(args.family, n=args.n, memory=args.memory, horizons=horizons, budget=args.budget,
                      seed=args.seed, finite_appearance=args.finite_appearance, progress=args.progress)
    for line in report.lines():
        print(line)
    if report.refutation.survivors:
        print(f"[INFO] {len(report.refutation.survivors)} strategies survive the refutation.")
        return EXIT_SURVIVOR
    if not report.ok:
        print("[INFO] Certificate check failed.")
        return EXIT_VERIFICATION
    print(f"[✔] Demo {args.family} passed.")
    return EXIT_OK


def cmd_export_dot(args) -> int:
    inputs = parse_inputs(args.arena, args.condition, args.strategy, args.player)
    arena = inputs.arena
    result = solve_condition(arena, inputs.condition) if args.solve else None
    strategies = [inputs.strategy] if inputs.strategy is not None else []
    stages = priority_stage(arena, args.stages, args.kind) if args.stages is not None else None
    emit(export_dot(arena, Overlay.of(result, strategies, stages)), args.output)
    return EXIT_OK


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog="omegagames",
                            description="Solve, classify and reduce infinite-duration games on graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=ArgumentParser)

    def command(name: str, handler, help_text: str, arena: bool = True, condition: bool = True):
        p = sub.add_parser(name, help=help_text)
        if arena:
            p.add_argument("--arena", required=True, help="Arena, generated arena or PGSolver file")
            if condition:
                p.add_argument("--condition", help="Condition JSON (default: family condition or min-parity)")
        elif condition:
            p.add_argument("--condition", required=True, help="Condition JSON")
        p.add_argument("-o", "--output", help="Write to this file instead of stdout")
        p.set_defaults(handler=handler)
        return p

    p = command("solve", cmd_solve, "Winning regions and strategies")
    p.add_argument("--algo", choices=ALGORITHMS, default="recursive", help="Parity algorithm")

    for name, handler, help_text in (
            ("verify", cmd_verify, "Check a positional strategy"),
            ("positionalize", cmd_positionalize, "Positional strategy from a finite-memory one"),
    ):
        p = command(name, handler, help_text)
        p.add_argument("--strategy", required=True, help="Strategy JSON")
        p.add_argument("--player", type=int, choices=(0, 1), required=name == "positionalize")
        p.add_argument("--region", help="Comma-separated vertex ids (default: the solved region)")

    p = command("reduce", cmd_reduce, "Reduction of a path condition to min-parity", arena=False)
    p.add_argument("--embedding", choices=EMBEDDINGS, default=EMBEDDINGS[0])

    command("classify", cmd_classify, "P0 / P1 / P2 and path-shape verdicts", arena=False)

    p = command("stages", cmd_stages, "alpha / beta stage table as CSV", condition=False)
    p.add_argument("--priority", required=True, help="Priority n, e.g. 3 or w+1")
    p.add_argument("--kind", choices=(ALPHA, BETA), default=BETA)

    p = sub.add_parser("demo", help="Counterexample demonstration")
    p.add_argument("family", choices=sorted(DEMOS))
    p.add_argument("--n", type=int, default=3, help="Truncation")
    p.add_argument("--memory", type=int, default=1, help="Memory bound of refuted strategies")
    p.add_argument("--horizon", type=int, action="append", help="Certificate horizon (repeatable)")
    p.add_argument("--seed", type=int, help="Seed for sampled refutation (default: OMEGAGAMES_SEED)")
    p.add_argument("--budget", type=int, default=REFUTATION_BUDGET)
    p.add_argument("--finite-appearance", action="store_true")
    p.add_argument("--progress", action="store_true", help="Show progress bars")
    p.set_defaults(handler=cmd_demo)

    p = command("export-dot", cmd_export_dot, "DOT diagram with optional overlays")
    p.add_argument("--strategy", help="Strategy JSON to draw in bold")
    p.add_argument("--player", type=int, choices=(0, 1))
    p.add_argument("--solve", action="store_true", help="Colour W0 / W1")
    p.add_argument("--stages", help="Show stage values for this priority")
    p.add_argument("--kind", choices=(ALPHA, BETA), default=BETA)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (InternalVerificationError, CertificateViolated) as e:
        log(f"Verification failed: {e}")
        print(f"[ERROR] {e}", file=sys.stderr)
        return EXIT_VERIFICATION
    except OmegaGamesError as e:
        log(f"{args.command} failed: {e}")
        print(f"[ERROR] {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
