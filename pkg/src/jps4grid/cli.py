"""Command line entry point: ``jps4grid {solve,bench,gen,verify,report}``.

Exit codes: 0 success, 1 input error, 2 optimality or verification failure.
"""

from __future__ import annotations

import argparse
import logging
import sys

import numpy as np

from .generators import generate_empty, generate_rooms
from .grid import Coord, GridError
from .mapio import load_map, save_map
from .search import ALGORITHMS, SearchProblem
from .harness import (
    MapStore,
    OptimalityViolation,
    emit_csv,
    generate_empty_problems,
    load_scen,
    read_records,
    run_benchmark,
    save_scen,
    speedup_report,
)
from .harness.runner import BenchmarkError, NondeterminismError
from .harness.report import ReportError

EXIT_OK, EXIT_INPUT, EXIT_VIOLATION = 0, 1, 2

log = logging.getLogger("jps4grid")


def _coord(text: str) -> Coord:
    try:
        x, y = (int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected X,Y, got {text!r}") from None
    return Coord(x, y)


def cmd_solve(args) -> int:
    grid = load_map(args.map)
    result = ALGORITHMS[args.algo](SearchProblem(grid, args.start, args.goal))
    m = result.metrics
    length = "unreachable" if result.path is None else str(result.length)
    print(f"length {length}")
    print(f"expanded {m.expanded} pushes {m.open_pushes} pops {m.open_pops} "
          f"max_open {m.max_open} visited {m.visited} time_ns {m.wall_time}")
    if args.print_path and result.path is not None:
        print(" ".join(f"{c.x},{c.y}" for c in result.path))
    return EXIT_OK


def cmd_bench(args) -> int:
    scenarios = load_scen(args.scen)
    algos = [a.strip() for a in args.algos.split(",") if a.strip()]
    records = run_benchmark(
        scenarios, MapStore(args.map_dir), algos, args.reps, workers=args.workers
    )
    emit_csv(records, args.out)
    log.info("wrote %d records to %s", len(records), args.out)
    return EXIT_OK


def cmd_gen(args) -> int:
    if args.kind == "empty":
        save_map(generate_empty(args.width, args.height), args.out)
    elif args.kind == "rooms":
        save_map(generate_rooms(args.width, args.height, args.room_size, args.seed), args.out)
    else:
        scen = generate_empty_problems(
            args.side, args.per_length, args.max_length, args.seed, map_name=args.map_name
        )
        save_scen(scen, args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    grid = load_map(args.map)
    free = grid.free_cells()
    if not free:
        log.error("map has no passable cells")
        return EXIT_INPUT
    rng = np.random.default_rng(args.seed)
    failures = 0
    for trial in range(args.trials):
        a = free[rng.integers(len(free))]
        b = free[rng.integers(len(free))]
        problem = SearchProblem(grid, a, b)
        results = {name: fn(problem) for name, fn in ALGORITHMS.items()}
        lengths = {name: r.length for name, r in results.items()}
        bad = len(set(lengths.values())) > 1
        for name, r in results.items():
            if r.path is not None and not (
                r.path.is_valid_on(grid) and r.path.start == a and r.path.end == b
            ):
                bad = True
                log.error("trial %d: %s returned an invalid path", trial, name)
        if bad:
            failures += 1
            log.error("trial %d %s -> %s: %s", trial, tuple(a), tuple(b), lengths)
    print(f"{args.trials - failures}/{args.trials} trials agree")
    return EXIT_VIOLATION if failures else EXIT_OK


def cmd_report(args) -> int:
    rows = speedup_report(read_records(args.input))
    emit_csv(rows, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="jps4grid", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve one problem on a .map file")
    p.add_argument("--map", required=True)
    p.add_argument("--start", required=True, type=_coord)
    p.add_argument("--goal", required=True, type=_coord)
    p.add_argument("--algo", choices=sorted(ALGORITHMS), default="jps4")
    p.add_argument("--print-path", action="store_true")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("bench", help="run a .scen file and write per-run CSV")
    p.add_argument("--scen", required=True)
    p.add_argument("--map-dir", required=True)
    p.add_argument("--algos", default="astar,jps4")
    p.add_argument("--reps", type=int, default=1)
    p.add_argument("--workers", type=int, default=1,
                   help="parallel processes, one pinned core each (default 1)")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("gen", help="generate maps or empty-map problem sets")
    p.add_argument("kind", choices=["empty", "rooms", "problems"])
    p.add_argument("--width", type=int)
    p.add_argument("--height", type=int)
    p.add_argument("--room-size", type=int, default=16)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--side", type=int)
    p.add_argument("--per-length", type=int, default=100)
    p.add_argument("--max-length", type=int, default=400)
    p.add_argument("--map-name")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="random three-way cross-check on a map")
    p.add_argument("--map", required=True)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("report", help="aggregate per-run CSV into speedup rows")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_report)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    if args.command == "gen":
        need = ("side",) if args.kind == "problems" else ("width", "height")
        missing = [n for n in need if getattr(args, n) is None]
        if missing:
            parser.error(f"gen {args.kind} needs --{missing[0].replace('_', '-')}")
    try:
        return args.func(args)
    except (OptimalityViolation, NondeterminismError) as exc:
        log.error("%s", exc)
        return EXIT_VIOLATION
    except (GridError, BenchmarkError, ReportError, OSError) as exc:
        log.error("%s", exc)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
