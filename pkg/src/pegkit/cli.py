"""Command line front end: level runs, censuses, solving, export, serving.

Every command is deterministic given its inputs.  Errors print a single
``error: ...`` line on stderr and exit nonzero.
"""

import argparse
import csv
import json
import os
import sys

from . import catalog, levels, parity
from .boards import BOARD_IDS, GridParseError, make_board
from .solver import SearchBudgetError, Solver


def _store_root(args):
    root = args.store or os.environ.get("PEGKIT_STORE")
    if not root:
        raise SystemExit("error: no store directory (--store or PEGKIT_STORE)")
    return root


def _open_store(args):
    return levels.LevelStore(_store_root(args), args.board, getattr(args, "cls", "A"))


def cmd_run(args):
    def progress(n, count, dt):
        print(f"level {n}: {count} ({dt:.1f}s)", flush=True)

    manifest = levels.run(
        _store_root(args),
        args.board,
        args.cls,
        max_level=args.max_level,
        partitions=args.partitions,
        memory_budget=args.memory_budget,
        threads=args.threads,
        progress=progress,
    )
    state = "complete" if manifest["complete"] else "truncated"
    print(f"{state} at level {manifest['levels'][-1]['n']}")
    return 0


def cmd_census(args):
    if args.method == "template":
        if args.board != "hex37":
            raise SystemExit("error: template census only works on hex37")
        counts = catalog.sweep_third_turn(board_id=args.board)
        cells = sorted(counts.items())
    else:
        store = _open_store(args)
        exclude = None
        if args.exclude:
            exclude = levels.LevelStore(_store_root(args), args.exclude, args.cls)
        census = catalog.symmetry_census(store, exclude=exclude)
        cells = sorted(census.counts.items())
    types = None
    if args.types:
        types = {int(t) for t in args.types.split(",")}
    out = csv.writer(sys.stdout)
    out.writerow(["type", "class", "count"])
    for (type_id, cls), count in cells:
        if types is not None and type_id not in types:
            continue
        if args.only_class and cls != args.only_class:
            continue
        out.writerow([type_id, cls, count])
    return 0


def cmd_unique(args):
    store = _open_store(args)
    rows = catalog.unique_jump_census(store)
    out = csv.writer(sys.stdout)
    out.writerow(["n", "max_jumps", "count"])
    for row in rows:
        out.writerow([row.n_pegs, row.n_jumps, row.count])
    if args.export:
        puzzles = catalog.export_puzzles(store, rows=rows)
        os.makedirs(args.export, exist_ok=True)
        path = os.path.join(args.export, f"{args.board}-{store.class_name}.json")
        with open(path, "w") as fh:
            json.dump(puzzles, fh, indent=1)
        print(f"exported {len(puzzles)} puzzles to {path}", file=sys.stderr)
    return 0


def _read_position(args, board):
    if args.pegs is not None:
        pos = 0
        for part in args.pegs.split(","):
            i = int(part)
            if not 0 <= i < board.n_holes or pos >> i & 1:
                raise SystemExit(f"error: bad hole index {part}")
            pos |= 1 << i
        return pos
    text = sys.stdin.read() if args.grid == "-" else open(args.grid).read()
    return board.parse(text)


def cmd_solve(args):
    board = make_board(args.board)
    pos = _read_position(args, board)
    cls = parity.named_class(board, pos)
    if args.target:
        target = [int(t) for t in args.target.split(",")]
    elif cls.name in ("EMPTY", "OTHER"):
        print(f"unsolvable (position class {cls.name})")
        return 1
    else:
        mask = parity.store_pattern(board, cls.name)
        target = [i for i in range(board.n_holes) if mask >> i & 1]
    if pos.bit_count() == 1:
        print("already one peg, nothing to solve")
        return 0
    solver = Solver(board, target)
    solution = solver.solve(pos, budget=args.budget)
    if solution is None:
        print(f"unsolvable (position class {cls.name})")
        return 1
    for f, o, t in solution.jumps:
        print(f"{board.holes[f]} over {board.holes[o]} -> {board.holes[t]}")
    print(f"final peg at {board.holes[solution.final_hole]}")
    return 0


def cmd_serve(args):
    import uvicorn

    from .service import create_app

    app = create_app(
        store_root=args.store or os.environ.get("PEGKIT_STORE"),
        puzzle_dir=args.puzzles,
        oracle_budget=args.budget,
    )
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def cmd_boards(args):
    if args.json:
        json.dump([make_board(b).descriptor() for b in BOARD_IDS], sys.stdout, indent=1)
        print()
        return 0
    for board_id in BOARD_IDS:
        board = make_board(board_id)
        print(f"{board_id}: {board.n_holes} holes, {board.n_jumps} jumps, "
              f"symmetry group of order {board.group_order}")
    return 0


def cmd_fixtures(args):
    # Recorded request/response pairs so the player's tests run offline.
    try:
        from fastapi.testclient import TestClient
    except ImportError:
        raise SystemExit("error: fixtures need httpx (pip install httpx)")

    from .service import create_app

    client = TestClient(create_app(
        store_root=args.store or os.environ.get("PEGKIT_STORE"),
        puzzle_dir=args.puzzles,
    ))
    board = make_board("english33")
    start = [i for i in range(board.n_holes) if i != board.centre]
    calls = [
        ("GET", "/boards", None),
        ("GET", "/puzzles", None),
        ("POST", "/analyze", {"board": "english33", "pegs": start}),
        ("POST", "/analyze", {"board": "english33", "pegs": [board.centre]}),
        ("POST", "/analyze", {"board": "english33", "pegs": [14, 15, 17]}),
        ("POST", "/analyze", {"board": "hex37", "pegs": [0, 1, 2]}),
        ("POST", "/hint", {"board": "english33", "pegs": start}),
        ("POST", "/hint", {"board": "english33", "pegs": [0, 1]}),
        ("POST", "/hint", {"board": "english33", "pegs": [0, 32]}),
    ]
    recorded = []
    for method, path, body in calls:
        r = client.get(path) if method == "GET" else client.post(path, json=body)
        recorded.append({
            "method": method,
            "path": path,
            "request": body,
            "status": r.status_code,
            "response": r.json(),
        })
    os.makedirs(args.out, exist_ok=True)
    path = os.path.join(args.out, "service_fixtures.json")
    with open(path, "w") as fh:
        json.dump(recorded, fh, indent=1)
    print(f"wrote {len(recorded)} fixtures to {path}", file=sys.stderr)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(prog="pegkit", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(fn=fn)
        return p

    def add_store(p):
        p.add_argument("--store", help="store directory (default: $PEGKIT_STORE)")

    p = add("run", cmd_run, help="build or resume a level store")
    p.add_argument("--board", required=True, choices=BOARD_IDS)
    p.add_argument("--class", dest="cls", default="A", help="position class (default A)")
    add_store(p)
    p.add_argument("--max-level", type=int, default=None)
    p.add_argument("--partitions", type=int, default=1)
    p.add_argument("--memory-budget", type=int, default=1 << 30, help="bytes")
    p.add_argument("--threads", type=int, default=os.cpu_count())

    p = add("census", cmd_census, help="count solvable symmetric positions by type")
    p.add_argument("--board", required=True, choices=BOARD_IDS)
    p.add_argument("--class", dest="cls", default="A")
    add_store(p)
    p.add_argument("--method", choices=["store", "template"], default="store")
    p.add_argument("--types", help="comma separated symmetry types to keep")
    p.add_argument("--only-class", help="keep one position class")
    p.add_argument("--exclude", choices=BOARD_IDS,
                   help="drop positions already solvable on this board")

    p = add("unique", cmd_unique, help="census of unique-winning-jump puzzles")
    p.add_argument("--board", required=True, choices=BOARD_IDS)
    p.add_argument("--class", dest="cls", default="A")
    add_store(p)
    p.add_argument("--export", metavar="DIR", help="write puzzle records here")

    p = add("solve", cmd_solve, help="solve one position")
    p.add_argument("--board", required=True, choices=BOARD_IDS)
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--grid", help="ASCII grid file, - for stdin")
    src.add_argument("--pegs", help="comma separated hole indices")
    p.add_argument("--target", help="comma separated finishing hole indices")
    p.add_argument("--budget", type=int, default=None, help="search node budget")

    p = add("serve", cmd_serve, help="run the HTTP service")
    add_store(p)
    p.add_argument("--puzzles", help="directory of exported puzzle files")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--budget", type=int, default=20_000_000, help="oracle node budget")

    p = add("boards", cmd_boards, help="list the boards")
    p.add_argument("--json", action="store_true")

    p = add("fixtures", cmd_fixtures, help="record service fixtures for the player tests")
    add_store(p)
    p.add_argument("--puzzles", help="directory of exported puzzle files")
    p.add_argument("--out", required=True, metavar="DIR")

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except SystemExit:
        raise
    except (GridParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except SearchBudgetError:
        print("error: search budget exhausted", file=sys.stderr)
        return 1
    except (levels.StoreCorruptError, levels.StoreTruncatedError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
