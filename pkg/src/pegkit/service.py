"""HTTP facade over the engine.

Stateless JSON service used by the browser player: board descriptors,
exported puzzle lists, and live position analysis (class, symmetry,
solvability, winning jumps).  Solvability is answered from a level store
when one is loaded for the position's class, otherwise by a fresh
bounded oracle search per request.
"""

import json
import os

from fastapi import FastAPI, HTTPException, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from .boards import BOARD_IDS, make_board
from .levels import LevelStore, StoreCorruptError, StoreTruncatedError
from .parity import finishing_holes, named_class, store_pattern
from .solver import SearchBudgetError, Solver

# Node budget for the fallback oracle, roughly two seconds of search.
DEFAULT_ORACLE_BUDGET = 20_000_000


class AnalyzeRequest(BaseModel):
    board: str
    pegs: list[int]


def _load_stores(store_root):
    """LevelStore per (board_id, class_name) found under store_root."""
    stores = {}
    if store_root is None or not os.path.isdir(store_root):
        return stores
    for name in sorted(os.listdir(store_root)):
        board_id, _, cls = name.rpartition("-")
        if board_id not in BOARD_IDS:
            continue
        if not os.path.isfile(os.path.join(store_root, name, "manifest.json")):
            continue
        try:
            store = LevelStore(store_root, board_id, cls)
        except (StoreCorruptError, OSError, ValueError, KeyError):
            continue
        for c in store.class_names:
            stores[(board_id, c)] = store
    return stores


def _load_puzzles(puzzle_dir):
    """All puzzle records from the JSON files in puzzle_dir."""
    records = []
    if puzzle_dir is None or not os.path.isdir(puzzle_dir):
        return records
    for name in sorted(os.listdir(puzzle_dir)):
        if not name.endswith(".json"):
            continue
        with open(os.path.join(puzzle_dir, name)) as fh:
            batch = json.load(fh)
        if isinstance(batch, list):
            records.extend(r for r in batch if isinstance(r, dict) and "board" in r)
    return records


def create_app(store_root=None, puzzle_dir=None, oracle_budget=DEFAULT_ORACLE_BUDGET):
    app = FastAPI(title="pegkit")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    stores = _load_stores(store_root)
    puzzles = _load_puzzles(puzzle_dir)

    @app.exception_handler(RequestValidationError)
    async def malformed(request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"detail": "malformed request"})

    def board_or_404(board_id):
        if board_id not in BOARD_IDS:
            raise HTTPException(status_code=404, detail=f"unknown board {board_id!r}")
        return make_board(board_id)

    def position_from_pegs(board, pegs):
        pos = 0
        for i in pegs:
            bit = 1 << i
            if not 0 <= i < board.n_holes or pos & bit:
                raise HTTPException(status_code=400, detail="malformed request")
            pos |= bit
        return pos

    def analyze(board, pos):
        cls = named_class(board, pos)
        st = board.symmetry_type(pos)
        out = {
            "class": cls.name,
            "symmetry_type": None if st is None else {"type_id": st.type_id, "order": st.order},
            "finishing_holes": [],
            "solvable": False,
            "legal_jumps": [list(j) for j in board.legal_jumps(pos)],
            "winning_jumps": [],
            "method": "class",
        }
        if cls.name in ("EMPTY", "OTHER"):
            # No one-peg position has this class vector, so never solvable.
            return out
        out["finishing_holes"] = list(finishing_holes(board, cls.name))
        n = pos.bit_count()
        if n == 1:
            # A lone peg already sits on a finishing hole of its own class.
            out["solvable"] = True
            return out
        store = stores.get((board.board_id, cls.name))
        if store is not None:
            try:
                out["solvable"] = store.is_solvable(pos)
                out["winning_jumps"] = [list(j) for j in store.winning_jumps(pos)] if out["solvable"] else []
                out["method"] = "store"
                return out
            except StoreTruncatedError:
                pass
        # Fresh solver per request: a warm transposition table would make
        # budget exhaustion depend on request history.
        mask = store_pattern(board, cls.name)
        solver = Solver(board, [i for i in range(board.n_holes) if mask >> i & 1], tt_bits=21)
        try:
            out["solvable"] = solver.is_solvable(pos, budget=oracle_budget)
            if out["solvable"]:
                out["winning_jumps"] = [list(j) for j in solver.winning_jumps(pos, budget=oracle_budget)]
        except SearchBudgetError:
            raise HTTPException(status_code=503, detail="search budget exhausted")
        out["method"] = "oracle"
        return out

    @app.get("/boards")
    def boards():
        return [make_board(b).descriptor() for b in BOARD_IDS]

    @app.get("/puzzles")
    def list_puzzles(board: str | None = None, n: int | None = None):
        if board is not None and board not in BOARD_IDS:
            raise HTTPException(status_code=404, detail=f"unknown board {board!r}")
        out = puzzles
        if board is not None:
            out = [p for p in out if p["board"] == board]
        if n is not None:
            out = [p for p in out if p.get("n_pegs") == n]
        return out

    @app.post("/analyze")
    def analyze_position(req: AnalyzeRequest):
        board = board_or_404(req.board)
        return analyze(board, position_from_pegs(board, req.pegs))

    @app.post("/hint")
    def hint(req: AnalyzeRequest):
        board = board_or_404(req.board)
        pos = position_from_pegs(board, req.pegs)
        if pos.bit_count() <= 1:
            return {"message": "nothing left to solve"}
        result = analyze(board, pos)
        if not result["solvable"]:
            return {"message": "not solvable from here"}
        jump = result["winning_jumps"][0]
        return {"jump": {"from": jump[0], "over": jump[1], "to": jump[2]}}

    return app
