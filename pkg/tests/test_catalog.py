"""Censuses, class ids, unique-jump rows, puzzle export."""

import random

import numpy as np
import pytest

from pegkit import (
    LevelStore,
    Solver,
    finishing_holes,
    make_board,
    named_class,
    run,
    store_pattern,
    unique_jump_census,
    export_puzzles,
)
from pegkit.catalog import _embedded_duplicates, class_ids

import expected
from conftest import random_position


def test_class_ids_match_named_class(board):
    rng = random.Random(107)
    codes = np.array(
        [rng.getrandbits(board.n_holes) for _ in range(3000)], dtype=np.int64
    )
    names = ("EMPTY", "A", "B", "C", "OTHER")
    ids = class_ids(board, codes)
    for pos, cid in zip(codes, ids):
        assert names[cid] == named_class(board, int(pos)).name


def test_unique_jump_rows_from_truncated_store(tmp_path):
    run(tmp_path, "english33", "A", max_level=8)
    store = LevelStore(tmp_path, "english33", "A")
    rows = unique_jump_census(store)
    got = {r.n_pegs: (r.n_jumps, r.count) for r in rows}
    want = {n: v for n, v in expected.ENGLISH_UNIQUE_JUMPS.items() if n <= 8}
    assert got == want
    for row in rows:
        assert len(row.exemplars) == row.count  # default keeps every position


def test_unique_jump_rows_respect_exemplar_cap(tmp_path):
    run(tmp_path, "english33", "A", max_level=8)
    store = LevelStore(tmp_path, "english33", "A")
    rows = unique_jump_census(store, max_exemplars=1)
    for row in rows:
        assert len(row.exemplars) == min(1, row.count)


def test_unique_jump_positions_verified_by_solver(tmp_path):
    run(tmp_path, "english33", "A", max_level=8)
    store = LevelStore(tmp_path, "english33", "A")
    board = store.board
    solver = Solver(board, finishing_holes(board, "A"))
    for row in unique_jump_census(store):
        for code in row.exemplars:
            legal = board.legal_jumps(code)
            wins = solver.winning_jumps(code)
            assert len(legal) == row.n_jumps
            assert len(legal) >= 2
            assert len(wins) == 1


def test_export_puzzles_records(tmp_path):
    run(tmp_path, "english33", "A", max_level=8)
    store = LevelStore(tmp_path, "english33", "A")
    rows = unique_jump_census(store)
    puzzles = export_puzzles(store, rows=rows)
    assert len(puzzles) == sum(r.count for r in rows)
    board = store.board
    for p in puzzles:
        assert p["board"] == "english33"
        assert p["class"] == "A"
        pos = 0
        for i in p["pegs"]:
            pos |= 1 << i
        assert pos == p["code"]
        assert pos.bit_count() == p["n_pegs"]
        assert len(board.legal_jumps(pos)) == p["n_jumps"]
        assert p["n_winning_jumps"] == 1
        assert tuple(p["hint"]) == store.winning_jumps(pos)[0]
        assert p["unique_solution"] in (True, False, None)
        f, o, t = p["hint"]
        assert pos >> f & 1 and pos >> o & 1 and not pos >> t & 1


def test_export_respects_per_level_cap(tmp_path):
    run(tmp_path, "english33", "A", max_level=8)
    store = LevelStore(tmp_path, "english33", "A")
    rows = unique_jump_census(store)
    puzzles = export_puzzles(store, rows=rows, max_per_level=1)
    assert len(puzzles) == len(rows)


def test_embedded_duplicates_flags_cross_solvable(english_a):
    french = make_board("french37")
    english = english_a.board
    rng = random.Random(109)
    embeddable = []
    for _ in range(200):
        pos = random_position(rng, english, 4)
        fpos = 0
        for x, y in english.holes_from_position(pos):
            fpos |= 1 << french.index[(x, y)]
        embeddable.append((pos, fpos))
    codes = np.array([f for _, f in embeddable], dtype=np.int64)
    dup = _embedded_duplicates(french, codes, 4, english_a)
    for (epos, _), flagged in zip(embeddable, dup):
        assert bool(flagged) == english_a.is_solvable(epos)


def test_embedded_duplicates_ignores_positions_using_extra_holes(english_a):
    french = make_board("french37")
    extra = [c for c in french.holes if c not in english_a.board.index]
    assert len(extra) == 4
    pos = 0
    for c in extra:
        pos |= 1 << french.index[c]
    codes = np.array([pos], dtype=np.int64)
    dup = _embedded_duplicates(french, codes, 4, english_a)
    assert not dup.any()
